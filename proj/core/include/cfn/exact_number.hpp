#pragma once

#include "cfn/bigint.hpp"
#include "cfn/interval.hpp"
#include "cfn/quadratic.hpp"

#include <string>
#include <variant>

namespace cfn {

/// A point of [0,1]: exact rational, closed rational interval, or quadratic irrational.
class ExactNumber {
 public:
  using Value = std::variant<Rational, RationalInterval, Quadratic>;

  static ExactNumber rational(const Rational& r);
  static ExactNumber rational(const Integer& p, const Integer& q);
  /// Closed interval [lo, hi].
  static ExactNumber interval(const Rational& lo, const Rational& hi);
  static ExactNumber quadratic(const Quadratic& q);

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_interval() const { return std::holds_alternative<RationalInterval>(v_); }
  bool is_quadratic() const { return std::holds_alternative<Quadratic>(v_); }

  const Rational& as_rational() const { return std::get<Rational>(v_); }
  const RationalInterval& as_interval() const { return std::get<RationalInterval>(v_); }
  const Quadratic& as_quadratic() const { return std::get<Quadratic>(v_); }
  const Value& value() const { return v_; }

  double to_double() const;
  std::string to_string() const;

 private:
  explicit ExactNumber(Value v) : v_(std::move(v)) {}
  Value v_;
};

}  // namespace cfn
