#pragma once

#include "cfn/bigint.hpp"
#include "cfn/interval.hpp"

#include <optional>
#include <string>

namespace cfn {

/// (a + b sqrt(D)) / c with c > 0, D > 1 square-free-ish (not a perfect square), gcd normalised.
class Quadratic {
 public:
  Quadratic(Integer a, Integer b, Integer c, Integer D);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& D() const { return D_; }

  /// Value when b == 0.
  std::optional<Rational> as_rational() const;

  Integer floor() const;
  int sign() const;
  int compare(const Rational& r) const;

  Quadratic add(const Rational& r) const;
  Quadratic mul(const Rational& r) const;
  Quadratic neg() const { return mul(Rational(-1)); }
  /// Throws DomainError on zero.
  Quadratic reciprocal() const;
  /// (A y + B) / (C y + Dd) for this value y.
  Quadratic mobius(const Integer& A, const Integer& B, const Integer& C, const Integer& Dd) const;

  /// Rational interval of width <= 10^-k containing the value.
  RationalInterval enclose(unsigned k) const;
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const Quadratic&, const Quadratic&) = default;

 private:
  void normalize();
  Integer a_, b_, c_, D_;
};

}  // namespace cfn
