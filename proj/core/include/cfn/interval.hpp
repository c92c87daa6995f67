#pragma once

#include "cfn/bigint.hpp"

#include <string>

namespace cfn {

struct RationalInterval {
  Rational lo = 0, hi = 0;
  bool lo_closed = true, hi_closed = true;

  static RationalInterval closed(const Rational& lo, const Rational& hi) { return {lo, hi, true, true}; }
  static RationalInterval open(const Rational& lo, const Rational& hi) { return {lo, hi, false, false}; }
  static RationalInterval left_open(const Rational& lo, const Rational& hi) { return {lo, hi, false, true}; }
  static RationalInterval right_open(const Rational& lo, const Rational& hi) { return {lo, hi, true, false}; }
  static RationalInterval unit() { return closed(0, 1); }

  bool empty() const;
  bool contains(const Rational& x) const;
  Rational length() const { return empty() ? Rational(0) : Rational(hi - lo); }
  RationalInterval intersect(const RationalInterval& o) const;
  /// Same closure of endpoints, ignoring open/closed flags.
  bool same_hull(const RationalInterval& o) const { return lo == o.lo && hi == o.hi; }
  std::string to_string() const;

  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

}  // namespace cfn
