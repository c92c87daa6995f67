#pragma once

#include "cfn/bigint.hpp"
#include "cfn/digit.hpp"

namespace cfn {

/// 2x2 integer matrix acting as t -> (a t + b) / (c t + d).
struct Mobius {
  Integer a = 1, b = 0, c = 0, d = 1;

  static Mobius identity() { return {}; }
  /// t -> 1 / (alpha + epsilon t)
  static Mobius of_digit(const Digit& dg);

  /// this * other (apply other first).
  Mobius compose(const Mobius& other) const;
  /// Right-multiplies by the digit matrix in place.
  void push(const Digit& dg);
  /// Value at t; throws InvalidDigit if the denominator vanishes.
  Rational apply(const Rational& t) const;
  Integer det() const { return a * d - b * c; }
};

/// Signed continuants p_n (numerator) and q_n (denominator) for n = 0..|s|.
struct Continuants {
  std::vector<Integer> p;
  std::vector<Integer> q;
};

Continuants continuants(const DigitString& s);
Mobius prefix_map(const DigitString& s);

/// Exact value 1/(a1 + e1/(a2 + ...)); empty string is 0.
Rational eval_finite_cf(const DigitString& s);
Rational eval_finite_cf(const std::vector<Digit>& s);

}  // namespace cfn
