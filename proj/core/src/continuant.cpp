#include "cfn/continuant.hpp"

#include "cfn/errors.hpp"

namespace cfn {

Mobius Mobius::of_digit(const Digit& dg) {
  return {0, 1, Integer(dg.epsilon), from_u64(dg.alpha)};
}

Mobius Mobius::compose(const Mobius& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

void Mobius::push(const Digit& dg) {
  Integer al = from_u64(dg.alpha);
  Integer na = dg.epsilon * b;
  Integer nb = a + al * b;
  Integer nc = dg.epsilon * d;
  Integer nd = c + al * d;
  a.swap(na);
  b.swap(nb);
  c.swap(nc);
  d.swap(nd);
}

Rational Mobius::apply(const Rational& t) const {
  Rational num = Rational(a) * t + Rational(b);
  Rational den = Rational(c) * t + Rational(d);
  if (den == 0) throw InvalidDigit("continued fraction denominator vanishes");
  Rational r = num / den;
  r.canonicalize();
  return r;
}

Continuants continuants(const DigitString& s) {
  Continuants out;
  Mobius m;
  out.p.push_back(m.b);
  out.q.push_back(m.d);
  for (const auto& dg : s) {
    m.push(dg);
    out.p.push_back(m.b);
    out.q.push_back(m.d);
  }
  return out;
}

Mobius prefix_map(const DigitString& s) {
  Mobius m;
  for (const auto& dg : s) m.push(dg);
  return m;
}

Rational eval_finite_cf(const std::vector<Digit>& s) {
  Mobius m;
  for (const auto& dg : s) {
    if (!dg.is_valid()) throw InvalidDigit("invalid digit " + to_string(dg));
    m.push(dg);
  }
  if (m.d == 0) throw InvalidDigit("continued fraction denominator vanishes");
  return make_rational(m.b, m.d);
}

Rational eval_finite_cf(const DigitString& s) { return eval_finite_cf(s.digits()); }

}  // namespace cfn
