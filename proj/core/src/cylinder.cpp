#include "cfn/cylinder.hpp"

#include "cfn/errors.hpp"

namespace cfn {

namespace {

Rational inv(const Integer& n) { return make_rational(1, n); }

bool decreasing_branch(System sys, const Digit& d) { return !sys.is_base() && d.epsilon == 1; }

}  // namespace

RationalInterval rank1_interval(System sys, const Digit& d) {
  if (!is_admissible(sys, {d})) throw InadmissibleString("digit " + to_string(d) + " not admissible in " + sys.name());
  Integer a = from_u64(d.alpha);
  switch (sys.kind) {
    case SystemKind::RCF:
      return RationalInterval::left_open(inv(a + 1), inv(a));
    case SystemKind::OCF:
    case SystemKind::ECF:
      if (d.epsilon == 1) return RationalInterval::right_open(inv(a + 1), inv(a));
      return RationalInterval::right_open(inv(a), inv(a - 1));
    case SystemKind::BASE: {
      Integer v = from_u64(d.value());
      return RationalInterval::right_open(make_rational(v, sys.base), make_rational(v + 1, sys.base));
    }
    case SystemKind::GENERAL: break;
  }
  throw InadmissibleString("system " + sys.name() + " has no rank-1 partition");
}

Rational inverse_branch(System sys, const Digit& d, const Rational& t) {
  if (sys.is_base()) {
    Rational r = (Rational(from_u64(d.value())) + t) / Rational(sys.base);
    r.canonicalize();
    return r;
  }
  Rational den = Rational(from_u64(d.alpha)) + Rational(d.epsilon) * t;
  if (den == 0) throw InvalidDigit("inverse branch pole");
  Rational r = 1 / den;
  r.canonicalize();
  return r;
}

CylinderSpec cylinder_interval(const DigitString& s) {
  System sys = s.system();
  if (sys.kind == SystemKind::GENERAL) throw InadmissibleString("GENERAL strings have no cylinder");
  auto err = admissibility_error(sys, s.digits());
  if (!err.empty()) throw InadmissibleString(err);
  if (s.empty()) return {s, RationalInterval::right_open(0, 1)};
  RationalInterval J = rank1_interval(sys, s[s.size() - 1]);
  for (std::size_t k = s.size() - 1; k-- > 0;) {
    const Digit& d = s[k];
    Rational x1 = inverse_branch(sys, d, J.lo);
    Rational x2 = inverse_branch(sys, d, J.hi);
    RationalInterval img;
    if (decreasing_branch(sys, d)) img = {x2, x1, J.hi_closed, J.lo_closed};
    else img = {x1, x2, J.lo_closed, J.hi_closed};
    J = rank1_interval(sys, d).intersect(img);
  }
  return {s, J};
}

}  // namespace cfn
