#include "cfn/exact_number.hpp"

#include "cfn/errors.hpp"

namespace cfn {

namespace {

void check_unit(const Rational& r) {
  if (r < 0 || r > 1) throw DomainError("value " + r.get_str() + " outside [0,1]");
}

}  // namespace

ExactNumber ExactNumber::rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  check_unit(c);
  return ExactNumber(c);
}

ExactNumber ExactNumber::rational(const Integer& p, const Integer& q) {
  if (q == 0) throw DomainError("zero denominator");
  return rational(make_rational(p, q));
}

ExactNumber ExactNumber::interval(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw DomainError("interval with lo > hi");
  check_unit(lo);
  check_unit(hi);
  return ExactNumber(RationalInterval::closed(lo, hi));
}

ExactNumber ExactNumber::quadratic(const Quadratic& q) {
  if (auto r = q.as_rational()) return rational(*r);
  if (q.sign() < 0 || q.compare(Rational(1)) > 0) throw DomainError("quadratic value outside [0,1]");
  return ExactNumber(q);
}

double ExactNumber::to_double() const {
  if (is_rational()) return cfn::to_double(as_rational());
  if (is_interval()) return cfn::to_double(Rational((as_interval().lo + as_interval().hi) / 2));
  return as_quadratic().to_double();
}

std::string ExactNumber::to_string() const {
  if (is_rational()) return as_rational().get_str();
  if (is_interval()) return as_interval().to_string();
  return as_quadratic().to_string();
}

}  // namespace cfn
