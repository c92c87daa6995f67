#include "cfn/interval.hpp"

namespace cfn {

bool RationalInterval::empty() const {
  if (lo > hi) return true;
  if (lo == hi) return !(lo_closed && hi_closed);
  return false;
}

bool RationalInterval::contains(const Rational& x) const {
  bool above = lo_closed ? x >= lo : x > lo;
  bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

RationalInterval RationalInterval::intersect(const RationalInterval& o) const {
  RationalInterval r;
  if (lo > o.lo) { r.lo = lo; r.lo_closed = lo_closed; }
  else if (lo < o.lo) { r.lo = o.lo; r.lo_closed = o.lo_closed; }
  else { r.lo = lo; r.lo_closed = lo_closed && o.lo_closed; }
  if (hi < o.hi) { r.hi = hi; r.hi_closed = hi_closed; }
  else if (hi > o.hi) { r.hi = o.hi; r.hi_closed = o.hi_closed; }
  else { r.hi = hi; r.hi_closed = hi_closed && o.hi_closed; }
  return r;
}

std::string RationalInterval::to_string() const {
  return std::string(lo_closed ? "[" : "(") + lo.get_str() + ", " + hi.get_str() + (hi_closed ? "]" : ")");
}

}  // namespace cfn
