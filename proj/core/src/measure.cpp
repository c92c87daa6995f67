#include "cfn/measure.hpp"

#include "cfn/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace cfn {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check(const RationalInterval& iv) {
  if (iv.lo > iv.hi || iv.lo < 0 || iv.hi > 1) throw DomainError("measure needs an interval inside [0,1]");
}

}  // namespace

MeasureValue mu_rcf(const RationalInterval& iv) {
  check(iv);
  if (iv.lo == iv.hi) return {0.0, 0.0};
  double a = to_double(iv.lo);
  double w = to_double(Rational(iv.hi - iv.lo));
  double v = std::log1p(w / (1.0 + a)) / std::numbers::ln2;
  return {v, 8 * kEps * v};
}

MeasureValue mu_rcf(const CylinderSpec& c) { return mu_rcf(c.interval); }

MeasureValue mu_ocf(const RationalInterval& iv) {
  check(iv);
  if (iv.lo == iv.hi) return {0.0, 0.0};
  const double G = std::numbers::phi;
  double a = to_double(iv.lo);
  double b = to_double(iv.hi);
  double w = to_double(Rational(iv.hi - iv.lo));
  double v = (std::log1p(w / (G + a - 1.0)) + std::log1p(w / (G + 1.0 - b))) / (3.0 * std::log(G));
  return {v, 16 * kEps * v};
}

MeasureValue mu_ocf(const CylinderSpec& c) { return mu_ocf(c.interval); }

bool has_finite_measure(System sys) {
  return sys.kind == SystemKind::RCF || sys.kind == SystemKind::OCF || sys.is_base();
}

MeasureValue invariant_measure(System sys, const RationalInterval& iv) {
  switch (sys.kind) {
    case SystemKind::RCF: return mu_rcf(iv);
    case SystemKind::OCF: return mu_ocf(iv);
    case SystemKind::BASE: {
      check(iv);
      double v = to_double(iv.length());
      return {v, kEps * v};
    }
    default: break;
  }
  throw DomainError("no finite invariant measure for " + sys.name());
}

double rcf_density(double x) { return 1.0 / ((1.0 + x) * std::numbers::ln2); }

double ocf_density(double x) {
  const double G = std::numbers::phi;
  return (1.0 / (G + x - 1.0) + 1.0 / (G + 1.0 - x)) / (3.0 * std::log(G));
}

}  // namespace cfn
