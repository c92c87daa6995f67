#pragma once

#include "cfn/cylinder.hpp"

namespace cfn {

struct MeasureValue {
  double value = 0;
  double error_bound = 0;
};

MeasureValue mu_rcf(const RationalInterval& iv);
MeasureValue mu_rcf(const CylinderSpec& c);
MeasureValue mu_ocf(const RationalInterval& iv);
MeasureValue mu_ocf(const CylinderSpec& c);
/// Lebesgue measure for BASE(b); RCF/OCF as above. Throws DomainError for ECF and GENERAL.
MeasureValue invariant_measure(System sys, const RationalInterval& iv);
bool has_finite_measure(System sys);

/// Densities, for quadrature cross-checks.
double rcf_density(double x);
double ocf_density(double x);

}  // namespace cfn
