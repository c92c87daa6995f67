#pragma once

#include "cfn/digit.hpp"
#include "cfn/interval.hpp"

namespace cfn {

struct CylinderSpec {
  DigitString prefix;
  RationalInterval interval;
};

/// Rank-1 partition element I_d for RCF, OCF, ECF and BASE(b).
RationalInterval rank1_interval(System sys, const Digit& d);

/// C_s = I_{d1} intersected with the preimage of C_{tail} under the first branch.
/// Throws InadmissibleString for strings outside their system.
CylinderSpec cylinder_interval(const DigitString& s);

/// Inverse branch of the shift for digit d: t -> 1/(alpha + eps t), or (v + t)/b for BASE.
Rational inverse_branch(System sys, const Digit& d, const Rational& t);

}  // namespace cfn
