#include "cfn/bigint.hpp"

#include <cmath>

namespace cfn {

double to_double(const Rational& r) {
  if (r == 0) return 0.0;
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, r.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, r.get_den_mpz_t());
  return std::ldexp(mn / md, static_cast<int>(en - ed));
}

}  // namespace cfn
