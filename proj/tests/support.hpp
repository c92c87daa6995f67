#pragma once

#include "cfn/bigint.hpp"
#include "cfn/digit.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testing {

using cfn::Digit;
using cfn::DigitString;
using cfn::Rational;
using cfn::System;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

// Evaluates 1/(a1 + e1/(a2 + ...)) from the tail, independent of the continuant code.
inline Rational nested_eval(const std::vector<Digit>& ds) {
  if (ds.empty()) return 0;
  Rational t = 0;
  for (std::size_t i = ds.size(); i-- > 0;) {
    Rational den = Rational(static_cast<unsigned long>(ds[i].alpha)) + t;
    t = Rational(1) / den;
    if (i > 0) t *= ds[i - 1].epsilon;
  }
  return t;
}

inline DigitString random_rcf(std::size_t len, std::uint64_t max_alpha) {
  std::vector<std::uint64_t> a(len);
  for (auto& v : a) v = uniform(1, max_alpha);
  return DigitString::rcf(a);
}

// Biased towards 1s and even digits so rewrites fire often.
inline DigitString random_rcf_busy(std::size_t len) {
  std::vector<std::uint64_t> a(len);
  for (auto& v : a) {
    auto r = uniform(0, 9);
    v = r < 4 ? 1 : r < 7 ? 2 * uniform(1, 3) : 2 * uniform(1, 3) + 1;
  }
  return DigitString::rcf(a);
}

inline DigitString random_ocf(std::size_t len, std::uint64_t max_alpha) {
  std::vector<Digit> ds;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t a = 2 * uniform(0, (max_alpha - 1) / 2) + 1;
    int e = (a == 1 || uniform(0, 1)) ? 1 : -1;
    ds.emplace_back(a, e);
  }
  return DigitString(System::ocf(), ds);
}

inline DigitString random_general(std::size_t len, std::uint64_t max_alpha) {
  std::vector<Digit> ds;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t a = uniform(1, max_alpha);
    int e = (a == 1 || uniform(0, 1)) ? 1 : -1;
    ds.emplace_back(a, e);
  }
  return DigitString(System::general(), ds);
}

inline Rational random_unit_rational(unsigned bits) {
  cfn::Integer den = 1;
  den <<= bits;
  cfn::Integer k = 0;
  for (unsigned i = 0; i < (bits + 63) / 64; ++i) {
    k <<= 64;
    k += cfn::from_u64(rng()());
  }
  k %= den;
  return cfn::make_rational(k, den);
}

}  // namespace testing
