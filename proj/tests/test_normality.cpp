#include "cfn/errors.hpp"
#include "cfn/expansions.hpp"
#include "cfn/normality.hpp"
#include "cfn/rewrite.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

using namespace cfn;

namespace {

const double kGauss1 = std::log(4.0 / 3.0) / std::log(2.0);

DigitString none() { return DigitString(System::rcf(), {}); }

DigitStream constant_rcf(std::uint64_t a) { return DigitStream::periodic(none(), DigitString::rcf({a})); }

DigitString b3(std::vector<std::uint64_t> v) { return DigitString::base(3, v); }

// Shared large sample: 10^5 RCF digits need about 3.4 bits per digit.
const DigitStream& big_sample(std::uint64_t seed) {
  static std::map<std::uint64_t, DigitStream> cache;
  auto it = cache.find(seed);
  if (it == cache.end()) it = cache.emplace(seed, sample_rcf_stream(seed, 360000)).first;
  return it->second;
}

}  // namespace

TEST_CASE("count_occurrences examples") {
  auto c = count_occurrences(constant_rcf(1), DigitString::rcf({1, 1}), 10);
  CHECK(c.count == 10);
  CHECK(c.frequency == 1.0);
  REQUIRE(c.measure);
  CHECK(c.measure->value == doctest::Approx(std::log2(10.0 / 9.0)));
  REQUIRE(c.ps_ratio);

  auto third = expansion_stream(System::base_b(3), ExactNumber::rational(1, 3));
  auto z = count_occurrences(third, b3({0, 0}), 5);
  CHECK(z.count == 4);
  CHECK(z.measure->value == doctest::Approx(1.0 / 9));

  auto r = count_occurrences(big_sample(1), DigitString::rcf({1}), 100000);
  CHECK(std::fabs(r.frequency - kGauss1) < 0.01);

  CHECK_THROWS_AS(count_occurrences(DigitStream::finite(DigitString::rcf({1, 1})), DigitString::rcf({1, 1}), 5),
                  InsufficientDigits);
  auto e = count_occurrences(DigitStream::finite(DigitString::rcf({1})), DigitString::rcf({1}), 0);
  CHECK(e.count == 0);
  CHECK(e.frequency == 0);
}

TEST_CASE("count bounds and finite additivity") {
  for (int it = 0; it < 300; ++it) {
    unsigned b = static_cast<unsigned>(testing::uniform(2, 5));
    auto x = ExactNumber::rational(testing::random_unit_rational(600));
    auto orbit = expansion_stream(System::base_b(b), x);
    std::size_t len = testing::uniform(1, 3), N = testing::uniform(1, 150);
    std::vector<std::uint64_t> v(len);
    for (auto& d : v) d = testing::uniform(0, b - 1);
    auto s = DigitString::base(b, v);
    auto c = count_occurrences(orbit, s, N);
    CHECK(c.count <= N);
    CHECK(c.frequency >= 0);
    CHECK(c.frequency <= 1);
    std::size_t sum = 0;
    for (std::uint64_t d = 0; d < b; ++d) {
      auto ext = v;
      ext.push_back(d);
      sum += count_occurrences(orbit, DigitString::base(b, ext), N).count;
    }
    CHECK(sum <= c.count);
    CHECK(c.count - sum <= 1);
  }
  for (int it = 0; it < 100; ++it) {
    auto orbit = DigitStream::finite(testing::random_rcf(400, 4));
    auto s = testing::random_rcf(testing::uniform(1, 2), 4);
    std::size_t N = 300;
    auto c = count_occurrences(orbit, s, N);
    std::size_t sum = 0;
    for (std::uint64_t d = 1; d <= 4; ++d) sum += count_occurrences(orbit, s.concat(DigitString::rcf({d})), N).count;
    CHECK(c.count - sum <= 1);
  }
}

TEST_CASE("Pyatetskii-Shapiro finite-N check") {
  std::vector<DigitString> strings;
  for (std::uint64_t a = 1; a <= 4; ++a) {
    strings.push_back(DigitString::rcf({a}));
    for (std::uint64_t b = 1; b <= 3; ++b) strings.push_back(DigitString::rcf({a, b}));
  }
  auto rep = ps_check(big_sample(2), strings, 100000, 2);
  CHECK(rep.all_pass());
  CHECK(rep.entries.size() == strings.size());

  auto golden = constant_rcf(1);
  auto g = ps_check(golden, {DigitString::rcf({2}), DigitString::rcf({1, 1})}, 50, 2);
  CHECK(g.entries[0].pass);
  CHECK(g.entries[0].stats.count == 0);
  CHECK_FALSE(g.entries[1].pass);
  double mu11 = g.entries[1].stats.measure->value;
  CHECK(ps_check(golden, {DigitString::rcf({1, 1})}, 50, 1 / mu11 + 1e-6).all_pass());
  CHECK_FALSE(ps_check(golden, {DigitString::rcf({1, 1})}, 50, 1 / mu11 - 1e-3).all_pass());

  auto empty = ps_check(golden, strings, 0, 2);
  CHECK(empty.entries.empty());
  CHECK(empty.all_pass());
  CHECK_THROWS(ps_check(golden, strings, 10, 0.5));
}

TEST_CASE("power subset inequality") {
  auto s01 = b3({0, 1});
  auto cx = power_subset_check(counterexample_orbit(), s01, 2, 100);
  CHECK(cx.lhs == 10);
  // "01" sits at block positions 1, 3, 5 and 8: four windows per 20 digits.
  CHECK(cx.rhs == 40);
  CHECK(cx.ok);
  for (int it = 0; it < 200; ++it) {
    auto orbit = DigitStream::finite(testing::random_rcf(900, 3));
    auto s = testing::random_rcf(testing::uniform(1, 2), 3);
    auto one = power_subset_check(orbit, s, 1, 800);
    CHECK(one.lhs == one.rhs);
  }
  for (int it = 0; it < 8; ++it) {
    auto x = ExactNumber::rational(testing::random_unit_rational(30100));
    auto orbit = expansion_stream(System::base_b(2), x);
    std::vector<std::uint64_t> v(3);
    for (auto& d : v) d = testing::uniform(0, 1);
    auto r = power_subset_check(orbit, DigitString::base(2, v), 3, 10000);
    CHECK(r.lhs <= r.rhs);
    CHECK(r.ok);
  }
  CHECK_THROWS(power_subset_check(counterexample_orbit(), b3({0, 1, 2}), 2, 10));
  CHECK_THROWS(power_subset_check(counterexample_orbit(), s01, 0, 10));
  CHECK_THROWS_AS(power_subset_check(DigitStream::finite(b3({0, 1})), s01, 2, 10), InsufficientDigits);
}

TEST_CASE("counterexample exact counts") {
  auto r = schweiger_counterexample(100);
  CHECK(r.lhs == 10);
  CHECK(r.rhs == 30);
  CHECK(r.lhs_rate == doctest::Approx(0.1));
  auto z = schweiger_counterexample(0);
  CHECK(z.lhs == 0);
  CHECK(z.rhs == 0);
  CHECK(counterexample_pattern_mismatches(50) == 0);
  CHECK(counterexample_block().size() == 20);
  for (std::size_t N = 100; N <= 3000; N += 10) {
    auto c = schweiger_counterexample(N);
    long diff = static_cast<long>(c.rhs) - static_cast<long>(c.lhs) - static_cast<long>(N / 5);
    REQUIRE(std::labs(diff) <= 3);
    REQUIRE(c.lhs < c.rhs);
  }
}

TEST_CASE("membership in E(i)") {
  auto d = counterexample_orbit().take(60).digits();
  auto s = b3({0, 1}).digits();
  CHECK(in_E(d, 1, 5, s));
  CHECK(in_E(d, 3, 3, s));
  CHECK(in_E(d, 5, 1, s));
  CHECK_FALSE(in_E(d, 1, 1, s));
  CHECK_FALSE(in_E(d, 0, 1, s));
}

TEST_CASE("insertion and singularization census") {
  auto odd = insertion_singularization_census(constant_rcf(3), 1000);
  CHECK(odd.insertions == 0);
  CHECK(odd.singularizations == 0);
  CHECK(odd.matches());
  auto ex = insertion_singularization_census(DigitStream::periodic(DigitString::rcf({4}), DigitString::rcf({3})), 4);
  CHECK(ex.insertions == 3);
  CHECK(ex.singularizations == 0);
  CHECK(ex.matches());
  auto big = insertion_singularization_census(big_sample(3), 10000);
  CHECK(big.matches());
  CHECK(big.insertions > 1000);
  CHECK(big.singularizations > 1000);
  for (int it = 0; it < 500; ++it) {
    auto s = testing::random_rcf_busy(testing::uniform(1, 80));
    auto c = insertion_singularization_census(DigitStream::finite(s), s.size());
    REQUIRE(c.matches());
    std::size_t weighted = 0;
    for (auto& [k, v] : c.histogram) weighted += v;
    CHECK(weighted == c.patterns);
  }
  auto bounded = insertion_singularization_census(big_sample(3), 10000, 3);
  CHECK(bounded.truncated_patterns > 0);
  CHECK_FALSE(bounded.matches());
  CHECK_THROWS_AS(insertion_singularization_census(DigitStream::finite(DigitString::rcf({2})), 5), InsufficientDigits);
}

TEST_CASE("slope of m(n)") {
  auto one = estimate_m_slope(constant_rcf(3), 2000);
  CHECK(one.c_hat == 1.0);
  CHECK(one.spread == 0);
  auto two = estimate_m_slope(DigitStream::periodic(DigitString::rcf({4}), DigitString::rcf({3})), 4000);
  CHECK(std::fabs(two.c_hat - 2) < 1e-3);
  REQUIRE(two.table.size() == 4);
  CHECK(two.table[0].first == 500);
  std::vector<double> finals;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto r = estimate_m_slope(big_sample(seed), 100000);
    CHECK(r.spread <= 0.01);
    finals.push_back(r.c_hat);
  }
  auto [lo, hi] = std::minmax_element(finals.begin(), finals.end());
  CHECK(*hi - *lo <= 0.02);
  CHECK_THROWS_AS(estimate_m_slope(DigitStream::finite(DigitString::rcf({3, 3})), 1000), InsufficientDigits);
}

TEST_CASE("m(n) bounds") {
  for (int it = 0; it < 300; ++it) {
    auto s = testing::random_rcf_busy(testing::uniform(10, 200));
    ConversionOptions o;
    o.close_finite = false;
    auto t = rcf_to_ocf(DigitStream::finite(s), o);
    for (std::size_t n = 1; n <= t.decided(); ++n) {
      REQUIRE(t.m_of(n) + 1 >= n / 2);
      REQUIRE(t.m_of(n) <= 2 * n);
    }
  }
}

TEST_CASE("trigger bijection") {
  auto t31 = DigitString::ocf({{3, 1}});
  auto odd = trigger_bijection_check(constant_rcf(3), t31, 1000, 8);
  CHECK(odd.direct == 1000);
  CHECK(std::labs(static_cast<long>(odd.via_triggers) - 1000) <= 2);
  CHECK(odd.pass);
  auto ex = trigger_bijection_check(DigitStream::periodic(DigitString::rcf({4}), DigitString::rcf({3})),
                                    DigitString::ocf({{3, -1}}), 1000, 8);
  CHECK(std::labs(static_cast<long>(ex.direct) - 500) <= 1);
  CHECK(ex.pass);
  auto rnd = trigger_bijection_check(big_sample(4), t31, 10000, 16);
  CHECK(rnd.pass);
  CHECK(rnd.m_inverse > 0);
  if (rnd.complete) CHECK(std::labs(static_cast<long>(rnd.via_triggers) - static_cast<long>(rnd.direct)) <= static_cast<long>(rnd.boundary_slack));
  auto small = trigger_bijection_check(big_sample(4), t31, 2000, 3);
  CHECK_FALSE(small.complete);
  CHECK(small.via_triggers <= small.direct + small.boundary_slack);
}

TEST_CASE("ECF ratio normality") {
  auto x = big_sample(5);
  auto s = DigitString(System::ecf(), {Digit(2, 1)});
  auto same = ecf_ratio_normality(x, s, s, 20000);
  REQUIRE(same.ratio);
  CHECK(*same.ratio == 1.0);
  auto evens = ecf_ratio_normality(constant_rcf(2), s, DigitString(System::ecf(), {Digit(4, 1)}), 500);
  CHECK(evens.count_s == 500);
  CHECK_FALSE(evens.ratio.has_value());
  CHECK_THROWS_AS(ecf_ratio_normality(DigitStream::finite(DigitString::rcf({2, 2})), s, s, 500), InsufficientDigits);
}

TEST_CASE("sample points") {
  auto a = sample_point(7, 256), b = sample_point(7, 256);
  CHECK(a.as_rational() == b.as_rational());
  CHECK(sample_point(8, 256).as_rational() != a.as_rational());
  auto p = sample_point(1, 128).as_rational();
  CHECK(p >= 0);
  CHECK(p < 1);
  Integer den = 1;
  den <<= 128;
  CHECK(Rational(p * Rational(den)).get_den() == 1);
  CHECK_THROWS(sample_point(1, 32));
  double total = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    total += count_occurrences(sample_rcf_stream(seed, 4096), DigitString::rcf({1}), 1000).frequency;
  }
  CHECK(std::fabs(total / 100 - kGauss1) < 0.01);
}
