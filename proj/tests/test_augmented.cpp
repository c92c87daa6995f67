#include "cfn/augmented.hpp"
#include "cfn/errors.hpp"
#include "cfn/expansions.hpp"
#include "cfn/forward.hpp"
#include "cfn/rewrite.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cfn;

namespace {

AugmentedPoint point(const DigitString& pre, const DigitString& per, int a) { return {periodic_point(pre, per), a}; }

DigitString none() { return DigitString(System::rcf(), {}); }

ConversionOptions prefix_mode() {
  ConversionOptions o;
  o.close_finite = false;
  return o;
}

}  // namespace

TEST_CASE("step consumes one digit") {
  auto sys = rcf_star();
  auto p = step(sys, point(none(), DigitString::rcf({3}), 1));
  CHECK(p.a == 1);
  auto q = step(sys, point(none(), DigitString::rcf({2}), 1));
  CHECK(q.a == 2);
  CHECK(rcf_digits(q.x, 3).digits == DigitString::rcf({2, 2, 2}));
  auto e = ecf_aug();
  CHECK(step(e, AugmentedPoint{ExactNumber::rational(1, 3), 3}).a == 2);
  CHECK(step(e, AugmentedPoint{ExactNumber::rational(1, 2), 3}).a == 2);
  CHECK_THROWS_AS(step(sys, AugmentedPoint{ExactNumber::rational(0, 1), 1}), InsufficientDigits);
}

TEST_CASE("RCF* tables") {
  auto sys = rcf_star();
  CHECK(sys.transition(Digit(3, 1), 1) == 1);
  CHECK(sys.transition(Digit(3, 1), 2) == 2);
  CHECK(sys.transition(Digit(2, 1), 1) == 2);
  CHECK(sys.transition(Digit(2, 1), 2) == 1);
  for (int a : {1, 2}) CHECK(rcf_star_after(DigitString::rcf({2, 2}), a) == a);
  CHECK_THROWS_AS(sys.transition(Digit(2, 1), 3), std::invalid_argument);
}

TEST_CASE("ECF augmentation table") {
  auto e = ecf_aug();
  CHECK(e.transition(Digit(2, 1), 1) == 1);
  CHECK(e.transition(Digit(3, 1), 1) == 3);
  CHECK(e.transition(Digit(2, 1), 3) == 2);
  CHECK(e.transition(Digit(5, 1), 3) == 2);
  CHECK(e.transition(Digit(2, 1), 2) == 3);
  CHECK(e.transition(Digit(3, 1), 2) == 1);
  auto v = augmented_values(e, DigitString::rcf({3, 3, 3}), 1);
  CHECK(v == std::vector<int>{1, 3, 2});
}

TEST_CASE("transition tables must be bijections") {
  CHECK_THROWS_AS(AugmentedSystem("bad", System::rcf(), {1, 2}, {1, 1}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(AugmentedSystem("bad", System::rcf(), {1, 2}, {1, 3}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(AugmentedSystem("bad", System::rcf(), {1, 2}, {1}, {1, 2}), std::invalid_argument);
  auto s = rcf_star();
  CHECK_THROWS_AS(s.set_digit_table(4, {2, 2}), std::invalid_argument);
  s.set_digit_table(4, {1, 2});
  CHECK(s.transition(Digit(4, 1), 1) == 1);
  CHECK(s.transition(Digit(6, 1), 1) == 2);
}

TEST_CASE("staggered strings") {
  auto r = is_staggered(rcf_star(), DigitString::rcf({2}));
  CHECK(r.staggered);
  CHECK(r.witness.size() == 4);
  CHECK(r.witness.at({2, 1}) == std::size_t(1));
  CHECK(r.witness.at({1, 1}) == std::size_t(0));
  CHECK(is_staggered(ecf_aug(), DigitString::rcf({3, 3})).staggered);
  auto no = is_staggered(rcf_star(), DigitString::rcf({3}));
  CHECK_FALSE(no.staggered);
  CHECK_FALSE(no.witness.at({1, 2}).has_value());
  CHECK_FALSE(is_staggered(ecf_aug(), DigitString::rcf({3})).staggered);
  CHECK_FALSE(is_staggered(rcf_star(), none()).staggered);
}

TEST_CASE("staggered is monotone under extension") {
  const std::vector<AugmentedSystem> systems{rcf_star(), ecf_aug()};
  for (int it = 0; it < 2000; ++it) {
    auto s = testing::random_rcf(testing::uniform(1, 5), 6);
    for (const auto& sys : systems) {
      bool base = is_staggered(sys, s).staggered;
      auto ext = s.concat(testing::random_rcf(testing::uniform(1, 3), 6));
      if (base) CHECK(is_staggered(sys, ext).staggered);
    }
  }
}

TEST_CASE("augmented_values examples") {
  auto sys = rcf_star();
  auto odd = DigitStream::periodic(none(), DigitString::rcf({3}));
  CHECK(augmented_values(sys, odd, 1, 5) == std::vector<int>{1, 1, 1, 1, 1});
  auto even = DigitStream::periodic(none(), DigitString::rcf({2}));
  CHECK(augmented_values(sys, even, 1, 5) == std::vector<int>{1, 2, 1, 2, 1});
  auto ex = DigitStream::periodic(DigitString::rcf({4}), DigitString::rcf({3}));
  CHECK(augmented_values(sys, ex, 1, 4) == std::vector<int>{1, 2, 2, 2});
  CHECK_THROWS_AS(augmented_values(sys, DigitStream::finite(DigitString::rcf({3})), 1, 4), InsufficientDigits);
  CHECK_THROWS_AS(augmented_values(sys, odd, 5, 2), std::invalid_argument);
}

TEST_CASE("RCF* state tracks the conversion event log") {
  for (int it = 0; it < 400; ++it) {
    auto s = testing::random_rcf_busy(testing::uniform(2, 60));
    auto states = augmented_values(rcf_star(), s, 1);
    auto t = rcf_to_ocf(DigitStream::finite(s), prefix_mode());
    for (std::size_t n = 1; n < states.size() && n - 1 < t.decided(); ++n) {
      REQUIRE((states[n] == 2) == (t.events[n - 1] != EventKind::None));
    }
  }
}

TEST_CASE("ECF state tracks what the sweep does to each digit") {
  for (int it = 0; it < 400; ++it) {
    auto s = testing::random_rcf_busy(testing::uniform(2, 60));
    auto states = augmented_values(ecf_aug(), s, 1);
    auto t = rcf_to_ecf(DigitStream::finite(s), prefix_mode());
    auto arr = ecf_arrivals(t);
    for (std::size_t n = 0; n < arr.size(); ++n) REQUIRE(states[n] == ecf_state_of(arr[n]));
  }
}

TEST_CASE("full cylinders") {
  CHECK(check_full_cylinders(System::rcf(), 2));
  CHECK(check_full_cylinders(System::base_b(3), 2));
  CHECK(check_full_cylinders(System::rcf(), 3, 5));
  auto r = check_full_cylinders(bounded_rcf_branches(8), 2);
  CHECK(r.full);
  CHECK(r.cylinders_checked == 8 + 64);
  CHECK_FALSE(r.covers_unit);
  auto bad = check_full_cylinders(truncated_rcf_branches(4), 2);
  CHECK_FALSE(bad.full);
  CHECK(bad.covers_unit);
  REQUIRE(bad.failing_branches.has_value());
  auto b = check_full_cylinders(base_branches(4), 3);
  CHECK(b.full);
  CHECK(b.covers_unit);
}

TEST_CASE("mobius images") {
  Mobius inv{0, 1, 1, 0};
  auto img = mobius_image(inv, RationalInterval::left_open(make_rational(1, 3), make_rational(1, 2)));
  REQUIRE(img);
  CHECK(img->lo == 2);
  CHECK(img->hi == 3);
  CHECK(img->lo_closed);
  CHECK_FALSE(img->hi_closed);
  CHECK_FALSE(mobius_image(inv, RationalInterval::closed(0, 1)).has_value());
}
