#include "cfn/continuant.hpp"
#include "cfn/errors.hpp"
#include "cfn/expansions.hpp"
#include "cfn/rewrite.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cfn;

namespace {

Rational q(long p, long d) { return make_rational(p, d); }

ConversionOptions prefix_mode() {
  ConversionOptions o;
  o.close_finite = false;
  return o;
}

Rational value_with_residual(const ConversionTrace& t) {
  auto all = t.output.digits();
  all.insert(all.end(), t.residual.begin(), t.residual.end());
  return eval_finite_cf(all);
}

void check_events_consistent(const ConversionTrace& t) {
  for (std::size_t i = 0; i + 1 < t.events.size(); ++i) {
    CHECK((t.events[i] == EventKind::Singularize) == (t.events[i + 1] == EventKind::Delete));
  }
  if (!t.events.empty()) CHECK(t.events.front() != EventKind::Delete);
}

// RCF to ECF also removes the digit after an insertion (it becomes a run of (2,-1)).
void check_ecf_events_consistent(const ConversionTrace& t) {
  for (std::size_t i = 0; i + 1 < t.events.size(); ++i) {
    bool rewrites = t.events[i] == EventKind::Singularize || t.events[i] == EventKind::Insert;
    CHECK(rewrites == (t.events[i + 1] == EventKind::Delete));
  }
  if (!t.events.empty()) CHECK(t.events.front() != EventKind::Delete);
}

}  // namespace

TEST_CASE("insert_at examples") {
  auto s = DigitString::rcf({4, 3, 3, 3});
  CHECK(insert_at(s, 1) == DigitString::general({{5, -1}, {1, 1}, {2, 1}, {3, 1}, {3, 1}}));
  auto t = insert_at(DigitString::rcf({2, 3}), 1);
  CHECK(t == DigitString::general({{3, -1}, {1, 1}, {2, 1}}));
  CHECK(eval_finite_cf(t) == q(3, 7));
  CHECK_THROWS_AS(insert_at(DigitString::rcf({2, 1}), 1), InvalidRewrite);
  CHECK_THROWS_AS(insert_at(DigitString::rcf({2, 3}), 2), InvalidRewrite);
  CHECK_THROWS_AS(insert_at(DigitString::rcf({2, 3}), 0), InvalidRewrite);
}

TEST_CASE("singularize_at examples") {
  auto s = singularize_at(DigitString::rcf({2, 1, 2}), 1);
  CHECK(s == DigitString::general({{3, -1}, {3, 1}}));
  CHECK(eval_finite_cf(s) == q(3, 8));
  CHECK(eval_finite_cf(DigitString::rcf({2, 1, 2})) == q(3, 8));
  auto tail = singularize_at(DigitString::rcf({3, 1, 1}), 1);
  CHECK(tail == DigitString::general({{4, -1}, {2, 1}}));
  CHECK(eval_finite_cf(tail) == q(2, 7));
  CHECK_THROWS_AS(singularize_at(DigitString::rcf({2, 3, 2}), 1), InvalidRewrite);
  CHECK_THROWS_AS(singularize_at(DigitString::rcf({2}), 1), InvalidRewrite);
  CHECK(singularize_at(DigitString::rcf({2, 1, 5}), 1) == DigitString::general({{3, -1}, {6, 1}}));
}

TEST_CASE("insert and singularize cancel") {
  int pairs = 0;
  for (int it = 0; it < 4000; ++it) {
    auto s = testing::random_general(testing::uniform(2, 9), 6);
    std::size_t n = testing::uniform(1, s.size() - 1);
    try {
      auto t = insert_at(s, n);
      CHECK(singularize_at(t, n) == s);
      CHECK(eval_finite_cf(t) == eval_finite_cf(s));
      ++pairs;
    } catch (const InvalidRewrite&) {
    }
    try {
      auto t = singularize_at(s, n);
      CHECK(eval_finite_cf(t) == eval_finite_cf(s));
      if (n + 1 < s.size()) CHECK(insert_at(t, n) == s);
      ++pairs;
    } catch (const InvalidRewrite&) {
    }
  }
  CHECK(pairs > 1000);
}

TEST_CASE("RCF to OCF worked example") {
  auto in = DigitStream::periodic(DigitString::rcf({4}), DigitString::rcf({3}));
  ConversionOptions opt;
  opt.max_output = 12;
  auto t = rcf_to_ocf(in, opt);
  REQUIRE(t.output.size() >= 4);
  CHECK(t.output.slice(0, 4) == DigitString::ocf({{5, -1}, {1, 1}, {3, -1}, {1, 1}}));
  REQUIRE(t.events.size() >= 3);
  CHECK(t.events[0] == EventKind::Insert);
  CHECK(t.events[1] == EventKind::Insert);
  CHECK(t.events[2] == EventKind::Insert);
  CHECK(t.m_of(1) == 1);
  CHECK(t.m_of(2) == 3);
  CHECK(t.m_of(3) == 5);
  CHECK(m_inverse(t, 4) == 3);
  CHECK(m_inverse(t, 0) == 1);
  CHECK(m_inverse(t, 1) == 1);
  CHECK_THROWS_AS(m_inverse(t, 1000), NeedsMoreInput);
  CHECK_THROWS_AS(t.m_of(500), NeedsMoreInput);
}

TEST_CASE("RCF to OCF on odd input is the identity") {
  auto in = DigitStream::periodic(DigitString(System::rcf(), {}), DigitString::rcf({3}));
  ConversionOptions opt;
  opt.max_input = 50;
  opt.close_finite = false;
  auto t = rcf_to_ocf(in, opt);
  for (std::size_t i = 0; i < t.decided(); ++i) {
    CHECK(t.events[i] == EventKind::None);
    CHECK(t.m[i] == i + 1);
  }
  CHECK(t.output.retag(System::rcf()) == in.take(t.output.size()));
  CHECK(m_inverse(t, 20) == 20);
}

TEST_CASE("RCF to OCF singularization and deletion") {
  auto t = rcf_to_ocf(DigitStream::finite(DigitString::rcf({2, 1, 5, 3})), prefix_mode());
  REQUIRE(t.decided() >= 2);
  CHECK(t.events[0] == EventKind::Singularize);
  CHECK(t.events[1] == EventKind::Delete);
  CHECK(t.output[0] == Digit(3, -1));
  CHECK(t.m_of(2) == t.m_of(1));
  CHECK(value_with_residual(t) == eval_finite_cf(DigitString::rcf({2, 1, 5, 3})));
}

TEST_CASE("finite closure is value exact") {
  auto s = DigitString::rcf({2, 3});
  auto t = rcf_to_ocf(DigitStream::finite(s));
  CHECK(t.complete);
  CHECK(eval_finite_cf(t.output) == q(3, 7));
  auto p = rcf_to_ocf(DigitStream::finite(s), prefix_mode());
  CHECK_FALSE(p.complete);
  CHECK(value_with_residual(p) == q(3, 7));
}

TEST_CASE("OCF to RCF examples") {
  auto in = DigitStream::periodic(DigitString::ocf({{5, -1}}), DigitString::ocf({{1, 1}, {3, -1}}));
  ConversionOptions opt;
  opt.max_output = 20;
  auto t = ocf_to_rcf(in, opt);
  REQUIRE(t.output.size() >= 10);
  CHECK(t.output.slice(0, 10) == DigitString::rcf({4, 3, 3, 3, 3, 3, 3, 3, 3, 3}).retag(System::rcf()));
  auto plus = DigitStream::periodic(DigitString(System::ocf(), {}), DigitString::ocf({{3, 1}, {1, 1}}));
  ConversionOptions o2;
  o2.max_input = 30;
  o2.close_finite = false;
  auto u = ocf_to_rcf(plus, o2);
  for (auto e : u.events) CHECK(e == EventKind::None);
  CHECK(u.output == plus.take(u.output.size()));
  auto f = ocf_to_rcf(DigitStream::finite(DigitString::ocf({{3, -1}, {3, 1}})));
  CHECK(f.complete);
  CHECK(f.output == DigitString::rcf({2, 1, 2}));
  CHECK(eval_finite_cf(f.output) == q(3, 8));
}

TEST_CASE("RCF to ECF examples") {
  auto ev = rcf_to_ecf(DigitStream::finite(DigitString::rcf({2, 4, 2, 6})), prefix_mode());
  for (std::size_t i = 0; i < ev.decided(); ++i) {
    CHECK(ev.events[i] == EventKind::None);
    CHECK(ev.m[i] == i + 1);
  }
  auto b = rcf_to_ecf(DigitStream::finite(DigitString::rcf({3, 4, 2, 2, 2})), prefix_mode());
  REQUIRE(b.output.size() >= 4);
  CHECK(b.output.slice(0, 4) == DigitString(System::ecf(), {Digit(4, -1), Digit(2, -1), Digit(2, -1), Digit(2, -1)}));
  CHECK(b.events[0] == EventKind::Insert);
  CHECK(value_with_residual(b) == eval_finite_cf(DigitString::rcf({3, 4, 2, 2, 2})));
  auto s = rcf_to_ecf(DigitStream::finite(DigitString::rcf({3, 1, 4, 2})), prefix_mode());
  REQUIRE(s.decided() >= 2);
  CHECK(s.events[0] == EventKind::Singularize);
  CHECK(s.events[1] == EventKind::Delete);
  CHECK(s.output[0] == Digit(4, -1));
  // Working string after the first step is (4,-1),(5,1),(2,1): 5 is odd and is rewritten next.
  CHECK(singularize_at(DigitString::rcf({3, 1, 4, 2}), 1) == DigitString::general({{4, -1}, {5, 1}, {2, 1}}));
}

TEST_CASE("fast conversions agree with the literal sweeps") {
  for (int it = 0; it < 3000; ++it) {
    auto s = testing::random_rcf_busy(testing::uniform(1, 14));
    for (bool close : {true, false}) {
      ConversionOptions o;
      o.close_finite = close;
      auto fast = rcf_to_ocf(DigitStream::finite(s), o);
      auto slow = rcf_to_ocf_slow(s, close);
      REQUIRE(fast.output == slow.output);
      REQUIRE(fast.events == slow.events);
      REQUIRE(fast.m == slow.m);
      CHECK(fast.complete == slow.complete);

      auto fe = rcf_to_ecf(DigitStream::finite(s), o);
      auto se = rcf_to_ecf_slow(s, close);
      REQUIRE(fe.output == se.output);
      REQUIRE(fe.events == se.events);
      REQUIRE(fe.m == se.m);
      CHECK(fe.complete == se.complete);
    }
    auto oc = testing::random_ocf(testing::uniform(1, 12), 7);
    for (bool close : {true, false}) {
      ConversionOptions o;
      o.close_finite = close;
      auto fast = ocf_to_rcf(DigitStream::finite(oc), o);
      auto slow = ocf_to_rcf_slow(oc, close);
      REQUIRE(fast.output == slow.output);
      REQUIRE(fast.events == slow.events);
      REQUIRE(fast.m == slow.m);
    }
  }
}

TEST_CASE("conversion value preservation and output validity") {
  for (int it = 0; it < 4000; ++it) {
    auto s = testing::random_rcf_busy(testing::uniform(1, 25));
    Rational v = eval_finite_cf(s);
    auto c = rcf_to_ocf(DigitStream::finite(s));
    if (c.complete) REQUIRE(eval_finite_cf(c.output) == v);
    auto p = rcf_to_ocf(DigitStream::finite(s), prefix_mode());
    REQUIRE(value_with_residual(p) == v);
    CHECK(p.output.system() == System::ocf());
    check_events_consistent(p);
    for (std::size_t i = 1; i < p.m.size(); ++i) {
      REQUIRE(p.m[i] >= p.m[i - 1]);
      REQUIRE(p.m[i] - p.m[i - 1] <= 2);
    }
    for (std::size_t i = 0; i < p.decided(); ++i) {
      if (p.events[i] == EventKind::Insert || p.events[i] == EventKind::Singularize) {
        // Arrival alpha is the original one shifted by the previous event.
        std::uint64_t a = s[i].alpha;
        if (i > 0 && p.events[i - 1] == EventKind::Insert) a -= 1;
        if (i > 0 && p.events[i - 1] == EventKind::Delete) a += 1;
        CHECK(a % 2 == 0);
      }
    }

    auto e = rcf_to_ecf(DigitStream::finite(s), prefix_mode());
    REQUIRE(value_with_residual(e) == v);
    CHECK(e.output.system() == System::ecf());
    check_ecf_events_consistent(e);
    auto ec = rcf_to_ecf(DigitStream::finite(s));
    if (ec.complete) REQUIRE(eval_finite_cf(ec.output) == v);
    for (std::size_t i = 1; i < e.m.size(); ++i) REQUIRE(e.m[i] >= e.m[i - 1]);

    auto o = testing::random_ocf(testing::uniform(1, 20), 9);
    auto r = ocf_to_rcf(DigitStream::finite(o), prefix_mode());
    REQUIRE(value_with_residual(r) == eval_finite_cf(o));
    auto rc = ocf_to_rcf(DigitStream::finite(o));
    if (rc.complete) REQUIRE(eval_finite_cf(rc.output) == eval_finite_cf(o));
  }
}

TEST_CASE("stream stability under input extension") {
  for (int it = 0; it < 800; ++it) {
    auto s = testing::random_rcf_busy(testing::uniform(2, 30));
    for (std::size_t L = 1; L < s.size(); L += 1 + it % 3) {
      auto a = rcf_to_ocf(DigitStream::finite(s.slice(0, L)), prefix_mode());
      auto b = rcf_to_ocf(DigitStream::finite(s.slice(0, L + 1)), prefix_mode());
      REQUIRE(a.output.size() <= b.output.size());
      REQUIRE(b.output.slice(0, a.output.size()) == a.output);
      REQUIRE(a.decided() <= b.decided());
      for (std::size_t i = 0; i < a.decided(); ++i) {
        REQUIRE(a.events[i] == b.events[i]);
        REQUIRE(a.m[i] == b.m[i]);
      }
      auto c = rcf_to_ecf(DigitStream::finite(s.slice(0, L)), prefix_mode());
      auto d = rcf_to_ecf(DigitStream::finite(s.slice(0, L + 1)), prefix_mode());
      REQUIRE(d.output.slice(0, c.output.size()) == c.output);
    }
  }
}

TEST_CASE("conversion agrees with direct OCF expansion on periodic points") {
  for (int it = 0; it < 60; ++it) {
    auto pre = testing::random_rcf_busy(testing::uniform(0, 4));
    auto per = testing::random_rcf_busy(testing::uniform(1, 5));
    auto in = DigitStream::periodic(pre, per);
    ConversionOptions o;
    o.max_output = 100;
    auto t = rcf_to_ocf(in, o);
    REQUIRE(t.output.size() >= 100);
    auto x = periodic_point(pre, per);
    auto direct = ocf_digits(x, 100);
    CHECK(t.output.slice(0, 100) == direct.digits);
  }
}

TEST_CASE("OCF to RCF inverts RCF to OCF") {
  for (int it = 0; it < 500; ++it) {
    auto s = testing::random_rcf_busy(testing::uniform(1, 30));
    auto fwd = rcf_to_ocf(DigitStream::finite(s));
    REQUIRE(fwd.complete);
    auto back = ocf_to_rcf(DigitStream::finite(fwd.output));
    REQUIRE(back.complete);
    CHECK(eval_finite_cf(back.output) == eval_finite_cf(s));
    // Stable window: the prefix mode round trip reproduces the input digits it has decided.
    auto fp = rcf_to_ocf(DigitStream::finite(s), prefix_mode());
    auto bp = ocf_to_rcf(DigitStream::finite(fp.output), prefix_mode());
    REQUIRE(bp.output.size() <= s.size());
    CHECK(bp.output == s.slice(0, bp.output.size()));
  }
}

TEST_CASE("m_inverse definition") {
  for (int it = 0; it < 300; ++it) {
    auto s = testing::random_rcf_busy(testing::uniform(5, 40));
    auto t = rcf_to_ocf(DigitStream::finite(s), prefix_mode());
    if (t.m.empty()) continue;
    for (std::size_t N = 1; N <= t.m.back(); ++N) {
      std::size_t n = m_inverse(t, N);
      REQUIRE(t.m_of(n) >= N);
      if (n > 1) REQUIRE(t.m_of(n - 1) < N);
    }
    try {
      m_inverse(t, t.m.back() + 1);
      FAIL("expected NeedsMoreInput");
    } catch (const NeedsMoreInput& e) {
      CHECK(e.required_extension() >= 1);
    }
  }
}

TEST_CASE("event log export") {
  auto t = rcf_to_ocf(DigitStream::finite(DigitString::rcf({4, 3, 3})), prefix_mode());
  auto log = t.event_log();
  REQUIRE(!log.empty());
  CHECK(log[0] == RewriteEvent{1, EventKind::Insert});
  CHECK(to_string(EventKind::Singularize) == "singularize");
}
