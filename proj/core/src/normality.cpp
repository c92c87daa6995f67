#include "cfn/normality.hpp"

#include "cfn/errors.hpp"
#include "cfn/expansions.hpp"
#include "cfn/forward.hpp"
#include "cfn/rewrite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace cfn {

std::size_t count_windows(const std::vector<Digit>& orbit, const std::vector<Digit>& s, std::size_t from, std::size_t to,
                          std::size_t stride) {
  std::size_t c = 0;
  if (s.empty() || stride == 0) return 0;
  for (std::size_t n = from; n < to; n += stride) {
    if (n + s.size() > orbit.size()) break;
    if (std::equal(s.begin(), s.end(), orbit.begin() + static_cast<std::ptrdiff_t>(n))) ++c;
  }
  return c;
}

namespace {

std::vector<Digit> pull(const DigitStream& orbit, std::size_t need) {
  DigitString d = orbit.take(need);
  if (d.size() < need) throw InsufficientDigits("orbit supplies too few digits", need, d.size());
  return d.digits();
}

void fill_measure(OccurrenceStats& st) {
  System sys = st.pattern.system();
  if (!has_finite_measure(sys)) return;
  MeasureValue mu = invariant_measure(sys, cylinder_interval(st.pattern).interval);
  st.measure = mu;
  if (mu.value > 0) st.ps_ratio = st.frequency / mu.value;
}

}  // namespace

OccurrenceStats count_occurrences(const DigitString& orbit, const DigitString& s, std::size_t N) {
  if (s.empty()) throw InadmissibleString("pattern must be non-empty");
  std::size_t need = N == 0 ? 0 : N + s.size() - 1;
  if (orbit.size() < need) throw InsufficientDigits("orbit supplies too few digits", need, orbit.size());
  OccurrenceStats st;
  st.pattern = s;
  st.window = N;
  st.count = count_windows(orbit.digits(), s.digits(), 0, N);
  st.frequency = N ? static_cast<double>(st.count) / static_cast<double>(N) : 0.0;
  fill_measure(st);
  return st;
}

OccurrenceStats count_occurrences(const DigitStream& orbit, const DigitString& s, std::size_t N) {
  if (s.empty()) throw InadmissibleString("pattern must be non-empty");
  std::size_t need = N == 0 ? 0 : N + s.size() - 1;
  return count_occurrences(DigitString(orbit.system(), pull(orbit, need)), s, N);
}

bool PsReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const PsEntry& e) { return e.pass; });
}

PsReport ps_check(const DigitStream& orbit, const std::vector<DigitString>& strings, std::size_t N, double C) {
  if (C < 1) throw std::invalid_argument("C must be >= 1");
  PsReport rep;
  rep.N = N;
  rep.C = C;
  if (N == 0) return rep;
  std::size_t longest = 0;
  for (const auto& s : strings) longest = std::max(longest, s.size());
  DigitString digits(orbit.system(), pull(orbit, N + longest - 1));
  for (const auto& s : strings) {
    PsEntry e;
    e.stats = count_occurrences(digits, s, N);
    if (!e.stats.measure) throw DomainError("ps_check needs a finite invariant measure");
    e.bound = C * e.stats.measure->value;
    e.pass = e.stats.frequency <= e.bound;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

PowerSubsetResult power_subset_check(const DigitStream& orbit, const DigitString& s_prime, std::size_t k, std::size_t N) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (s_prime.empty() || s_prime.size() % k != 0) throw std::invalid_argument("|s'| must be a positive multiple of k");
  PowerSubsetResult r;
  if (N == 0) {
    r.ok = true;
    return r;
  }
  auto d = pull(orbit, k * N + s_prime.size() - 1);
  r.lhs = count_windows(d, s_prime.digits(), 0, k * N, k);
  r.rhs = count_windows(d, s_prime.digits(), 0, k * N, 1);
  r.ok = r.lhs <= r.rhs;
  return r;
}

DigitString counterexample_block() { return DigitString::base(3, std::string("20101012012222222222")); }

DigitStream counterexample_orbit() { return DigitStream::periodic(DigitString(System::base_b(3), {}), counterexample_block()); }

bool in_E(const std::vector<Digit>& orbit, std::size_t pos, std::size_t i, const std::vector<Digit>& s) {
  auto at = [&](std::size_t p) {
    return p + s.size() <= orbit.size() && std::equal(s.begin(), s.end(), orbit.begin() + static_cast<std::ptrdiff_t>(p));
  };
  return at(pos) && at(pos + s.size() + i);
}

CounterexampleResult schweiger_counterexample(std::size_t N) {
  CounterexampleResult r;
  r.N = N;
  if (N == 0) return r;
  const DigitString s = DigitString::base(3, std::vector<std::uint64_t>{0, 1});
  auto d = counterexample_orbit().take(2 * N + 16).digits();
  r.lhs = count_windows(d, s.digits(), 0, 2 * N, 2);
  for (std::size_t n = 0; n < 2 * N; ++n) {
    if (in_E(d, n, 1, s.digits()) || in_E(d, n, 3, s.digits()) || in_E(d, n, 5, s.digits())) ++r.rhs;
  }
  r.lhs_rate = static_cast<double>(r.lhs) / static_cast<double>(N);
  r.rhs_rate = static_cast<double>(r.rhs) / static_cast<double>(N);
  return r;
}

std::size_t counterexample_pattern_mismatches(std::size_t blocks) {
  const DigitString s = DigitString::base(3, std::vector<std::uint64_t>{0, 1});
  auto d = counterexample_orbit().take(20 * blocks + 32).digits();
  std::size_t bad = 0;
  for (std::size_t n = 0; n < blocks; ++n) {
    bad += !in_E(d, 20 * n + 1, 5, s.digits());
    bad += !in_E(d, 20 * n + 3, 3, s.digits());
    bad += !in_E(d, 20 * n + 5, 1, s.digits());
  }
  return bad;
}

CensusResult insertion_singularization_census(const DigitStream& rcf, std::size_t N, std::size_t depth) {
  if (N == 0) throw std::invalid_argument("census needs N >= 1");
  auto d = pull(rcf, N);
  CensusResult res;
  res.cut = N;
  int a = 1;
  std::vector<int> state(N);
  for (std::size_t i = 0; i < N; ++i) {
    state[i] = a;
    if (d[i].alpha % 2 == 0) a = 3 - a;
  }
  for (std::size_t i = 0; i < N; ++i) {
    const std::uint64_t al = d[i].alpha;
    bool even_start = al % 2 == 0 && state[i] == 1;
    bool odd_start = al % 2 == 1 && al >= 3 && state[i] == 2;
    if (!even_start && !odd_start) continue;
    std::size_t r = 0;
    while (i + 1 + r < N && d[i + 1 + r].alpha == 1) ++r;
    if (i + 1 + r >= N) {
      res.cut = i;
      break;
    }
    ++res.patterns;
    if (depth && r + 2 > depth) {
      ++res.truncated_patterns;
      continue;
    }
    std::string key = std::string(even_start ? "[2a," : "[2a+1,") + "1^" + std::to_string(r) + ",c+1];" + (even_start ? "1" : "2");
    ++res.histogram[key];
    if (r % 2 == 0) {
      res.insertions += 1;
      res.singularizations += r / 2;
    } else {
      res.singularizations += (r + 1) / 2;
    }
  }
  ConversionOptions opt;
  opt.close_finite = false;
  auto tr = rcf_to_ocf(DigitStream::finite(DigitString(System::rcf(), d)), opt);
  if (tr.events.size() < res.cut) throw std::logic_error("event log shorter than the census window");
  for (std::size_t i = 0; i < res.cut; ++i) {
    res.event_insertions += tr.events[i] == EventKind::Insert;
    res.event_singularizations += tr.events[i] == EventKind::Singularize;
  }
  return res;
}

SlopeResult estimate_m_slope(const DigitStream& rcf, const std::vector<std::size_t>& checkpoints) {
  if (checkpoints.empty()) throw std::invalid_argument("no checkpoints");
  std::size_t N = *std::max_element(checkpoints.begin(), checkpoints.end());
  ConversionOptions opt;
  opt.close_finite = false;
  opt.max_input = N + 2;
  auto tr = rcf_to_ocf(rcf, opt);
  if (tr.m.size() < N) throw InsufficientDigits("m(n) not decided up to N", N, tr.m.size());
  SlopeResult res;
  for (std::size_t n : checkpoints) {
    if (n == 0) throw std::invalid_argument("checkpoint 0");
    res.table.push_back({n, static_cast<double>(tr.m[n - 1]) / static_cast<double>(n)});
  }
  res.c_hat = static_cast<double>(tr.m[N - 1]) / static_cast<double>(N);
  double lo = res.table.front().second, hi = lo;
  for (auto& [n, v] : res.table) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  res.spread = hi - lo;
  res.monotone_stabilizing = true;
  for (std::size_t i = 2; i < res.table.size(); ++i) {
    double prev = std::fabs(res.table[i - 1].second - res.table[i - 2].second);
    double cur = std::fabs(res.table[i].second - res.table[i - 1].second);
    if (cur > prev) res.monotone_stabilizing = false;
  }
  return res;
}

SlopeResult estimate_m_slope(const DigitStream& rcf, std::size_t N) {
  if (N < 8) throw std::invalid_argument("N too small for the convergence table");
  return estimate_m_slope(rcf, {N / 8, N / 4, N / 2, N});
}

BijectionResult trigger_bijection_check(const DigitStream& rcf, const DigitString& target, std::size_t N, std::size_t L) {
  if (target.empty()) throw std::invalid_argument("empty target");
  BijectionResult res;
  ConversionOptions opt;
  opt.close_finite = false;
  opt.max_output = N + 2;
  auto tr = rcf_to_ocf(rcf, opt);
  if (tr.output.size() < N) throw InsufficientDigits("fewer than N OCF digits", N, tr.output.size());
  res.direct = count_windows(tr.output.digits(), target.digits(), 0, N - target.size() + 1);
  res.m_inverse = m_inverse(tr, N);
  auto d = rcf.take(res.m_inverse + L).digits();
  std::vector<int> state(d.size());
  int a = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    state[i] = a;
    if (d[i].alpha % 2 == 0) a = 3 - a;
  }
  const long long k = static_cast<long long>(L) + 1 - 2 * static_cast<long long>(target.size()) - 4;
  for (std::size_t i = 0; i < res.m_inverse && i < d.size(); ++i) {
    bool found = false;
    for (std::size_t l = 1; l <= L && i + l <= d.size(); ++l) {
      DigitString s(System::rcf(), std::vector<Digit>(d.begin() + static_cast<std::ptrdiff_t>(i),
                                                       d.begin() + static_cast<std::ptrdiff_t>(i + l)));
      if (forces_target(s, state[i], target)) {
        found = true;
        if (is_trigger(s, state[i], target)) ++res.via_triggers;
        break;
      }
    }
    if (found) continue;
    if (k <= 0) {
      ++res.long_candidates;
      continue;
    }
    const std::uint64_t al = d[i].alpha;
    bool head = al >= 2 && ((state[i] == 1 && al % 2 == 0) || (state[i] == 2 && al % 2 == 1));
    bool ones = true;
    for (long long j = 1; j <= k; ++j) {
      std::size_t p = i + static_cast<std::size_t>(j);
      if (p < d.size() && d[p].alpha != 1) {
        ones = false;
        break;
      }
    }
    if (head && ones) ++res.long_candidates;
  }
  res.boundary_slack = L + target.size() + res.long_candidates;
  res.complete = res.long_candidates == 0;
  long long diff = static_cast<long long>(res.via_triggers) - static_cast<long long>(res.direct);
  res.pass = res.complete ? std::llabs(diff) <= static_cast<long long>(res.boundary_slack)
                          : diff <= static_cast<long long>(res.boundary_slack);
  return res;
}

RatioResult ecf_ratio_normality(const DigitStream& rcf, const DigitString& s, const DigitString& s_prime, std::size_t N) {
  if (s.empty() || s_prime.empty()) throw std::invalid_argument("patterns must be non-empty");
  ConversionOptions opt;
  opt.close_finite = false;
  opt.max_output = N;
  auto tr = rcf_to_ecf(rcf, opt);
  if (tr.output.size() < N) throw InsufficientDigits("fewer than N ECF digits", N, tr.output.size());
  RatioResult r;
  r.ecf_digits = N;
  r.rcf_digits = tr.decided();
  const auto& o = tr.output.digits();
  std::vector<Digit> head(o.begin(), o.begin() + static_cast<std::ptrdiff_t>(N));
  r.count_s = count_windows(head, s.digits(), 0, N);
  r.count_s_prime = count_windows(head, s_prime.digits(), 0, N);
  if (r.count_s_prime > 0) r.ratio = static_cast<double>(r.count_s) / static_cast<double>(r.count_s_prime);
  return r;
}

ExactNumber sample_point(std::uint64_t seed, std::size_t bits) {
  if (bits < 64) throw std::invalid_argument("sample_point needs bits >= 64");
  std::mt19937_64 gen(seed);
  std::size_t words = (bits + 63) / 64;
  Integer k = 0;
  for (std::size_t i = 0; i < words; ++i) {
    k <<= 64;
    k += from_u64(gen());
  }
  std::size_t extra = words * 64 - bits;
  if (extra) k >>= extra;
  Integer den = 1;
  den <<= bits;
  return ExactNumber::rational(k, den);
}

DigitStream sample_rcf_stream(std::uint64_t seed, std::size_t bits) {
  auto e = rcf_digits(sample_point(seed, bits), std::numeric_limits<std::size_t>::max());
  return DigitStream::finite(std::move(e.digits));
}

}  // namespace cfn
