#pragma once

#include "cfn/cylinder.hpp"
#include "cfn/digit.hpp"
#include "cfn/exact_number.hpp"
#include "cfn/measure.hpp"
#include "cfn/stream.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cfn {

struct OccurrenceStats {
  DigitString pattern;
  std::size_t window = 0;
  std::size_t count = 0;
  double frequency = 0;
  std::optional<MeasureValue> measure;
  std::optional<double> ps_ratio;
};

/// Windows n in [0, N) of the orbit equal to s. Throws InsufficientDigits if fewer than
/// N + |s| - 1 digits are available.
OccurrenceStats count_occurrences(const DigitStream& orbit, const DigitString& s, std::size_t N);
OccurrenceStats count_occurrences(const DigitString& orbit, const DigitString& s, std::size_t N);
std::size_t count_windows(const std::vector<Digit>& orbit, const std::vector<Digit>& s, std::size_t from,
                          std::size_t to, std::size_t stride = 1);

struct PsEntry {
  OccurrenceStats stats;
  double bound = 0;  // C * mu(C_s)
  bool pass = false;
};

struct PsReport {
  std::size_t N = 0;
  double C = 1;
  std::vector<PsEntry> entries;
  bool all_pass() const;
};

PsReport ps_check(const DigitStream& orbit, const std::vector<DigitString>& strings, std::size_t N, double C);

struct PowerSubsetResult {
  std::size_t lhs = 0;  // windows at positions k n, n < N
  std::size_t rhs = 0;  // windows at positions n < k N
  bool ok = false;
};

PowerSubsetResult power_subset_check(const DigitStream& orbit, const DigitString& s_prime, std::size_t k,
                                     std::size_t N);

struct CounterexampleResult {
  std::size_t N = 0;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  double lhs_rate = 0;
  double rhs_rate = 0;
};

/// The periodic base-3 point 0.(20101012012222222222) with s = [0,1].
DigitString counterexample_block();
DigitStream counterexample_orbit();
/// y = T^pos x in E(i): string s at pos and again at pos + |s| + i.
bool in_E(const std::vector<Digit>& orbit, std::size_t pos, std::size_t i, const std::vector<Digit>& s);
CounterexampleResult schweiger_counterexample(std::size_t N);
/// Mismatches of T^{20n+1} x in E(5), T^{20n+3} x in E(3), T^{20n+5} x in E(1) for n < blocks.
std::size_t counterexample_pattern_mismatches(std::size_t blocks);

struct CensusResult {
  std::size_t insertions = 0;
  std::size_t singularizations = 0;
  std::size_t event_insertions = 0;
  std::size_t event_singularizations = 0;
  /// Patterns starting at or after this 0-based index are cut off by the window.
  std::size_t cut = 0;
  std::size_t patterns = 0;
  std::size_t truncated_patterns = 0;  // longer than the depth bound
  std::map<std::string, std::size_t> histogram;
  bool matches() const { return insertions == event_insertions && singularizations == event_singularizations; }
};

/// Chain-start patterns over the first N RCF digits of the RCF* orbit of (x; 1), compared with
/// the RCF-to-OCF event log. depth = 0 means unbounded.
CensusResult insertion_singularization_census(const DigitStream& rcf, std::size_t N, std::size_t depth = 0);

struct SlopeResult {
  double c_hat = 0;
  std::vector<std::pair<std::size_t, double>> table;  // (n, m(n)/n)
  double spread = 0;                                  // max - min over the table
  bool monotone_stabilizing = false;                  // successive differences shrink
};

SlopeResult estimate_m_slope(const DigitStream& rcf, std::size_t N);
SlopeResult estimate_m_slope(const DigitStream& rcf, const std::vector<std::size_t>& checkpoints);

struct BijectionResult {
  std::size_t via_triggers = 0;
  std::size_t direct = 0;
  std::size_t boundary_slack = 0;
  std::size_t long_candidates = 0;
  std::size_t m_inverse = 0;
  bool complete = false;
  bool pass = false;
};

BijectionResult trigger_bijection_check(const DigitStream& rcf, const DigitString& target, std::size_t N,
                                        std::size_t L);

struct RatioResult {
  std::size_t count_s = 0;
  std::size_t count_s_prime = 0;
  std::optional<double> ratio;  // nullopt: zero denominator
  std::size_t ecf_digits = 0;
  std::size_t rcf_digits = 0;
};

/// Counts over the first N ECF digits of x. Throws InsufficientDigits when fewer exist.
RatioResult ecf_ratio_normality(const DigitStream& rcf, const DigitString& s, const DigitString& s_prime,
                                std::size_t N);

/// Uniform dyadic rational k / 2^bits from mt19937_64 seeded with `seed`.
ExactNumber sample_point(std::uint64_t seed, std::size_t bits);
/// RCF digits of sample_point(seed, bits), fully expanded.
DigitStream sample_rcf_stream(std::uint64_t seed, std::size_t bits);

}  // namespace cfn
