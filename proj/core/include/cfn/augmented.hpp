#pragma once

#include "cfn/continuant.hpp"
#include "cfn/digit.hpp"
#include "cfn/exact_number.hpp"
#include "cfn/interval.hpp"
#include "cfn/rewrite.hpp"
#include "cfn/stream.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cfn {

class AugmentedSystem {
 public:
  /// even_map[i] / odd_map[i] are the images of states[i]. Throws std::invalid_argument
  /// unless every table is a bijection on the state set.
  AugmentedSystem(std::string name, System base, std::vector<int> states, std::vector<int> even_map,
                  std::vector<int> odd_map);

  /// Per-digit table replacing the parity table for one alpha.
  void set_digit_table(std::uint64_t alpha, std::vector<int> map);

  int transition(const Digit& d, int a) const;
  bool has_state(int a) const;
  const std::vector<int>& states() const { return states_; }
  const std::string& name() const { return name_; }
  System base() const { return base_; }

 private:
  std::size_t index_of(int a) const;
  void check_bijection(const std::vector<int>& map) const;

  std::string name_;
  System base_;
  std::vector<int> states_;
  std::vector<int> even_, odd_;
  std::map<std::uint64_t, std::vector<int>> per_digit_;
};

AugmentedSystem rcf_star();
AugmentedSystem ecf_aug();

struct AugmentedPoint {
  ExactNumber x;
  int a;
};

/// (T x; f_x(a)). Throws InsufficientDigits when x has no next digit.
AugmentedPoint step(const AugmentedSystem& sys, const AugmentedPoint& p);

struct StaggeredResult {
  bool staggered = false;
  /// (a, a') -> smallest i in 0..|s| with state a after i digits started from a'.
  std::map<std::pair<int, int>, std::optional<std::size_t>> witness;
};

StaggeredResult is_staggered(const AugmentedSystem& sys, const DigitString& s);

/// a_1..a_N, a_n the state before digit n is consumed. Throws InsufficientDigits.
std::vector<int> augmented_values(const AugmentedSystem& sys, const DigitStream& x, int a0, std::size_t N);
std::vector<int> augmented_values(const AugmentedSystem& sys, const DigitString& x, int a0);

/// What the RCF-to-ECF sweep does to a digit when it gets there.
enum class Arrival { Unchanged, Altered, Removed };
std::string to_string(Arrival a);
/// Read off an RCF-to-ECF trace: Removed for deleted/replaced digits, Altered when the previous
/// digit was removed, Unchanged otherwise.
std::vector<Arrival> ecf_arrivals(const ConversionTrace& t);
/// State predicted by the arrival: Unchanged 1, Altered 2, Removed 3.
int ecf_state_of(Arrival a);

/// Piecewise Moebius system on [0,1] for the full-cylinder check.
struct Branch {
  Digit digit;
  RationalInterval domain;
  Mobius map;  // x -> (a x + b) / (c x + d)
};

struct PiecewiseSystem {
  std::string name;
  std::vector<Branch> branches;
};

PiecewiseSystem bounded_rcf_branches(std::uint64_t bound);
PiecewiseSystem base_branches(unsigned b);
/// RCF digits 1..bound with the remainder (0, 1/(bound+1)] lumped into one branch whose image is unbounded.
PiecewiseSystem truncated_rcf_branches(std::uint64_t bound);

struct FullCylinderReport {
  bool full = false;
  bool covers_unit = false;    // branch domains tile [0,1] up to endpoints
  std::size_t cylinders_checked = 0;
  std::optional<std::vector<std::size_t>> failing_branches;  // first failing string, as branch indices
};

FullCylinderReport check_full_cylinders(const PiecewiseSystem& sys, unsigned depth);
/// RCF (alphas <= alphabet_bound) or BASE(b).
bool check_full_cylinders(System sys, unsigned depth, std::uint64_t alphabet_bound = 12);

/// Image of an interval under a Moebius map; nullopt when the pole lies in the closed hull.
std::optional<RationalInterval> mobius_image(const Mobius& f, const RationalInterval& iv);

}  // namespace cfn
