#pragma once

#include "cfn/digit.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cfn {

/// What is known about the RCF-to-OCF event at the digit before s.
enum class PriorEvent {
  None,                 // no insertion, singularization or deletion
  InsertOrDelete,
  SingularizeOrDelete,
  Any,                  // some event, kind unknown (RCF* state 2)
};
std::string to_string(PriorEvent p);
PriorEvent parse_prior_event(const std::string& text);
/// RCF* state 1 -> None, 2 -> Any.
PriorEvent prior_for_state(int a);

/// How the first digit of s can look when the conversion reaches it.
enum class Arrival0 { Unchanged, Decremented, Incremented, Deleted };

struct DeterminedDigits {
  bool determined = false;
  /// Digits are known from output index m(n + anchor) + offset onward (n = index of s[0]).
  std::size_t anchor = 0;
  std::size_t offset = 0;
  DigitString digits{System::ocf(), {}};
  std::vector<Arrival0> scenarios;
  /// 1..6 for the classical case split, 7 for alpha_n = 1 reached after a deletion that must
  /// have been a deletion (insertion impossible), 0 when s is empty.
  int case_id = 0;
  /// Output offset the classical case split promises (relative to the anchor), -1 if undetermined.
  int classical_offset = -1;
};

DeterminedDigits determined_ocf_digits(const DigitString& s, PriorEvent prior);

/// Condition 1: every extension of (s; a) puts target inside the forced OCF digits.
bool forces_target(const DigitString& s, int a, const DigitString& target);
/// Conditions 1 and 2 (no proper contiguous sub-configuration forces target).
bool is_trigger(const DigitString& s, int a, const DigitString& target);

struct TriggerString {
  DigitString s;
  int a = 1;
  DigitString target;
};

struct TriggerEnumeration {
  std::vector<TriggerString> triggers;
  bool complete = false;
  std::size_t candidates = 0;
  /// Long triggers not starting ([2a,1^k,*];1) or ([2a+1,1^k,*];2).
  std::size_t structural_violations = 0;
  /// Enumerated triggers containing another as a sub-configuration (must be 0).
  std::size_t minimality_violations = 0;
};

/// All triggers (s; a) with |s| <= L and alphas <= alphabet_bound.
TriggerEnumeration trigger_enumerate(const DigitString& target, std::size_t L, std::uint64_t alphabet_bound = 8);

/// RCF* state after consuming s from a.
int rcf_star_after(const DigitString& s, int a);

}  // namespace cfn
