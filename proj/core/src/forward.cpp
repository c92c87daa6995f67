#include "cfn/forward.hpp"

#include "cfn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace cfn {

std::string to_string(PriorEvent p) {
  switch (p) {
    case PriorEvent::None: return "none";
    case PriorEvent::InsertOrDelete: return "insert-or-delete";
    case PriorEvent::SingularizeOrDelete: return "singularize-or-delete";
    case PriorEvent::Any: return "any";
  }
  return "?";
}

PriorEvent parse_prior_event(const std::string& t) {
  if (t == "none") return PriorEvent::None;
  if (t == "insert-or-delete" || t == "insert") return PriorEvent::InsertOrDelete;
  if (t == "singularize-or-delete" || t == "singularize") return PriorEvent::SingularizeOrDelete;
  if (t == "any") return PriorEvent::Any;
  throw ParseError("unknown prior event '" + t + "'");
}

PriorEvent prior_for_state(int a) {
  if (a == 1) return PriorEvent::None;
  if (a == 2) return PriorEvent::Any;
  throw std::invalid_argument("RCF* state must be 1 or 2");
}

int rcf_star_after(const DigitString& s, int a) {
  for (const auto& d : s) {
    if (d.alpha % 2 == 0) a = 3 - a;
  }
  return a;
}

namespace {

struct Keyed {
  std::pair<std::size_t, int> key;  // (input offset, 0 = digit at arrival, 1 = inserted (1,1))
  Digit digit;
  friend bool operator==(const Keyed&, const Keyed&) = default;
};

/// RCF-to-OCF on a window whose first digit arrives in the given way; emits only forced digits.
std::vector<Keyed> run_window(const std::vector<Digit>& s, Arrival0 how) {
  std::vector<Keyed> out;
  long long mod = how == Arrival0::Decremented ? -1 : how == Arrival0::Incremented ? 1 : 0;
  bool deleted = how == Arrival0::Deleted;
  for (std::size_t n = 0; n < s.size(); ++n) {
    if (deleted) {
      deleted = false;
      mod = 1;
      continue;
    }
    std::uint64_t w = static_cast<std::uint64_t>(static_cast<long long>(s[n].alpha) + mod);
    if (w % 2 == 1) {
      out.push_back({{n, 0}, Digit::unchecked(w, 1)});
      mod = 0;
      continue;
    }
    out.push_back({{n, 0}, Digit::unchecked(w + 1, -1)});
    if (n + 1 >= s.size()) break;
    if (s[n + 1].alpha > 1) {
      out.push_back({{n, 1}, Digit::unchecked(1, 1)});
      mod = -1;
    } else {
      deleted = true;
    }
  }
  return out;
}

std::vector<Arrival0> scenarios_for(const DigitString& s, PriorEvent prior) {
  std::vector<Arrival0> cand;
  switch (prior) {
    case PriorEvent::None: cand = {Arrival0::Unchanged}; break;
    case PriorEvent::InsertOrDelete: cand = {Arrival0::Decremented, Arrival0::Incremented}; break;
    case PriorEvent::SingularizeOrDelete: cand = {Arrival0::Deleted, Arrival0::Incremented}; break;
    case PriorEvent::Any: cand = {Arrival0::Decremented, Arrival0::Deleted, Arrival0::Incremented}; break;
  }
  const bool one = s[0].alpha == 1;
  std::vector<Arrival0> out;
  for (auto c : cand) {
    if (c == Arrival0::Decremented && one) continue;  // an insertion needs alpha_n >= 2
    if (c == Arrival0::Deleted && !one) continue;     // only a (1,1) can be deleted
    out.push_back(c);
  }
  return out;
}

void classify(const DigitString& s, PriorEvent prior, DeterminedDigits& d) {
  const std::uint64_t a = s[0].alpha;
  const bool any_event = prior != PriorEvent::None;
  const bool sing_possible = prior == PriorEvent::SingularizeOrDelete || prior == PriorEvent::Any;
  if (!any_event) {
    d.case_id = a % 2 == 0 ? 1 : a > 1 ? 3 : 5;
    d.classical_offset = 0;
    return;
  }
  if (a > 1) {
    d.case_id = a % 2 == 0 ? 2 : 4;
    d.classical_offset = 1;
    return;
  }
  if (!sing_possible) {
    d.case_id = 7;
    d.classical_offset = 0;
    return;
  }
  d.case_id = 6;
  bool has_terminator = std::any_of(s.begin() + 1, s.end(), [](const Digit& x) { return x.alpha != 1; });
  d.classical_offset = has_terminator ? 1 : -1;
}

}  // namespace

DeterminedDigits determined_ocf_digits(const DigitString& s, PriorEvent prior) {
  DeterminedDigits res;
  if (s.empty()) return res;
  for (const auto& d : s) {
    if (d.epsilon != 1 || !d.is_valid()) throw InadmissibleString("forward knowledge needs an RCF string");
  }
  classify(s, prior, res);
  res.scenarios = scenarios_for(s, prior);
  std::vector<std::vector<Keyed>> outs;
  for (auto sc : res.scenarios) outs.push_back(run_window(s.digits(), sc));
  const auto& ref = outs.front();
  for (std::size_t st = 0; st < ref.size(); ++st) {
    auto k0 = ref[st].key;
    bool ok = true;
    for (std::size_t j = 1; j < outs.size() && ok; ++j) {
      std::vector<Keyed> sub;
      for (const auto& x : outs[j]) {
        if (x.key >= k0) sub.push_back(x);
      }
      ok = sub.size() == ref.size() - st && std::equal(sub.begin(), sub.end(), ref.begin() + static_cast<std::ptrdiff_t>(st));
    }
    if (ok) {
      std::vector<Digit> ds;
      for (std::size_t i = st; i < ref.size(); ++i) ds.push_back(ref[i].digit);
      res.determined = true;
      res.anchor = k0.first;
      res.offset = static_cast<std::size_t>(k0.second);
      res.digits = DigitString(System::ocf(), std::move(ds));
      return res;
    }
  }
  return res;
}

namespace {

bool contains(const DigitString& hay, const DigitString& needle) {
  if (needle.size() > hay.size()) return false;
  if (needle.empty()) return true;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

}  // namespace

bool forces_target(const DigitString& s, int a, const DigitString& target) {
  if (s.empty()) return false;
  auto d = determined_ocf_digits(s, prior_for_state(a));
  return d.determined && contains(d.digits, target);
}

bool is_trigger(const DigitString& s, int a, const DigitString& target) {
  if (!forces_target(s, a, target)) return false;
  const std::size_t L = s.size();
  int ai = a;
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 1; j <= L; ++j) {
      if (i == 0 && j == L) continue;
      if (forces_target(s.slice(i, j), ai, target)) return false;
    }
    if (s[i].alpha % 2 == 0) ai = 3 - ai;
  }
  return true;
}

TriggerEnumeration trigger_enumerate(const DigitString& target, std::size_t L, std::uint64_t B) {
  TriggerEnumeration res;
  if (L < target.size() || target.empty() || B < 1) return res;
  double total = 0;
  for (std::size_t l = 1; l <= L; ++l) total += 2 * std::pow(static_cast<double>(B), static_cast<double>(l));
  if (total > 5e7) throw std::invalid_argument("trigger enumeration too large; lower L or the alphabet bound");

  std::vector<std::uint64_t> cur;
  for (std::size_t l = 1; l <= L; ++l) {
    cur.assign(l, 1);
    while (true) {
      DigitString s = DigitString::rcf(cur);
      for (int a : {1, 2}) {
        ++res.candidates;
        if (is_trigger(s, a, target)) res.triggers.push_back({s, a, target});
      }
      std::size_t k = l;
      while (k > 0 && cur[k - 1] == B) cur[--k] = 1;
      if (k == 0) break;
      ++cur[k - 1];
    }
  }

  std::set<std::pair<std::vector<std::uint64_t>, int>> index;
  bool truncated = false;
  for (const auto& t : res.triggers) {
    index.insert({t.s.alphas(), t.a});
    if (t.s.size() == L) truncated = true;
    for (const auto& d : t.s) {
      if (d.alpha + 1 >= B) truncated = true;
    }
    long long k = static_cast<long long>(t.s.size()) - 2 * static_cast<long long>(target.size()) - 4;
    if (k >= 1) {
      bool ones = true;
      for (long long i = 1; i <= k; ++i) ones = ones && t.s[static_cast<std::size_t>(i)].alpha == 1;
      bool head = t.s[0].alpha >= 2 && ((t.a == 1 && t.s[0].alpha % 2 == 0) || (t.a == 2 && t.s[0].alpha % 2 == 1));
      if (!(ones && head)) ++res.structural_violations;
    }
  }
  for (const auto& t : res.triggers) {
    int ai = t.a;
    const std::size_t n = t.s.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        if (i == 0 && j == n) continue;
        if (index.count({t.s.slice(i, j).alphas(), ai})) ++res.minimality_violations;
      }
      if (t.s[i].alpha % 2 == 0) ai = 3 - ai;
    }
  }
  res.complete = !truncated;
  return res;
}

}  // namespace cfn
