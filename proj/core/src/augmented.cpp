#include "cfn/augmented.hpp"

#include "cfn/cylinder.hpp"
#include "cfn/errors.hpp"
#include "cfn/expansions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace cfn {

AugmentedSystem::AugmentedSystem(std::string name, System base, std::vector<int> states, std::vector<int> even_map,
                                 std::vector<int> odd_map)
    : name_(std::move(name)), base_(base), states_(std::move(states)), even_(std::move(even_map)), odd_(std::move(odd_map)) {
  if (states_.empty()) throw std::invalid_argument("augmented system needs at least one state");
  if (std::set<int>(states_.begin(), states_.end()).size() != states_.size()) {
    throw std::invalid_argument("duplicate states");
  }
  check_bijection(even_);
  check_bijection(odd_);
}

void AugmentedSystem::check_bijection(const std::vector<int>& map) const {
  if (map.size() != states_.size()) throw std::invalid_argument("transition table size differs from the state set");
  std::set<int> img(map.begin(), map.end());
  if (img.size() != map.size()) throw std::invalid_argument("transition table is not a bijection");
  for (int a : img) {
    if (!has_state(a)) throw std::invalid_argument("transition table leaves the state set");
  }
}

void AugmentedSystem::set_digit_table(std::uint64_t alpha, std::vector<int> map) {
  check_bijection(map);
  per_digit_[alpha] = std::move(map);
}

bool AugmentedSystem::has_state(int a) const { return std::find(states_.begin(), states_.end(), a) != states_.end(); }

std::size_t AugmentedSystem::index_of(int a) const {
  auto it = std::find(states_.begin(), states_.end(), a);
  if (it == states_.end()) throw std::invalid_argument("state " + std::to_string(a) + " not in the system");
  return static_cast<std::size_t>(it - states_.begin());
}

int AugmentedSystem::transition(const Digit& d, int a) const {
  std::size_t i = index_of(a);
  auto it = per_digit_.find(d.alpha);
  if (it != per_digit_.end()) return it->second[i];
  return d.alpha % 2 == 0 ? even_[i] : odd_[i];
}

AugmentedSystem rcf_star() { return AugmentedSystem("rcf-star", System::rcf(), {1, 2}, {2, 1}, {1, 2}); }

AugmentedSystem ecf_aug() { return AugmentedSystem("ecf-aug", System::rcf(), {1, 2, 3}, {1, 3, 2}, {3, 1, 2}); }

AugmentedPoint step(const AugmentedSystem& sys, const AugmentedPoint& p) {
  ShiftStep s = shift(sys.base(), p.x);
  if (!s.digit) throw InsufficientDigits("point has no further digit (" + to_string(s.status) + ")", 1, 0);
  return {*s.rest, sys.transition(*s.digit, p.a)};
}

StaggeredResult is_staggered(const AugmentedSystem& sys, const DigitString& s) {
  StaggeredResult res;
  res.staggered = true;
  for (int start : sys.states()) {
    std::vector<int> visited{start};
    int a = start;
    for (const auto& d : s) {
      a = sys.transition(d, a);
      visited.push_back(a);
    }
    for (int target : sys.states()) {
      auto it = std::find(visited.begin(), visited.end(), target);
      std::optional<std::size_t> w;
      if (it != visited.end()) w = static_cast<std::size_t>(it - visited.begin());
      else res.staggered = false;
      res.witness[{target, start}] = w;
    }
  }
  return res;
}

std::vector<int> augmented_values(const AugmentedSystem& sys, const DigitStream& x, int a0, std::size_t N) {
  if (!sys.has_state(a0)) throw std::invalid_argument("initial state not in the system");
  std::vector<int> out;
  out.reserve(N);
  auto c = x.cursor();
  int a = a0;
  while (out.size() < N) {
    auto d = c.next();
    if (!d) throw InsufficientDigits("digit stream exhausted", N, out.size());
    out.push_back(a);
    a = sys.transition(*d, a);
  }
  return out;
}

std::vector<int> augmented_values(const AugmentedSystem& sys, const DigitString& x, int a0) {
  return augmented_values(sys, DigitStream::finite(x), a0, x.size());
}

std::string to_string(Arrival a) {
  switch (a) {
    case Arrival::Unchanged: return "unchanged";
    case Arrival::Altered: return "altered";
    case Arrival::Removed: return "removed";
  }
  return "?";
}

std::vector<Arrival> ecf_arrivals(const ConversionTrace& t) {
  std::vector<Arrival> out;
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    if (t.events[i] == EventKind::Delete) out.push_back(Arrival::Removed);
    else if (i > 0 && t.events[i - 1] == EventKind::Delete) out.push_back(Arrival::Altered);
    else out.push_back(Arrival::Unchanged);
  }
  return out;
}

int ecf_state_of(Arrival a) {
  switch (a) {
    case Arrival::Unchanged: return 1;
    case Arrival::Altered: return 2;
    case Arrival::Removed: return 3;
  }
  return 0;
}

std::optional<RationalInterval> mobius_image(const Mobius& f, const RationalInterval& iv) {
  Rational dlo = Rational(f.c) * iv.lo + Rational(f.d);
  Rational dhi = Rational(f.c) * iv.hi + Rational(f.d);
  if (dlo == 0 || dhi == 0 || (dlo > 0) != (dhi > 0)) return std::nullopt;
  Rational ylo = f.apply(iv.lo), yhi = f.apply(iv.hi);
  if (ylo <= yhi) return RationalInterval{ylo, yhi, iv.lo_closed, iv.hi_closed};
  return RationalInterval{yhi, ylo, iv.hi_closed, iv.lo_closed};
}

PiecewiseSystem bounded_rcf_branches(std::uint64_t bound) {
  PiecewiseSystem s{"rcf<=" + std::to_string(bound), {}};
  for (std::uint64_t a = 1; a <= bound; ++a) {
    Digit d(a, 1);
    Integer A = from_u64(a);
    s.branches.push_back({d, rank1_interval(System::rcf(), d), Mobius{-A, 1, 1, 0}});
  }
  return s;
}

PiecewiseSystem base_branches(unsigned b) {
  PiecewiseSystem s{"base" + std::to_string(b), {}};
  System sys = System::base_b(b);
  for (unsigned v = 0; v < b; ++v) {
    Digit d = Digit::base_value(v);
    s.branches.push_back({d, rank1_interval(sys, d), Mobius{Integer(b), Integer(-static_cast<long>(v)), 0, 1}});
  }
  return s;
}

PiecewiseSystem truncated_rcf_branches(std::uint64_t bound) {
  PiecewiseSystem s = bounded_rcf_branches(bound);
  s.name = "rcf-truncated" + std::to_string(bound);
  Integer B = from_u64(bound + 1);
  Digit lump(bound + 1, 1);
  s.branches.push_back({lump, RationalInterval::left_open(0, make_rational(1, B)), Mobius{-B, 1, 1, 0}});
  return s;
}

namespace {

bool tiles_unit(const PiecewiseSystem& sys) {
  std::vector<RationalInterval> ds;
  for (const auto& b : sys.branches) ds.push_back(b.domain);
  std::sort(ds.begin(), ds.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  if (ds.empty() || ds.front().lo != 0 || ds.back().hi != 1) return false;
  for (std::size_t i = 1; i < ds.size(); ++i) {
    if (ds[i].lo != ds[i - 1].hi) return false;
    if (ds[i].lo_closed == ds[i - 1].hi_closed) return false;  // gap or overlap at the seam
  }
  return true;
}

}  // namespace

FullCylinderReport check_full_cylinders(const PiecewiseSystem& sys, unsigned depth) {
  FullCylinderReport rep;
  rep.covers_unit = tiles_unit(sys);
  rep.full = true;
  const RationalInterval omega = RationalInterval::closed(0, 1);
  std::vector<std::size_t> path;
  std::function<bool(const RationalInterval&)> rec = [&](const RationalInterval& K) -> bool {
    if (path.size() == depth) return true;
    for (std::size_t i = 0; i < sys.branches.size(); ++i) {
      const Branch& b = sys.branches[i];
      path.push_back(i);
      RationalInterval piece = K.intersect(b.domain);
      ++rep.cylinders_checked;
      auto img = piece.empty() ? std::nullopt : mobius_image(b.map, piece);
      if (!img || !img->same_hull(omega) || !rec(*img)) {
        if (!rep.failing_branches) rep.failing_branches = path;
        path.pop_back();
        return false;
      }
      path.pop_back();
    }
    return true;
  };
  rep.full = rec(omega);
  return rep;
}

bool check_full_cylinders(System sys, unsigned depth, std::uint64_t alphabet_bound) {
  if (sys.kind == SystemKind::RCF) return check_full_cylinders(bounded_rcf_branches(alphabet_bound), depth).full;
  if (sys.is_base()) return check_full_cylinders(base_branches(sys.base), depth).full;
  throw DomainError("full-cylinder check implemented for RCF and BASE(b)");
}

}  // namespace cfn
