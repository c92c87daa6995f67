#include "cfn/rewrite.hpp"

#include "cfn/errors.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace cfn {

std::string to_string(EventKind k) {
  switch (k) {
    case EventKind::None: return "none";
    case EventKind::Insert: return "insert";
    case EventKind::Singularize: return "singularize";
    case EventKind::Delete: return "delete";
  }
  return "?";
}

DigitString insert_at(const DigitString& s, std::size_t n) {
  if (n < 1 || n >= s.size()) throw InvalidRewrite("insertion index out of range");
  const Digit& a = s[n - 1];
  const Digit& b = s[n];
  if (b.alpha < 2) throw InvalidRewrite("insertion needs alpha_{n+1} >= 2");
  Digit na = Digit::unchecked(a.alpha + static_cast<std::uint64_t>(a.epsilon), -a.epsilon);
  Digit nb = Digit::unchecked(b.alpha - 1, b.epsilon);
  if (a.epsilon == -1 && a.alpha < 2) throw InvalidRewrite("insertion would create alpha 0");
  if (!na.is_valid() || !nb.is_valid()) throw InvalidRewrite("insertion would create an invalid digit");
  std::vector<Digit> out(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n - 1));
  out.push_back(na);
  out.push_back(Digit::unchecked(1, 1));
  out.push_back(nb);
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(n + 1), s.end());
  return DigitString(System::general(), std::move(out));
}

DigitString singularize_at(const DigitString& s, std::size_t n) {
  if (n < 1 || n >= s.size()) throw InvalidRewrite("singularization index out of range");
  if (!s[n].is_one()) throw InvalidRewrite("singularization needs digit n+1 = (1,1)");
  const Digit& a = s[n - 1];
  if (a.epsilon == -1 && a.alpha < 2) throw InvalidRewrite("singularization would create alpha 0");
  Digit na = Digit::unchecked(a.alpha + static_cast<std::uint64_t>(a.epsilon), -a.epsilon);
  if (!na.is_valid()) throw InvalidRewrite("singularization would create an invalid digit");
  std::vector<Digit> out(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n - 1));
  out.push_back(na);
  if (n + 1 < s.size()) {
    const Digit& c = s[n + 1];
    out.push_back(Digit::unchecked(c.alpha + 1, c.epsilon));
    out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(n + 2), s.end());
  }
  return DigitString(System::general(), std::move(out));
}

std::vector<RewriteEvent> ConversionTrace::event_log() const {
  std::vector<RewriteEvent> out;
  for (std::size_t i = 0; i < events.size(); ++i) out.push_back({i + 1, events[i]});
  return out;
}

std::size_t ConversionTrace::m_of(std::size_t n) const {
  if (n < 1 || n > m.size()) throw NeedsMoreInput("m(n) outside the decided window", n > m.size() ? n - m.size() : 1);
  return m[n - 1];
}

std::size_t m_inverse(const ConversionTrace& t, std::size_t N) {
  if (N == 0) return 1;
  auto it = std::lower_bound(t.m.begin(), t.m.end(), N);
  if (it == t.m.end()) {
    std::size_t have = t.m.size();
    std::size_t last = have ? t.m.back() : 0;
    std::size_t ext = have && last ? (N - last) * have / last + 2 : N + 2;
    throw NeedsMoreInput("trace does not reach output index " + std::to_string(N), ext);
  }
  return static_cast<std::size_t>(it - t.m.begin()) + 1;
}

namespace {

/// Pull-based input with lookahead, bounded by max_input.
class Reader {
 public:
  Reader(const DigitStream& s, std::size_t limit) : cur_(s.cursor()), limit_(limit) {}

  const Digit* get(std::size_t i) {
    while (buf_.size() <= i && !ended_) {
      if (buf_.size() >= limit_) {
        ended_ = true;
        limited_ = true;
        break;
      }
      auto d = cur_.next();
      if (!d) {
        ended_ = true;
        break;
      }
      buf_.push_back(*d);
    }
    return i < buf_.size() ? &buf_[i] : nullptr;
  }

  /// The stream itself ended (not the max_input cap).
  bool natural_end() const { return ended_ && !limited_; }
  std::size_t read() const { return buf_.size(); }
  const std::vector<Digit>& buffer() const { return buf_; }

 private:
  DigitStream::Cursor cur_;
  std::size_t limit_;
  std::vector<Digit> buf_;
  bool ended_ = false, limited_ = false;
};

void require_rcf(const Digit& d) {
  if (d.epsilon != 1 || !d.is_valid()) throw InadmissibleString("RCF input digit " + to_string(d) + " has epsilon -1");
}

Digit shifted(const Digit& d, int mod) {
  return Digit::unchecked(static_cast<std::uint64_t>(static_cast<long long>(d.alpha) + mod), d.epsilon);
}

/// Working digits read but not emitted.
DigitString residual_of(const Reader& r, std::size_t n, int mod, bool pending_delete) {
  std::vector<Digit> out;
  const auto& buf = r.buffer();
  std::size_t i = n;
  if (pending_delete) {
    ++i;
    mod = 1;
  }
  if (i < buf.size()) {
    out.push_back(shifted(buf[i], mod));
    out.insert(out.end(), buf.begin() + static_cast<std::ptrdiff_t>(i + 1), buf.end());
  }
  return DigitString(System::general(), std::move(out));
}

void finish_ocf(std::vector<Digit>& out, bool complete) {
  if (complete && !out.empty() && out.back().epsilon == -1) out.back().epsilon = 1;
}

constexpr std::uint64_t kMaxBlock = std::uint64_t(1) << 26;

}  // namespace

ConversionTrace rcf_to_ocf(const DigitStream& in, const ConversionOptions& opt) {
  ConversionTrace t;
  Reader r(in, opt.max_input);
  std::vector<Digit> out;
  int mod = 0;
  bool pending_delete = false;
  std::size_t n = 0;
  bool stopped = false;
  while (out.size() < opt.max_output) {
    const Digit* cur = r.get(n);
    if (!cur) break;
    require_rcf(*cur);
    if (pending_delete) {
      t.events.push_back(EventKind::Delete);
      t.m.push_back(t.m.back());
      pending_delete = false;
      mod = 1;
      ++n;
      continue;
    }
    std::uint64_t w = cur->alpha + static_cast<std::uint64_t>(static_cast<long long>(mod));
    std::size_t pos = out.size() + 1;
    if (w % 2 == 1) {
      out.push_back(Digit::unchecked(w, 1));
      t.events.push_back(EventKind::None);
      t.m.push_back(pos);
      mod = 0;
      ++n;
      continue;
    }
    const Digit* nxt = r.get(n + 1);
    if (!nxt) {
      if (r.natural_end() && opt.close_finite) {
        // the digit after the end is infinite: insertion
        out.push_back(Digit::unchecked(w + 1, -1));
        out.push_back(Digit::unchecked(1, 1));
        t.events.push_back(EventKind::Insert);
        t.m.push_back(pos);
        mod = 0;
        ++n;
        continue;
      }
      stopped = true;
      break;
    }
    require_rcf(*nxt);
    out.push_back(Digit::unchecked(w + 1, -1));
    t.m.push_back(pos);
    if (nxt->alpha > 1) {
      out.push_back(Digit::unchecked(1, 1));
      t.events.push_back(EventKind::Insert);
      mod = -1;
    } else {
      t.events.push_back(EventKind::Singularize);
      pending_delete = true;
    }
    ++n;
  }
  t.input_read = r.read();
  t.complete = !stopped && !pending_delete && n == r.read() && r.natural_end() && opt.close_finite;
  if (!t.complete) t.residual = residual_of(r, n, mod, pending_delete);
  finish_ocf(out, t.complete);
  t.output = DigitString(System::ocf(), std::move(out));
  return t;
}

ConversionTrace rcf_to_ecf(const DigitStream& in, const ConversionOptions& opt) {
  ConversionTrace t;
  Reader r(in, opt.max_input);
  std::vector<Digit> out;
  int mod = 0;
  bool pending_delete = false;
  bool after_insert = false;
  std::size_t n = 0;
  bool stopped = false;
  while (out.size() < opt.max_output) {
    const Digit* cur = r.get(n);
    if (!cur) break;
    require_rcf(*cur);
    if (pending_delete) {
      t.events.push_back(EventKind::Delete);
      t.m.push_back(t.m.back() + (after_insert ? 1 : 0));
      pending_delete = false;
      mod = 1;
      ++n;
      continue;
    }
    std::uint64_t w = cur->alpha + static_cast<std::uint64_t>(static_cast<long long>(mod));
    std::size_t pos = out.size() + 1;
    if (w % 2 == 0) {
      out.push_back(Digit::unchecked(w, 1));
      t.events.push_back(EventKind::None);
      t.m.push_back(pos);
      mod = 0;
      ++n;
      continue;
    }
    const Digit* nxt = r.get(n + 1);
    if (!nxt) {
      stopped = true;  // an odd final digit has the infinite tail (2,-1)^inf
      break;
    }
    require_rcf(*nxt);
    out.push_back(Digit::unchecked(w + 1, -1));
    t.m.push_back(pos);
    if (nxt->alpha == 1) {
      t.events.push_back(EventKind::Singularize);
      after_insert = false;
    } else {
      if (nxt->alpha - 1 > kMaxBlock) throw DigitOverflow("replacement block too long");
      out.insert(out.end(), nxt->alpha - 1, Digit::unchecked(2, -1));
      t.events.push_back(EventKind::Insert);
      after_insert = true;
    }
    pending_delete = true;
    ++n;
  }
  t.input_read = r.read();
  t.complete = !stopped && !pending_delete && n == r.read() && r.natural_end() && opt.close_finite;
  if (!t.complete) t.residual = residual_of(r, n, mod, pending_delete);
  t.output = DigitString(System::ecf(), std::move(out));
  return t;
}

ConversionTrace ocf_to_rcf(const DigitStream& in, const ConversionOptions& opt) {
  ConversionTrace t;
  Reader r(in, opt.max_input);
  std::vector<Digit> out;
  int mod = 0;
  bool pending_delete = false;
  std::size_t n = 0;
  bool stopped = false;
  while (out.size() < opt.max_output) {
    const Digit* cur = r.get(n);
    if (!cur) break;
    if (pending_delete) {
      t.events.push_back(EventKind::Delete);
      t.m.push_back(t.m.back());
      pending_delete = false;
      mod = 1;
      ++n;
      continue;
    }
    std::uint64_t w = cur->alpha + static_cast<std::uint64_t>(static_cast<long long>(mod));
    std::size_t pos = out.size() + 1;
    if (cur->epsilon == 1) {
      out.push_back(Digit::unchecked(w, 1));
      t.events.push_back(EventKind::None);
      t.m.push_back(pos);
      mod = 0;
      ++n;
      continue;
    }
    if (w < 2) throw InvalidRewrite("OCF input digit reaches alpha < 2 with epsilon -1");
    const Digit* nxt = r.get(n + 1);
    if (!nxt) {
      if (r.natural_end() && opt.close_finite) {
        out.push_back(Digit::unchecked(w, 1));  // the last epsilon carries no value
        t.events.push_back(EventKind::None);
        t.m.push_back(pos);
        mod = 0;
        ++n;
        continue;
      }
      stopped = true;
      break;
    }
    out.push_back(Digit::unchecked(w - 1, 1));
    t.m.push_back(pos);
    if (nxt->is_one()) {
      t.events.push_back(EventKind::Singularize);
      pending_delete = true;
    } else {
      if (nxt->alpha < 2 || (nxt->alpha == 2 && nxt->epsilon == -1)) throw InvalidRewrite("insertion would create an invalid digit");
      out.push_back(Digit::unchecked(1, 1));
      t.events.push_back(EventKind::Insert);
      mod = -1;
    }
    ++n;
  }
  t.input_read = r.read();
  t.complete = !stopped && !pending_delete && n == r.read() && r.natural_end() && opt.close_finite;
  if (!t.complete) t.residual = residual_of(r, n, mod, pending_delete);
  t.output = DigitString(System::rcf(), std::move(out));
  return t;
}

// ---- literal sweeps ----

namespace {

enum class Action { Skip, Insert, Singularize };

/// Decides what the sweep does at position p; nullopt when the next digit is needed but absent.
using Rule = std::function<std::optional<Action>(const Digit& cur, const Digit* next)>;

struct Sweep {
  std::vector<Digit> work;
  std::vector<long> origin;  // -1 for digits created by insertion
};

ConversionTrace slow_sweep(const DigitString& in, bool close_finite, const Rule& rule, System out_sys,
                           bool close_even_with_insert, bool close_minus_as_plus) {
  const std::size_t L = in.size();
  Sweep sw{in.digits(), {}};
  for (std::size_t i = 0; i < L; ++i) sw.origin.push_back(static_cast<long>(i));

  ConversionTrace t;
  t.events.assign(L, EventKind::None);
  t.m.assign(L, 0);
  std::vector<bool> seen(L, false);
  std::size_t decided_upto = 0;  // origins < decided_upto are recorded

  auto record = [&](long o, EventKind k, std::size_t m) {
    t.events[static_cast<std::size_t>(o)] = k;
    t.m[static_cast<std::size_t>(o)] = m;
    seen[static_cast<std::size_t>(o)] = true;
    decided_upto = std::max(decided_upto, static_cast<std::size_t>(o) + 1);
  };
  auto record_delete = [&](long o) {
    std::size_t prev = static_cast<std::size_t>(o) - 1;
    std::size_t m = t.m[prev] + (t.events[prev] == EventKind::Singularize ? 0 : 1);
    record(o, EventKind::Delete, m);
  };

  std::size_t p = 0;
  bool stopped = false;
  while (p < sw.work.size()) {
    const Digit cur = sw.work[p];
    const Digit* nxt = p + 1 < sw.work.size() ? &sw.work[p + 1] : nullptr;
    long o = sw.origin[p];
    auto act = rule(cur, nxt);
    if (!act) {
      if (!close_finite) {
        stopped = true;
        break;
      }
      if (close_even_with_insert) {
        sw.work[p] = Digit::unchecked(cur.alpha + 1, -1);
        sw.work.push_back(Digit::unchecked(1, 1));
        sw.origin.push_back(-1);
        if (o >= 0) record(o, EventKind::Insert, p + 1);
        ++p;
        continue;
      }
      if (close_minus_as_plus) {
        sw.work[p].epsilon = 1;
        if (o >= 0) record(o, EventKind::None, p + 1);
        ++p;
        continue;
      }
      stopped = true;
      break;
    }
    DigitString ws(System::general(), sw.work);
    if (*act == Action::Insert) {
      ws = insert_at(ws, p + 1);
      sw.origin.insert(sw.origin.begin() + static_cast<std::ptrdiff_t>(p + 1), -1);
      if (o >= 0) record(o, EventKind::Insert, p + 1);
    } else if (*act == Action::Singularize) {
      ws = singularize_at(ws, p + 1);
      if (o >= 0) record(o, EventKind::Singularize, p + 1);
      long gone = sw.origin[p + 1];
      sw.origin.erase(sw.origin.begin() + static_cast<std::ptrdiff_t>(p + 1));
      if (gone >= 0) record_delete(gone);
    } else if (o >= 0) {
      record(o, EventKind::None, p + 1);
    }
    sw.work = ws.digits();
    ++p;
  }
  t.events.resize(decided_upto);
  t.m.resize(decided_upto);
  t.input_read = L;
  t.complete = !stopped && close_finite;
  std::vector<Digit> out(sw.work.begin(), sw.work.begin() + static_cast<std::ptrdiff_t>(std::min(p, sw.work.size())));
  if (!t.complete) {
    t.residual = DigitString(System::general(),
                             std::vector<Digit>(sw.work.begin() + static_cast<std::ptrdiff_t>(std::min(p, sw.work.size())), sw.work.end()));
  }
  if (out_sys.kind == SystemKind::OCF) finish_ocf(out, t.complete);
  t.output = DigitString(out_sys, std::move(out));
  return t;
}

}  // namespace

ConversionTrace rcf_to_ocf_slow(const DigitString& in, bool close_finite) {
  for (const auto& d : in) require_rcf(d);
  Rule rule = [](const Digit& cur, const Digit* nxt) -> std::optional<Action> {
    if (cur.alpha % 2 == 1) return Action::Skip;
    if (!nxt) return std::nullopt;
    return nxt->alpha == 1 ? Action::Singularize : Action::Insert;
  };
  return slow_sweep(in, close_finite, rule, System::ocf(), true, false);
}

ConversionTrace rcf_to_ecf_slow(const DigitString& in, bool close_finite) {
  for (const auto& d : in) require_rcf(d);
  Rule rule = [](const Digit& cur, const Digit* nxt) -> std::optional<Action> {
    if (cur.alpha % 2 == 0) return Action::Skip;
    if (!nxt) return std::nullopt;
    return nxt->is_one() ? Action::Singularize : Action::Insert;
  };
  return slow_sweep(in, close_finite, rule, System::ecf(), false, false);
}

ConversionTrace ocf_to_rcf_slow(const DigitString& in, bool close_finite) {
  Rule rule = [](const Digit& cur, const Digit* nxt) -> std::optional<Action> {
    if (cur.epsilon == 1) return Action::Skip;
    if (!nxt) return std::nullopt;
    return nxt->is_one() ? Action::Singularize : Action::Insert;
  };
  return slow_sweep(in, close_finite, rule, System::rcf(), false, true);
}

}  // namespace cfn
