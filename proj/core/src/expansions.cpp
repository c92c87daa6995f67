#include "cfn/expansions.hpp"

#include "cfn/continuant.hpp"
#include "cfn/errors.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <variant>

namespace cfn {

std::string to_string(ExpansionStatus s) {
  switch (s) {
    case ExpansionStatus::Complete: return "complete";
    case ExpansionStatus::Terminated: return "terminated";
    case ExpansionStatus::PrecisionExhausted: return "precision_exhausted";
  }
  return "?";
}

namespace {

/// x = p / q in lowest terms, q > 0.
struct Frac {
  Integer p, q;
};

using State = std::variant<Frac, RationalInterval, Quadratic>;

State state_of(const ExactNumber& x) {
  if (x.is_rational()) return Frac{x.as_rational().get_num(), x.as_rational().get_den()};
  if (x.is_interval()) {
    const auto& iv = x.as_interval();
    if (iv.lo == iv.hi) return Frac{iv.lo.get_num(), iv.lo.get_den()};
    return iv;
  }
  return x.as_quadratic();
}

ExactNumber number_of(const State& s) {
  if (auto f = std::get_if<Frac>(&s)) return ExactNumber::rational(f->p, f->q);
  if (auto iv = std::get_if<RationalInterval>(&s)) return ExactNumber::interval(iv->lo, iv->hi);
  return ExactNumber::quadratic(std::get<Quadratic>(s));
}

std::uint64_t narrow(const Integer& a) {
  auto v = to_u64(a);
  if (!v) throw DigitOverflow("partial quotient " + a.get_str() + " exceeds 64 bits");
  return *v;
}

Integer floor_inv(const Rational& r) { return floor_div(r.get_den(), r.get_num()); }

/// One step of the system's shift on the internal state, in place.
ExpansionStatus step(System sys, State& st, Digit& out) {
  const bool ocf = sys.kind == SystemKind::OCF;
  if (sys.kind != SystemKind::RCF && !ocf && !sys.is_base()) {
    throw DomainError("no pointwise shift for " + sys.name());
  }
  if (sys.is_base()) {
    const Integer b = sys.base;
    if (auto f = std::get_if<Frac>(&st)) {
      if (f->p >= f->q) throw DomainError("base expansion needs x < 1");
      Integer bp = b * f->p;
      Integer d = floor_div(bp, f->q);
      Rational r = make_rational(bp - d * f->q, f->q);
      out = Digit::base_value(narrow(d));
      st = Frac{r.get_num(), r.get_den()};
      return ExpansionStatus::Complete;
    }
    if (auto iv = std::get_if<RationalInterval>(&st)) {
      Rational lo = iv->lo * Rational(b), hi = iv->hi * Rational(b);
      Integer dl = floor_of(lo), dh = floor_of(hi);
      if (dl != dh || dl >= b) return ExpansionStatus::PrecisionExhausted;
      out = Digit::base_value(narrow(dl));
      st = RationalInterval::closed(lo - Rational(dl), hi - Rational(dl));
      return ExpansionStatus::Complete;
    }
    auto q = std::get<Quadratic>(st).mul(Rational(b));
    Integer d = q.floor();
    out = Digit::base_value(narrow(d));
    st = q.add(Rational(-d));
    return ExpansionStatus::Complete;
  }

  if (auto f = std::get_if<Frac>(&st)) {
    if (f->p == 0) return ExpansionStatus::Terminated;
    Integer a, r;
    mpz_tdiv_qr(a.get_mpz_t(), r.get_mpz_t(), f->q.get_mpz_t(), f->p.get_mpz_t());
    if (!ocf || mpz_odd_p(a.get_mpz_t())) {
      out = Digit(narrow(a), 1);
      f->q.swap(f->p);
      f->p.swap(r);
    } else {
      out = Digit(narrow(a + 1), -1);
      Integer np = f->p - r;
      f->q = f->p;
      f->p.swap(np);
    }
    return ExpansionStatus::Complete;
  }
  if (auto iv = std::get_if<RationalInterval>(&st)) {
    if (iv->lo <= 0) return ExpansionStatus::PrecisionExhausted;
    Integer al = floor_inv(iv->lo), ah = floor_inv(iv->hi);
    if (al != ah) return ExpansionStatus::PrecisionExhausted;
    Rational il = 1 / iv->lo, ih = 1 / iv->hi;
    if (!ocf || mpz_odd_p(al.get_mpz_t())) {
      out = Digit(narrow(al), 1);
      st = RationalInterval::closed(ih - Rational(al), il - Rational(al));
    } else {
      out = Digit(narrow(al + 1), -1);
      Rational top(al + 1);
      st = RationalInterval::closed(top - il, top - ih);
    }
    return ExpansionStatus::Complete;
  }
  const Quadratic& q = std::get<Quadratic>(st);
  Quadratic inv = q.reciprocal();
  Integer a = inv.floor();
  if (!ocf || mpz_odd_p(a.get_mpz_t())) {
    out = Digit(narrow(a), 1);
    st = inv.add(Rational(-a));
  } else {
    out = Digit(narrow(a + 1), -1);
    st = inv.neg().add(Rational(a + 1));
  }
  return ExpansionStatus::Complete;
}

Expansion run(System sys, const ExactNumber& x, std::size_t n) {
  State st = state_of(x);
  std::vector<Digit> ds;
  ds.reserve(std::min<std::size_t>(n, 1 << 16));
  ExpansionStatus status = ExpansionStatus::Complete;
  while (ds.size() < n) {
    Digit d;
    status = step(sys, st, d);
    if (status != ExpansionStatus::Complete) break;
    ds.push_back(d);
  }
  if (ds.size() == n) status = ExpansionStatus::Complete;
  return {DigitString(sys, std::move(ds)), status};
}

}  // namespace

ShiftStep shift(System sys, const ExactNumber& x) {
  State st = state_of(x);
  Digit d;
  ShiftStep out;
  out.status = step(sys, st, d);
  if (out.status == ExpansionStatus::Complete) {
    out.digit = d;
    out.rest = number_of(st);
  }
  return out;
}

Expansion rcf_digits(const ExactNumber& x, std::size_t n) { return run(System::rcf(), x, n); }
Expansion ocf_digits(const ExactNumber& x, std::size_t n) { return run(System::ocf(), x, n); }
Expansion base_b_orbit(const ExactNumber& x, unsigned b, std::size_t n) { return run(System::base_b(b), x, n); }

Expansion expand(System sys, const ExactNumber& x, std::size_t n) {
  if (sys.kind == SystemKind::ECF || sys.kind == SystemKind::GENERAL) {
    throw DomainError("no pointwise digit extraction for " + sys.name());
  }
  return run(sys, x, n);
}

ExactNumber parse_decimal(const std::string& text) {
  std::string t = text;
  if (t.empty()) throw ParseError("empty decimal");
  std::size_t i = 0;
  std::string ip;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ip.push_back(t[i++]);
  std::string fp;
  if (i < t.size()) {
    if (t[i] != '.') throw ParseError("bad decimal '" + text + "'");
    ++i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) fp.push_back(t[i++]);
    if (fp.empty()) throw ParseError("decimal point without digits in '" + text + "'");
  }
  if (i != t.size() || (ip.empty() && fp.empty())) throw ParseError("bad decimal '" + text + "'");
  Integer whole = ip.empty() ? Integer(0) : Integer(ip, 10);
  if (whole != 0) throw ParseError("decimal must lie in [0,1)");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
  Integer num = fp.empty() ? Integer(0) : Integer(fp, 10);
  return ExactNumber::interval(make_rational(num, scale), make_rational(num + 1, scale));
}

Expansion digits_from_decimal(const std::string& text, System sys, std::size_t n) {
  return expand(sys, parse_decimal(text), n);
}

namespace {

ExactNumber apply_prefix(const DigitString& pre, const std::variant<Rational, Quadratic>& y) {
  Mobius P = prefix_map(pre);
  if (auto r = std::get_if<Rational>(&y)) return ExactNumber::rational(P.apply(*r));
  return ExactNumber::quadratic(std::get<Quadratic>(y).mobius(P.a, P.b, P.c, P.d));
}

}  // namespace

ExactNumber periodic_point(const DigitString& pre, const DigitString& per) {
  if (per.empty()) throw DomainError("period must be non-empty");
  if (per.system().is_base()) {
    const unsigned b = per.system().base;
    Integer bl, val = 0, pval = 0, bp;
    mpz_ui_pow_ui(bl.get_mpz_t(), b, per.size());
    mpz_ui_pow_ui(bp.get_mpz_t(), b, pre.size());
    for (const auto& d : per) val = val * b + from_u64(d.value());
    for (const auto& d : pre) pval = pval * b + from_u64(d.value());
    Rational tail = make_rational(val, bl - 1);
    Rational x = (Rational(pval) + tail) / Rational(bp);
    x.canonicalize();
    if (x >= 1) throw DomainError("periodic base expansion equals 1");
    return ExactNumber::rational(x);
  }
  Mobius M = prefix_map(per);
  // y = (A y + B) / (C y + D)  <=>  C y^2 + (D - A) y - B = 0
  Integer lin = M.d - M.a;
  std::variant<Rational, Quadratic> y = Rational(0);
  auto in_open_unit = [](const auto& v) { return v > 0 && v < 1; };
  if (M.c == 0) {
    if (lin == 0) throw DomainError("degenerate period");
    Rational r = make_rational(M.b, lin);
    if (!in_open_unit(r)) throw DomainError("periodic fixed point not in (0,1)");
    y = r;
  } else {
    Integer disc = lin * lin + 4 * M.b * M.c;
    if (disc < 0) throw DomainError("periodic fixed point is not real");
    Integer two_c = 2 * M.c;
    if (is_perfect_square(disc)) {
      Integer s = isqrt(disc);
      std::vector<Rational> roots;
      for (const Integer& cand : {Integer(-lin + s), Integer(-lin - s)}) {
        Rational r = make_rational(cand, two_c);
        if (in_open_unit(r)) roots.push_back(r);
      }
      if (roots.empty()) throw DomainError("periodic fixed point not in (0,1)");
      y = roots.front();
    } else {
      std::vector<Quadratic> roots;
      for (int sgn : {1, -1}) {
        Quadratic q(-lin, Integer(sgn), two_c, disc);
        if (q.sign() > 0 && q.compare(Rational(1)) < 0) roots.push_back(q);
      }
      if (roots.empty()) throw DomainError("periodic fixed point not in (0,1)");
      if (roots.size() == 2) {
        // keep the attracting fixed point: |det| < (C y + D)^2
        double det = std::fabs(to_double(Rational(M.det())));
        double c = to_double(Rational(M.c)), d = to_double(Rational(M.d));
        double v0 = c * roots[0].to_double() + d;
        if (!(det < v0 * v0)) roots.erase(roots.begin());
      }
      y = roots.front();
    }
  }
  return apply_prefix(pre, y);
}

ExactNumber periodic_point(const DigitString& pre, const DigitString& per, unsigned k) {
  ExactNumber x = periodic_point(pre, per);
  if (x.is_rational()) return ExactNumber::interval(x.as_rational(), x.as_rational());
  auto iv = x.as_quadratic().enclose(k);
  Rational lo = iv.lo < 0 ? Rational(0) : iv.lo;
  Rational hi = iv.hi > 1 ? Rational(1) : iv.hi;
  return ExactNumber::interval(lo, hi);
}

DigitStream expansion_stream(System sys, const ExactNumber& x) {
  if (sys.kind == SystemKind::ECF || sys.kind == SystemKind::GENERAL) {
    throw DomainError("no pointwise digit extraction for " + sys.name());
  }
  auto init = std::make_shared<const State>(state_of(x));
  return DigitStream::generated(sys, [sys, init]() -> DigitProducer {
    auto st = std::make_shared<State>(*init);
    auto done = std::make_shared<bool>(false);
    return [sys, st, done]() -> std::optional<Digit> {
      if (*done) return std::nullopt;
      Digit d;
      if (step(sys, *st, d) != ExpansionStatus::Complete) {
        *done = true;
        return std::nullopt;
      }
      return d;
    };
  });
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

struct CfSpec {
  DigitString pre, per;
  bool periodic = false;
};

CfSpec parse_cf_spec(const std::string& body) {
  std::string t = trim(body);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw ParseError("cf spec must look like cf:[a,b;c,d]");
  t = t.substr(1, t.size() - 2);
  CfSpec out;
  auto semi = t.find(';');
  std::string a = semi == std::string::npos ? t : t.substr(0, semi);
  out.pre = parse_digit_string(trim(a), System::rcf());
  if (semi != std::string::npos) {
    out.per = parse_digit_string(trim(t.substr(semi + 1)), System::rcf());
    if (out.per.empty()) throw ParseError("empty period in cf spec");
    out.periodic = true;
  }
  return out;
}

std::pair<unsigned, std::string> parse_base_spec(const std::string& text) {
  auto colon = text.find(':');
  std::string b = text.substr(1, colon - 1);
  if (b.empty() || b.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad base in '" + text + "'");
  std::string block = trim(text.substr(colon + 1));
  if (block.empty()) throw ParseError("empty base block");
  return {static_cast<unsigned>(std::stoul(b)), block};
}

bool is_base_spec(const std::string& t) {
  auto colon = t.find(':');
  return colon != std::string::npos && colon > 1 && t[0] == 'b' &&
         t.substr(1, colon - 1).find_first_not_of("0123456789") == std::string::npos;
}

}  // namespace

ExactNumber parse_number(const std::string& raw) {
  std::string t = trim(raw);
  if (t.empty()) throw ParseError("empty number");
  if (t.rfind("dec:", 0) == 0) return parse_decimal(t.substr(4));
  if (t.rfind("cf:", 0) == 0) {
    CfSpec spec = parse_cf_spec(t.substr(3));
    if (spec.periodic) return periodic_point(spec.pre, spec.per);
    return ExactNumber::rational(eval_finite_cf(spec.pre));
  }
  if (is_base_spec(t)) {
    auto [b, block] = parse_base_spec(t);
    DigitString per = parse_digit_string(block, System::base_b(b));
    return periodic_point(DigitString(System::base_b(b), {}), per);
  }
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return ExactNumber::rational(Integer(t, 10), Integer(1));
    return ExactNumber::rational(Integer(trim(t.substr(0, slash)), 10), Integer(trim(t.substr(slash + 1)), 10));
  } catch (const std::invalid_argument&) {
    throw ParseError("cannot parse number '" + raw + "'");
  }
}

DigitStream parse_number_stream(const std::string& raw, System sys) {
  std::string t = trim(raw);
  if (t.rfind("cf:", 0) == 0 && sys.kind == SystemKind::RCF) {
    CfSpec spec = parse_cf_spec(t.substr(3));
    if (spec.periodic) return DigitStream::periodic(spec.pre, spec.per);
    return DigitStream::finite(spec.pre);
  }
  if (is_base_spec(t) && sys.is_base()) {
    auto [b, block] = parse_base_spec(t);
    if (b == sys.base) {
      DigitString per = parse_digit_string(block, sys);
      return DigitStream::periodic(DigitString(sys, {}), per);
    }
  }
  return expansion_stream(sys, parse_number(t));
}

}  // namespace cfn
