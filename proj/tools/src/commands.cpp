#include "cfn/augmented.hpp"
#include "cfn/continuant.hpp"
#include "cfn/cylinder.hpp"
#include "cfn/errors.hpp"
#include "cfn/expansions.hpp"
#include "cfn/forward.hpp"
#include "cfn/measure.hpp"
#include "cfn/normality.hpp"
#include "cfn/rewrite.hpp"
#include "cfn_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cfn::cli {

namespace {

Json digits_json(const DigitString& s) {
  Json a = Json::array();
  if (s.system().is_base()) {
    for (auto v : s.values()) a.push_back(v);
    return a;
  }
  for (const auto& d : s) a.push_back(Json::array({d.alpha, d.epsilon}));
  return a;
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(12);
  ss << v;
  return ss.str();
}

void digit_rows(Report& r, const DigitString& s) {
  r.csv_header = {"index", "alpha", "epsilon"};
  for (std::size_t i = 0; i < s.size(); ++i) {
    r.csv_rows.push_back({std::to_string(i + 1), std::to_string(s[i].alpha), std::to_string(s[i].epsilon)});
  }
}

bool looks_like_number(const std::string& t) {
  if (t.rfind("cf:", 0) == 0 || t.rfind("dec:", 0) == 0 || t.find('/') != std::string::npos) return true;
  return t.size() > 2 && t[0] == 'b' && std::isdigit(static_cast<unsigned char>(t[1])) && t.find(':') != std::string::npos;
}

std::string required_input(const Params& p) {
  if (p.config().input.empty()) throw ParseError("--input is required for " + p.config().command);
  return p.config().input;
}

/// RCF digits of --input, or of the sampled point (seed, bits).
DigitStream rcf_source(const Params& p, std::uint64_t seed) {
  const auto& in = p.config().input;
  if (!in.empty()) {
    return looks_like_number(in) ? parse_number_stream(in, System::rcf())
                                 : DigitStream::finite(parse_digit_string(in, System::rcf()));
  }
  return sample_rcf_stream(seed, p.config().bits);
}

Json source_json(const Params& p, std::uint64_t seed) {
  if (!p.config().input.empty()) return p.config().input;
  return "sample_point(seed=" + std::to_string(seed) + ", bits=" + std::to_string(p.config().bits) + ")";
}

Report expand_cmd(const Params& p) {
  Report r;
  System sys = System::parse(p.text("system", "rcf"));
  std::size_t n = p.count("digits", 20);
  std::string in = required_input(p);
  DigitString digits(sys, {});
  std::string status;
  auto stream = parse_number_stream(in, sys);
  if (stream.kind() == DigitStream::Kind::EventuallyPeriodic) {
    digits = stream.take(n);
    status = to_string(ExpansionStatus::Complete);
  } else {
    auto e = expand(sys, parse_number(in), n);
    digits = e.digits;
    status = to_string(e.status);
  }
  r.results["system"] = sys.name();
  r.results["value"] = parse_number(in).to_string();
  r.results["digits"] = digits_json(digits);
  r.results["text"] = to_compact_text(digits);
  r.results["count"] = digits.size();
  r.results["status"] = status;
  digit_rows(r, digits);
  return r;
}

Report convert_cmd(const Params& p) {
  Report r;
  System from = System::parse(p.text("from", "rcf"));
  System to = System::parse(p.text("to", "ocf"));
  std::size_t n = p.count("digits", 20);
  bool slow = p.boolean("slow", false);
  bool prefix = p.boolean("prefix", false);
  std::string in = required_input(p);
  DigitStream stream = looks_like_number(in) ? parse_number_stream(in, from)
                                             : DigitStream::finite(parse_digit_string(in, from));
  const bool rcf_ocf = from.kind == SystemKind::RCF && to.kind == SystemKind::OCF;
  const bool ocf_rcf = from.kind == SystemKind::OCF && to.kind == SystemKind::RCF;
  const bool rcf_ecf = from.kind == SystemKind::RCF && to.kind == SystemKind::ECF;
  if (!rcf_ocf && !ocf_rcf && !rcf_ecf) {
    throw ParseError("unsupported conversion " + from.name() + " -> " + to.name());
  }
  ConversionTrace t;
  if (slow) {
    if (!stream.is_finite()) throw ParseError("--slow needs a finite digit string");
    auto s = stream.take(std::numeric_limits<std::size_t>::max());
    t = rcf_ocf ? rcf_to_ocf_slow(s, !prefix) : ocf_rcf ? ocf_to_rcf_slow(s, !prefix) : rcf_to_ecf_slow(s, !prefix);
  } else {
    ConversionOptions opt;
    opt.max_output = n;
    opt.close_finite = !prefix;
    t = rcf_ocf ? rcf_to_ocf(stream, opt) : ocf_rcf ? ocf_to_rcf(stream, opt) : rcf_to_ecf(stream, opt);
  }
  DigitString out = t.output.size() > n ? t.output.slice(0, n) : t.output;
  r.results["from"] = from.name();
  r.results["to"] = to.name();
  r.results["output"] = digits_json(out);
  r.results["text"] = to_compact_text(out);
  Json ev = Json::array();
  for (const auto& e : t.event_log()) ev.push_back({{"index", e.index}, {"kind", to_string(e.kind)}});
  r.results["events"] = ev;
  r.results["m"] = t.m;
  r.results["input_read"] = t.input_read;
  r.results["complete"] = t.complete;
  r.results["residual"] = digits_json(t.residual);
  digit_rows(r, out);
  return r;
}

Report measure_cmd(const Params& p) {
  Report r;
  System sys = System::parse(p.text("system", "rcf"));
  auto s = parse_digit_string(p.text("string", ""), sys);
  auto c = cylinder_interval(s);
  r.results["system"] = sys.name();
  r.results["prefix"] = digits_json(s);
  r.results["interval"] = c.interval.to_string();
  r.results["lo"] = to_string(c.interval.lo);
  r.results["hi"] = to_string(c.interval.hi);
  r.results["lo_closed"] = c.interval.lo_closed;
  r.results["hi_closed"] = c.interval.hi_closed;
  r.results["length"] = to_string(c.interval.length());
  std::string mv, eb;
  if (has_finite_measure(sys)) {
    auto m = invariant_measure(sys, c.interval);
    r.results["measure"] = m.value;
    r.results["error_bound"] = m.error_bound;
    mv = fmt(m.value);
    eb = fmt(m.error_bound);
  } else {
    r.results["measure"] = nullptr;
  }
  r.csv_header = {"prefix", "lo", "hi", "lo_closed", "hi_closed", "measure", "error_bound"};
  r.csv_rows.push_back({to_compact_text(s), to_string(c.interval.lo), to_string(c.interval.hi),
                        c.interval.lo_closed ? "true" : "false", c.interval.hi_closed ? "true" : "false", mv, eb});
  return r;
}

Report staggered_cmd(const Params& p) {
  Report r;
  std::string name = p.text("system", "rcf-star");
  AugmentedSystem sys = name == "rcf-star" ? rcf_star() : name == "ecf-aug" ? ecf_aug()
                                                                            : throw ParseError("unknown augmented system '" + name + "'");
  auto s = parse_digit_string(p.text("string", ""), System::rcf());
  auto res = is_staggered(sys, s);
  r.results["system"] = name;
  r.results["string"] = to_compact_text(s);
  r.results["staggered"] = res.staggered;
  Json w = Json::array();
  r.csv_header = {"a", "a_prime", "i"};
  for (const auto& [key, i] : res.witness) {
    w.push_back({{"a", key.first}, {"a_prime", key.second}, {"i", i ? Json(*i) : Json(nullptr)}});
    r.csv_rows.push_back({std::to_string(key.first), std::to_string(key.second), i ? std::to_string(*i) : ""});
  }
  r.results["witness"] = w;
  if (p.has("expect")) {
    bool want = p.boolean("expect", true);
    r.check("staggered", res.staggered == want, res.staggered, want);
  }
  return r;
}

std::vector<DigitString> default_strings(System sys, std::uint64_t bound) {
  std::vector<DigitString> out;
  if (sys.is_base()) {
    for (std::uint64_t a = 0; a < sys.base; ++a) {
      out.push_back(DigitString::base(sys.base, std::vector<std::uint64_t>{a}));
      for (std::uint64_t b = 0; b < sys.base; ++b) out.push_back(DigitString::base(sys.base, std::vector<std::uint64_t>{a, b}));
    }
    return out;
  }
  for (std::uint64_t a = 1; a <= bound; ++a) {
    out.push_back(DigitString::rcf({a}));
    for (std::uint64_t b = 1; b <= bound; ++b) out.push_back(DigitString::rcf({a, b}));
  }
  if (sys.kind == SystemKind::OCF) {
    out.clear();
    for (std::uint64_t a = 1; a <= 2 * bound + 1; a += 2) {
      out.push_back(DigitString::ocf({{a, 1}}));
      if (a > 1) out.push_back(DigitString::ocf({{a, -1}}));
    }
  }
  return out;
}

std::vector<DigitString> parse_string_list(const std::string& text, System sys) {
  std::vector<DigitString> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(' ') == std::string::npos) continue;
    out.push_back(parse_digit_string(item, sys));
  }
  return out;
}

Report normality_cmd(const Params& p) {
  Report r;
  const auto& cfg = p.config();
  System sys = System::parse(p.text("system", "rcf"));
  double C = p.real("c", 2.0);
  auto strings = p.has("strings") ? parse_string_list(p.text("strings", ""), sys) : default_strings(sys, 3);
  DigitStream orbit = [&] {
    if (!cfg.input.empty()) {
      if (looks_like_number(cfg.input)) return parse_number_stream(cfg.input, sys);
      return DigitStream::finite(parse_digit_string(cfg.input, sys));
    }
    return expansion_stream(sys, sample_point(cfg.seed, cfg.bits));
  }();
  auto rep = ps_check(orbit, strings, cfg.N, C);
  r.results["system"] = sys.name();
  r.results["source"] = source_json(p, cfg.seed);
  r.results["C"] = C;
  Json entries = Json::array();
  r.csv_header = {"pattern", "count", "frequency", "measure", "ps_ratio", "bound", "pass"};
  for (const auto& e : rep.entries) {
    Json row;
    row["pattern"] = to_compact_text(e.stats.pattern);
    row["count"] = e.stats.count;
    row["frequency"] = e.stats.frequency;
    row["measure"] = e.stats.measure ? Json(e.stats.measure->value) : Json(nullptr);
    row["ps_ratio"] = e.stats.ps_ratio ? Json(*e.stats.ps_ratio) : Json(nullptr);
    row["bound"] = e.bound;
    row["pass"] = e.pass;
    entries.push_back(row);
    r.check("ps_bound " + to_compact_text(e.stats.pattern), e.pass, e.stats.frequency, "<= " + fmt(e.bound));
    r.csv_rows.push_back({to_compact_text(e.stats.pattern), std::to_string(e.stats.count), fmt(e.stats.frequency),
                          e.stats.measure ? fmt(e.stats.measure->value) : "", e.stats.ps_ratio ? fmt(*e.stats.ps_ratio) : "",
                          fmt(e.bound), e.pass ? "true" : "false"});
  }
  r.results["entries"] = entries;
  r.results["note"] = "finite-N evidence only";
  return r;
}

Report counterexample_cmd(const Params& p) {
  Report r;
  std::size_t N = p.config().N;
  auto c = schweiger_counterexample(N);
  std::size_t blocks = p.count("pattern_blocks", std::min<std::size_t>(50, N / 20 + 1));
  auto mism = counterexample_pattern_mismatches(blocks);
  r.results["block"] = to_compact_text(counterexample_block());
  r.results["s"] = "01";
  r.results["lhs"] = c.lhs;
  r.results["rhs"] = c.rhs;
  r.results["lhs_rate"] = c.lhs_rate;
  r.results["rhs_rate"] = c.rhs_rate;
  r.results["pattern_blocks"] = blocks;
  r.results["pattern_mismatches"] = mism;
  const double slack = 3;
  auto near = [&](std::size_t v, double want) { return std::fabs(static_cast<double>(v) - want) <= slack; };
  r.check("lhs = N/10 + O(1)", near(c.lhs, N / 10.0), c.lhs, N / 10.0, slack);
  r.check("rhs = 3N/10 + O(1)", near(c.rhs, 3 * N / 10.0), c.rhs, 3 * N / 10.0, slack);
  r.check("lhs < rhs", N == 0 || c.lhs < c.rhs, c.lhs, "< " + std::to_string(c.rhs));
  r.check("membership pattern", mism == 0, mism, 0);
  r.csv_header = {"N", "lhs", "rhs", "lhs_rate", "rhs_rate"};
  r.csv_rows.push_back({std::to_string(N), std::to_string(c.lhs), std::to_string(c.rhs), fmt(c.lhs_rate), fmt(c.rhs_rate)});
  return r;
}

Report census_cmd(const Params& p) {
  Report r;
  std::size_t depth = p.count("depth", 0);
  auto c = insertion_singularization_census(rcf_source(p, p.config().seed), p.config().N, depth);
  r.results["source"] = source_json(p, p.config().seed);
  r.results["insertions"] = c.insertions;
  r.results["singularizations"] = c.singularizations;
  r.results["event_insertions"] = c.event_insertions;
  r.results["event_singularizations"] = c.event_singularizations;
  r.results["cut"] = c.cut;
  r.results["patterns"] = c.patterns;
  r.results["truncated_patterns"] = c.truncated_patterns;
  Json h = Json::object();
  r.csv_header = {"pattern", "count"};
  for (const auto& [k, v] : c.histogram) {
    h[k] = v;
    r.csv_rows.push_back({k, std::to_string(v)});
  }
  r.results["histogram"] = h;
  r.check("insertions = event log", c.insertions == c.event_insertions, c.insertions, c.event_insertions);
  r.check("singularizations = event log", c.singularizations == c.event_singularizations, c.singularizations,
          c.event_singularizations);
  return r;
}

Report slope_cmd(const Params& p) {
  Report r;
  const auto& cfg = p.config();
  std::size_t seeds = cfg.input.empty() ? p.count("seeds", 1) : 1;
  if (seeds == 0) throw ParseError("seeds must be >= 1");
  Json runs = Json::array();
  std::vector<double> finals;
  r.csv_header = {"seed", "n", "m_over_n"};
  for (std::size_t i = 0; i < seeds; ++i) {
    std::uint64_t seed = cfg.seed + i;
    auto s = estimate_m_slope(rcf_source(p, seed), cfg.N);
    Json run;
    run["source"] = source_json(p, seed);
    run["c_hat"] = s.c_hat;
    Json table = Json::array();
    for (const auto& [n, v] : s.table) {
      table.push_back({{"n", n}, {"m_over_n", v}});
      r.csv_rows.push_back({std::to_string(seed), std::to_string(n), fmt(v)});
    }
    run["table"] = table;
    run["spread"] = s.spread;
    run["monotone_stabilizing"] = s.monotone_stabilizing;
    runs.push_back(run);
    finals.push_back(s.c_hat);
    r.check("spread seed " + std::to_string(seed), s.spread <= cfg.tolerance, s.spread, 0.0, cfg.tolerance);
  }
  r.results["runs"] = runs;
  if (finals.size() > 1) {
    auto [lo, hi] = std::minmax_element(finals.begin(), finals.end());
    r.results["cross_seed_spread"] = *hi - *lo;
    r.check("cross-seed spread", *hi - *lo <= cfg.tolerance, *hi - *lo, 0.0, cfg.tolerance);
  }
  return r;
}

Report triggers_cmd(const Params& p) {
  Report r;
  const auto& cfg = p.config();
  auto target = parse_digit_string(p.text("target", "(3,1)"), System::ocf());
  r.results["target"] = to_compact_text(target);
  if (p.boolean("bijection", false)) {
    auto b = trigger_bijection_check(rcf_source(p, cfg.seed), target, cfg.N, cfg.length_bound);
    r.results["source"] = source_json(p, cfg.seed);
    r.results["via_triggers"] = b.via_triggers;
    r.results["direct"] = b.direct;
    r.results["boundary_slack"] = b.boundary_slack;
    r.results["long_candidates"] = b.long_candidates;
    r.results["m_inverse"] = b.m_inverse;
    r.results["complete"] = b.complete;
    long diff = static_cast<long>(b.via_triggers) - static_cast<long>(b.direct);
    r.check(b.complete ? "|via - direct| <= slack" : "via <= direct + slack", b.pass, diff,
            "<= " + std::to_string(b.boundary_slack));
    r.csv_header = {"via_triggers", "direct", "boundary_slack", "long_candidates", "m_inverse", "complete"};
    r.csv_rows.push_back({std::to_string(b.via_triggers), std::to_string(b.direct), std::to_string(b.boundary_slack),
                          std::to_string(b.long_candidates), std::to_string(b.m_inverse), b.complete ? "true" : "false"});
    return r;
  }
  auto e = trigger_enumerate(target, cfg.length_bound, cfg.alphabet_bound);
  Json list = Json::array();
  r.csv_header = {"s", "a"};
  for (const auto& t : e.triggers) {
    list.push_back({{"s", to_compact_text(t.s)}, {"a", t.a}});
    r.csv_rows.push_back({to_compact_text(t.s), std::to_string(t.a)});
  }
  r.results["triggers"] = list;
  r.results["count"] = e.triggers.size();
  r.results["candidates"] = e.candidates;
  r.results["complete"] = e.complete;
  r.check("structural form of long triggers", e.structural_violations == 0, e.structural_violations, 0);
  r.check("minimality", e.minimality_violations == 0, e.minimality_violations, 0);
  return r;
}

Report ecf_ratio_cmd(const Params& p) {
  Report r;
  const auto& cfg = p.config();
  auto s = parse_digit_string(p.text("s", "(2,1)"), System::ecf());
  auto sp = parse_digit_string(p.text("s_prime", "(4,-1)"), System::ecf());
  std::size_t seeds = cfg.input.empty() ? p.count("seeds", 5) : 1;
  std::size_t min_count = p.count("min_count", 200);
  double max_spread = p.real("max_spread", 0.05);
  if (seeds == 0) throw ParseError("seeds must be >= 1");
  Json runs = Json::array();
  std::vector<double> ratios;
  r.csv_header = {"seed", "count_s", "count_s_prime", "ratio", "rcf_digits"};
  for (std::size_t i = 0; i < seeds; ++i) {
    std::uint64_t seed = cfg.seed + i;
    auto res = ecf_ratio_normality(rcf_source(p, seed), s, sp, cfg.N);
    Json run;
    run["source"] = source_json(p, seed);
    run["count_s"] = res.count_s;
    run["count_s_prime"] = res.count_s_prime;
    run["ratio"] = res.ratio ? Json(*res.ratio) : Json(nullptr);
    run["rcf_digits"] = res.rcf_digits;
    runs.push_back(run);
    if (res.ratio) ratios.push_back(*res.ratio);
    bool enough = res.count_s >= min_count && res.count_s_prime >= min_count;
    r.check("counts >= " + std::to_string(min_count) + " seed " + std::to_string(seed), enough,
            Json::array({res.count_s, res.count_s_prime}), min_count);
    r.csv_rows.push_back({std::to_string(seed), std::to_string(res.count_s), std::to_string(res.count_s_prime),
                          res.ratio ? fmt(*res.ratio) : "", std::to_string(res.rcf_digits)});
  }
  r.results["s"] = to_compact_text(s);
  r.results["s_prime"] = to_compact_text(sp);
  r.results["runs"] = runs;
  if (ratios.size() == seeds && seeds > 1) {
    auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    double mean = 0;
    for (double v : ratios) mean += v;
    mean /= static_cast<double>(ratios.size());
    double spread = (*hi - *lo) / mean;
    r.results["relative_spread"] = spread;
    r.check("cross-seed relative spread", spread <= max_spread, spread, 0.0, max_spread);
  } else if (ratios.size() < seeds) {
    r.check("ratio defined", false, ratios.size(), seeds);
  }
  return r;
}

Report selftest_cmd(const Params&) {
  Report r;
  auto eq = [&](const std::string& name, const DigitString& got, const DigitString& want) {
    r.check(name, got == want, to_compact_text(got), to_compact_text(want));
  };
  auto iv = [&](const std::string& name, const RationalInterval& got, const RationalInterval& want) {
    r.check(name, got == want, got.to_string(), want.to_string());
  };
  const auto none = DigitString(System::rcf(), {});
  const auto x43 = periodic_point(DigitString::rcf({4}), DigitString::rcf({3}));
  const auto w = DigitString::ocf({{5, -1}, {1, 1}, {3, -1}, {1, 1}});

  iv("cylinder rcf [1]", cylinder_interval(DigitString::rcf({1})).interval, RationalInterval::left_open(Rational(1, 2), 1));
  iv("cylinder ocf (3,-1)", cylinder_interval(DigitString::ocf({{3, -1}})).interval,
     RationalInterval::right_open(Rational(1, 3), Rational(1, 2)));
  eq("ocf digits of [4;3]", ocf_digits(x43, 4).digits, w);

  auto block = counterexample_block();
  auto bx = periodic_point(DigitString(System::base_b(3), {}), block);
  eq("base-3 orbit of the counterexample point", base_b_orbit(bx, 3, 40).digits, block.concat(block));

  eq("insert_at [4,3,3,3] at 1", insert_at(DigitString::rcf({4, 3, 3, 3}), 1),
     DigitString::general({{5, -1}, {1, 1}, {2, 1}, {3, 1}, {3, 1}}));

  ConversionOptions opt;
  opt.max_output = 12;
  auto t = rcf_to_ocf(DigitStream::periodic(DigitString::rcf({4}), DigitString::rcf({3})), opt);
  eq("rcf_to_ocf of [4;3]", t.output.slice(0, 4), w);
  bool ev = t.events.size() >= 3 && t.events[0] == EventKind::Insert && t.events[1] == EventKind::Insert &&
            t.events[2] == EventKind::Insert;
  r.check("rcf_to_ocf events of [4;3]", ev, t.events.size() >= 3 ? "I,I,I" : "short", "I,I,I");
  std::vector<std::size_t> m{t.m_of(1), t.m_of(2), t.m_of(3)};
  r.check("m(1..3) of [4;3]", m == std::vector<std::size_t>{1, 3, 5}, m, std::vector<std::size_t>{1, 3, 5});

  auto rs = rcf_star();
  auto ea = ecf_aug();
  auto tr = [&](const std::string& name, int got, int want) { r.check(name, got == want, got, want); };
  tr("rcf* odd keeps 1", rs.transition(Digit(3, 1), 1), 1);
  tr("rcf* odd keeps 2", rs.transition(Digit(3, 1), 2), 2);
  tr("rcf* even swaps 1", rs.transition(Digit(2, 1), 1), 2);
  tr("rcf* even swaps 2", rs.transition(Digit(2, 1), 2), 1);
  tr("rcf* step of (1/(2+x); 1)", step(rs, AugmentedPoint{ExactNumber::rational(1, 2), 1}).a, 2);
  tr("ecf (2,3) -> 2", ea.transition(Digit(2, 1), 3), 2);
  tr("ecf (5,3) -> 2", ea.transition(Digit(5, 1), 3), 2);
  tr("ecf (3,1) -> 3", ea.transition(Digit(3, 1), 1), 3);
  tr("ecf (3,2) -> 1", ea.transition(Digit(3, 1), 2), 1);

  auto st = [&](const std::string& name, const AugmentedSystem& sys, const DigitString& s, bool want) {
    bool got = is_staggered(sys, s).staggered;
    r.check(name, got == want, got, want);
  };
  st("[2] staggered for rcf*", rs, DigitString::rcf({2}), true);
  st("[3] not staggered for rcf*", rs, DigitString::rcf({3}), false);
  st("[3,3] staggered for ecf", ea, DigitString::rcf({3, 3}), true);
  st("empty not staggered", rs, none, false);

  auto ps = power_subset_check(counterexample_orbit(), DigitString::base(3, std::vector<std::uint64_t>{0, 1}), 2, 100);
  r.check("power subset counterexample lhs", ps.lhs == 10, ps.lhs, 10);
  r.check("power subset counterexample rhs", ps.rhs == 40, ps.rhs, 40);
  r.check("power subset lhs < rhs", ps.lhs < ps.rhs, ps.lhs, "< rhs");

  auto cx = schweiger_counterexample(100);
  r.check("counterexample lhs N=100", cx.lhs == 10, cx.lhs, 10);
  r.check("counterexample rhs N=100", cx.rhs == 30, cx.rhs, 30);
  auto mism = counterexample_pattern_mismatches(50);
  r.check("E(i) membership pattern", mism == 0, mism, 0);

  auto cen = insertion_singularization_census(DigitStream::periodic(DigitString::rcf({4}), DigitString::rcf({3})), 4);
  r.check("census of [4,3,3,3]", cen.insertions == 3 && cen.matches(), cen.insertions, 3);

  auto a = determined_ocf_digits(DigitString::rcf({4, 3}), PriorEvent::None);
  r.check("determined [4,3] case 1", a.determined && a.case_id == 1 && !a.digits.empty() && a.digits[0] == Digit(5, -1),
          a.case_id, 1);
  auto b = determined_ocf_digits(DigitString::rcf({3, 3}), PriorEvent::InsertOrDelete);
  r.check("determined [3,3] after insert/delete", b.determined && b.classical_offset == 1, b.classical_offset, 1);
  auto c = determined_ocf_digits(DigitString::rcf({1, 1, 1}), PriorEvent::SingularizeOrDelete);
  r.check("[1,1,1] after singularize/delete undetermined", !c.determined && c.case_id == 6, c.case_id, 6);

  r.csv_header = {"name", "pass"};
  for (const auto& ch : r.checks) r.csv_rows.push_back({ch.name, ch.pass ? "true" : "false"});
  return r;
}

}  // namespace

const std::vector<std::pair<std::string, Command>>& commands() {
  static const std::vector<std::pair<std::string, Command>> table{
      {"expand", expand_cmd},       {"convert", convert_cmd},     {"measure", measure_cmd},
      {"staggered", staggered_cmd}, {"normality", normality_cmd}, {"counterexample", counterexample_cmd},
      {"census", census_cmd},       {"slope", slope_cmd},         {"triggers", triggers_cmd},
      {"ecf-ratio", ecf_ratio_cmd}, {"selftest", selftest_cmd},
  };
  return table;
}

}  // namespace cfn::cli
