#include "cfn_cli/cli.hpp"

#include "cfn/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <map>
#include <ostream>

namespace cfn::cli {

namespace {

struct OptionSpec {
  const char* name;
  const char* help;
  bool flag = false;
};

const std::map<std::string, std::vector<OptionSpec>>& command_options() {
  static const std::map<std::string, std::vector<OptionSpec>> table{
      {"expand", {{"system", "rcf | ocf | ecf | b<N>"}, {"digits", "number of digits (default 20)"}}},
      {"convert",
       {{"from", "rcf | ocf"},
        {"to", "ocf | rcf | ecf"},
        {"digits", "maximum output digits (default 20)"},
        {"slow", "use the literal rewriting sweep", true},
        {"prefix", "treat a finite input as a prefix of a longer expansion", true}}},
      {"measure", {{"system", "rcf | ocf | ecf | b<N>"}, {"string", "digit string, e.g. [1,2] or (3,-1)"}}},
      {"staggered",
       {{"system", "rcf-star | ecf-aug"}, {"string", "RCF digit string"}, {"expect", "expected verdict (true/false)"}}},
      {"normality",
       {{"system", "rcf | ocf | b<N>"},
        {"strings", "';'-separated digit strings"},
        {"c", "Pyatetskii-Shapiro constant (default 2)"}}},
      {"counterexample", {{"pattern_blocks", "blocks checked for the E(i) pattern"}}},
      {"census", {{"depth", "maximum pattern length, 0 = unbounded"}}},
      {"slope", {{"seeds", "number of consecutive seeds (default 1)"}}},
      {"triggers",
       {{"target", "OCF target string (default (3,1))"},
        {"bijection", "count target occurrences through triggers on a sampled orbit", true}}},
      {"ecf-ratio",
       {{"s", "ECF string (default (2,1))"},
        {"s_prime", "ECF string (default (4,-1))"},
        {"seeds", "number of consecutive seeds (default 5)"},
        {"min_count", "minimum occurrences of each string (default 200)"},
        {"max_spread", "allowed relative spread of the ratio (default 0.05)"}}},
      {"selftest", {}},
  };
  return table;
}

const std::map<std::string, std::string> kSummaries{
    {"expand", "digits of --input in one system"},
    {"convert", "rewrite a digit string or number between systems, with event log and m(n)"},
    {"measure", "cylinder interval and invariant measure of a digit string"},
    {"staggered", "staggered-string test with witness table"},
    {"normality", "finite-N Pyatetskii-Shapiro bounds on an orbit"},
    {"counterexample", "exact counts on the periodic base-3 counterexample"},
    {"census", "insertion/singularization pattern census against the event log"},
    {"slope", "m(n)/n table and spread on sampled points"},
    {"triggers", "enumerate triggers of an OCF target, or check the trigger bijection"},
    {"ecf-ratio", "cross-seed consistency of an ECF occurrence ratio"},
    {"selftest", "built-in regression examples"},
};

std::string flag_name(const std::string& key) {
  std::string s = key;
  for (auto& c : s) if (c == '_') c = '-';
  return "--" + s;
}

int fail(std::ostream& err, int code, const std::string& msg) {
  err << "cfn: " << msg << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued-fraction digit systems and normality experiments", "cfn"};
  app.require_subcommand(0, 1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value or JSON experiment config");
  const std::vector<std::pair<std::string, std::string>> common{
      {"input", "number (cf:[..;..], dec:..., p/q, bN:...) or digit string"},
      {"N", "window length"},
      {"seed", "RNG seed for sampled points"},
      {"bits", "precision of sampled points"},
      {"tolerance", "tolerance for statistical checks"},
      {"format", "json | csv"},
      {"alphabet_bound", "largest partial quotient enumerated"},
      {"length_bound", "longest string enumerated"},
  };
  std::map<std::string, std::string> common_values;
  std::map<std::string, CLI::Option*> common_opts;
  for (const auto& [k, h] : common) {
    common_opts[k] = app.add_option(k == "N" ? "-N,--N,-n" : flag_name(k), common_values[k], h);
  }

  std::map<std::string, CLI::App*> subs;
  std::map<std::string, std::map<std::string, std::string>> sub_values;
  std::map<std::string, std::map<std::string, CLI::Option*>> sub_opts;
  for (const auto& [name, cmd] : commands()) {
    (void)cmd;
    auto* sub = app.add_subcommand(name, kSummaries.at(name));
    sub->fallthrough();
    subs[name] = sub;
    for (const auto& o : command_options().at(name)) {
      auto& slot = sub_values[name][o.name];
      sub_opts[name][o.name] = o.flag ? sub->add_flag(flag_name(o.name), o.help)
                                      : sub->add_option(flag_name(o.name), slot, o.help);
    }
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    ExperimentConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    for (const auto& [k, opt] : common_opts) {
      if (opt->count() > 0) set_config_value(cfg, k, common_values[k]);
    }
    validate(cfg);

    std::string name;
    for (const auto& [n, sub] : subs) {
      if (sub->parsed()) name = n;
    }
    if (name.empty()) name = cfg.command;
    if (name.empty()) {
      err << app.help();
      return kUsage;
    }
    auto it = std::find_if(commands().begin(), commands().end(), [&](const auto& c) { return c.first == name; });
    if (it == commands().end()) return fail(err, kUsage, "unknown command '" + name + "'");
    cfg.command = name;

    std::map<std::string, std::string> flags;
    if (sub_opts.count(name)) {
      for (const auto& [k, opt] : sub_opts[name]) {
        if (opt->count() == 0) continue;
        flags[k] = opt->get_expected_min() == 0 ? "true" : sub_values[name][k];
      }
    }

    Params params(cfg, flags);
    auto t0 = std::chrono::steady_clock::now();
    Report rep = it->second(params);
    rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.command = name;
    rep.config = params.echo();
    if (cfg.output_format == "csv") out << to_csv(rep);
    else out << to_json(rep).dump(2) << "\n";
    return rep.all_pass() ? kOk : kCheckFailed;
  } catch (const InsufficientDigits& e) {
    return fail(err, kUsage, std::string(e.what()) + " (needed " + std::to_string(e.needed()) + ", had " +
                                 std::to_string(e.available()) + "; raise --bits or lower --N)");
  } catch (const NeedsMoreInput& e) {
    return fail(err, kUsage, std::string(e.what()) + "; supply a longer input");
  } catch (const ParseError& e) {
    return fail(err, kUsage, e.what());
  } catch (const DomainError& e) {
    return fail(err, kUsage, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(err, kUsage, e.what());
  } catch (const std::runtime_error& e) {
    if (!config_path.empty() && std::string(e.what()).rfind("cannot open config", 0) == 0) {
      return fail(err, kUsage, e.what());
    }
    return fail(err, kInternal, e.what());
  } catch (const std::exception& e) {
    return fail(err, kInternal, e.what());
  }
}

}  // namespace cfn::cli
