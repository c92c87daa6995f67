#include "cfn_cli/config.hpp"

#include "cfn/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace cfn::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_unsigned(const std::string& key, const std::string& v, std::size_t line) {
  T out{};
  auto t = trim(v);
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size()) {
    throw ParseError("'" + key + "' expects a non-negative integer, got '" + v + "'", line);
  }
  return out;
}

double parse_real(const std::string& key, const std::string& v, std::size_t line) {
  try {
    std::size_t used = 0;
    double d = std::stod(trim(v), &used);
    if (used != trim(v).size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ParseError("'" + key + "' expects a number, got '" + v + "'", line);
  }
}

std::size_t line_of_offset(const std::string& text, std::size_t byte) {
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + std::min(byte, text.size()), '\n'));
}

}  // namespace

std::string normalize_key(const std::string& key) {
  std::string k = trim(key);
  while (!k.empty() && k.front() == '-') k.erase(k.begin());
  if (k == "N" || k == "n") return "N";
  for (auto& c : k) c = c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (k == "format") return "output_format";
  return k;
}

void set_config_value(ExperimentConfig& cfg, const std::string& raw_key, const std::string& value, std::size_t line) {
  const std::string key = normalize_key(raw_key);
  if (key.empty()) throw ParseError("empty key", line);
  if (key == "command") cfg.command = trim(value);
  else if (key == "input") cfg.input = trim(value);
  else if (key == "N") cfg.N = parse_unsigned<std::size_t>(key, value, line);
  else if (key == "seed") cfg.seed = parse_unsigned<std::uint64_t>(key, value, line);
  else if (key == "bits") cfg.bits = parse_unsigned<std::size_t>(key, value, line);
  else if (key == "tolerance") cfg.tolerance = parse_real(key, value, line);
  else if (key == "output_format") cfg.output_format = trim(value);
  else if (key == "alphabet_bound") cfg.alphabet_bound = parse_unsigned<std::size_t>(key, value, line);
  else if (key == "length_bound") cfg.length_bound = parse_unsigned<std::size_t>(key, value, line);
  else cfg.params[key] = trim(value);
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what(), line_of_offset(text, e.byte));
    }
    if (!j.is_object()) throw ParseError("config JSON must be an object", 1);
    for (auto& [k, v] : j.items()) {
      std::string s;
      if (v.is_string()) s = v.get<std::string>();
      else if (v.is_array() || v.is_object()) throw ParseError("config value for '" + k + "' must be a scalar", 1);
      else s = v.dump();
      set_config_value(cfg, k, s, 1);
    }
    validate(cfg);
    return cfg;
  }
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", no);
    set_config_value(cfg, t.substr(0, eq), t.substr(eq + 1), no);
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

void validate(const ExperimentConfig& cfg) {
  if (!(cfg.tolerance > 0)) throw ParseError("tolerance must be > 0");
  if (cfg.alphabet_bound < 1 || cfg.length_bound < 1) throw ParseError("bounds must be >= 1");
  if (cfg.output_format != "json" && cfg.output_format != "csv") {
    throw ParseError("format must be json or csv, got '" + cfg.output_format + "'");
  }
}

Params::Params(ExperimentConfig cfg, std::map<std::string, std::string> flags)
    : cfg_(std::move(cfg)), flags_(std::move(flags)) {}

std::optional<std::string> Params::raw(const std::string& key) const {
  if (auto it = flags_.find(key); it != flags_.end()) return it->second;
  if (auto it = cfg_.params.find(key); it != cfg_.params.end()) return it->second;
  return std::nullopt;
}

bool Params::has(const std::string& key) const { return raw(key).has_value(); }

std::string Params::text(const std::string& key, const std::string& fallback) const {
  auto v = raw(key).value_or(fallback);
  used_[key] = v;
  return v;
}

std::size_t Params::count(const std::string& key, std::size_t fallback) const {
  auto v = raw(key);
  std::size_t out = v ? parse_unsigned<std::size_t>(key, *v, 0) : fallback;
  used_[key] = std::to_string(out);
  return out;
}

double Params::real(const std::string& key, double fallback) const {
  auto v = raw(key);
  double out = v ? parse_real(key, *v, 0) : fallback;
  std::ostringstream ss;
  ss << out;
  used_[key] = ss.str();
  return out;
}

bool Params::boolean(const std::string& key, bool fallback) const {
  auto v = raw(key);
  bool out = fallback;
  if (v) {
    std::string s = trim(*v);
    if (s == "1" || s == "true" || s == "yes" || s.empty()) out = true;
    else if (s == "0" || s == "false" || s == "no") out = false;
    else throw ParseError("'" + key + "' expects true or false, got '" + s + "'");
  }
  used_[key] = out ? "true" : "false";
  return out;
}

Json Params::echo() const {
  Json j;
  j["command"] = cfg_.command;
  j["input"] = cfg_.input;
  j["N"] = cfg_.N;
  j["seed"] = cfg_.seed;
  j["bits"] = cfg_.bits;
  j["tolerance"] = cfg_.tolerance;
  j["output_format"] = cfg_.output_format;
  j["alphabet_bound"] = cfg_.alphabet_bound;
  j["length_bound"] = cfg_.length_bound;
  Json p = Json::object();
  for (const auto& [k, v] : used_) p[k] = v;
  j["params"] = p;
  return j;
}

}  // namespace cfn::cli
