#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace cfn::cli {

using Json = nlohmann::ordered_json;

struct ExperimentConfig {
  std::string command;
  std::string input;
  std::size_t N = 10000;
  std::uint64_t seed = 1;
  std::size_t bits = 4096;
  double tolerance = 0.01;
  std::string output_format = "json";
  std::size_t alphabet_bound = 8;
  std::size_t length_bound = 5;
  /// Command-specific keys (system, string, target, ...), normalised to snake_case.
  std::map<std::string, std::string> params;
};

/// Reads key=value lines or a JSON object. Throws ParseError (with line number) or
/// std::runtime_error when the file cannot be opened.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);
/// Sets one key; common keys are typed, the rest land in params.
void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value, std::size_t line = 0);
/// Throws ParseError when tolerance <= 0, a bound is 0, or the format is unknown.
void validate(const ExperimentConfig& cfg);
std::string normalize_key(const std::string& key);

/// Resolved view: flag values override config params; every parameter read is echoed.
class Params {
 public:
  Params(ExperimentConfig cfg, std::map<std::string, std::string> flags);
  const ExperimentConfig& config() const { return cfg_; }
  bool has(const std::string& key) const;
  std::string text(const std::string& key, const std::string& fallback) const;
  std::size_t count(const std::string& key, std::size_t fallback) const;
  double real(const std::string& key, double fallback) const;
  bool boolean(const std::string& key, bool fallback) const;
  Json echo() const;

 private:
  std::optional<std::string> raw(const std::string& key) const;
  ExperimentConfig cfg_;
  std::map<std::string, std::string> flags_;
  mutable std::map<std::string, std::string> used_;
};

}  // namespace cfn::cli
