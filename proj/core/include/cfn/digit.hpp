#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cfn {

enum class SystemKind { RCF, OCF, ECF, GENERAL, BASE };

struct System {
  SystemKind kind = SystemKind::GENERAL;
  unsigned base = 0;  // only meaningful for BASE

  static System rcf() { return {SystemKind::RCF, 0}; }
  static System ocf() { return {SystemKind::OCF, 0}; }
  static System ecf() { return {SystemKind::ECF, 0}; }
  static System general() { return {SystemKind::GENERAL, 0}; }
  static System base_b(unsigned b);

  bool is_base() const { return kind == SystemKind::BASE; }
  std::string name() const;
  /// Accepts rcf, ocf, ecf, general, base3 / b3 (case-insensitive).
  static System parse(const std::string& text);

  friend bool operator==(const System&, const System&) = default;
};

/// Signed partial quotient (alpha, epsilon). Base-b digits store value+1 in alpha.
struct Digit {
  std::uint64_t alpha = 1;
  int epsilon = 1;

  Digit() = default;
  /// Validates alpha >= 1, epsilon = +/-1, alpha + epsilon > 1.
  Digit(std::uint64_t a, int e);

  static Digit unchecked(std::uint64_t a, int e) {
    Digit d;
    d.alpha = a;
    d.epsilon = e;
    return d;
  }
  static Digit base_value(std::uint64_t v) { return unchecked(v + 1, 1); }
  std::uint64_t value() const { return alpha - 1; }

  bool is_valid() const { return alpha >= 1 && (epsilon == 1 || epsilon == -1) && !(alpha == 1 && epsilon == -1); }
  bool is_one() const { return alpha == 1 && epsilon == 1; }

  friend bool operator==(const Digit&, const Digit&) = default;
  friend auto operator<=>(const Digit&, const Digit&) = default;
};

std::string to_string(const Digit& d);

class DigitString {
 public:
  DigitString() = default;
  /// Throws InadmissibleString when the digits violate the system's invariants.
  DigitString(System sys, std::vector<Digit> digits);

  static DigitString rcf(std::initializer_list<std::uint64_t> alphas);
  static DigitString rcf(const std::vector<std::uint64_t>& alphas);
  static DigitString general(std::initializer_list<std::pair<std::uint64_t, int>> ds);
  static DigitString ocf(std::initializer_list<std::pair<std::uint64_t, int>> ds);
  static DigitString base(unsigned b, const std::vector<std::uint64_t>& values);
  static DigitString base(unsigned b, const std::string& block);  // "2010..." with single-char digits

  const System& system() const { return sys_; }
  const std::vector<Digit>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  const Digit& operator[](std::size_t i) const { return digits_[i]; }
  auto begin() const { return digits_.begin(); }
  auto end() const { return digits_.end(); }

  /// Copy with a different tag; validates.
  DigitString retag(System sys) const { return DigitString(sys, digits_); }
  DigitString slice(std::size_t from, std::size_t to) const;
  DigitString concat(const DigitString& tail) const;
  std::vector<std::uint64_t> alphas() const;
  /// Base-b values (alpha - 1).
  std::vector<std::uint64_t> values() const;

  friend bool operator==(const DigitString& a, const DigitString& b) { return a.digits_ == b.digits_; }

 private:
  System sys_;
  std::vector<Digit> digits_;
};

/// Empty string when admissible, otherwise the reason.
std::string admissibility_error(System sys, const std::vector<Digit>& digits);
bool is_admissible(System sys, const std::vector<Digit>& digits);

/// JSON-style text "[[4,1],[3,1]]".
std::string to_json_text(const DigitString& s);
/// Compact text: "4,3,3" for RCF, "(5,-1)(1,1)" otherwise, "2010" for small bases.
std::string to_compact_text(const DigitString& s);
/// Parses "[[a,e],...]", "a1,a2,...", "(a,e)(a,e)...", or for BASE a digit block.
DigitString parse_digit_string(const std::string& text, System sys);

}  // namespace cfn
