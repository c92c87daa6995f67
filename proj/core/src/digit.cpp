#include "cfn/digit.hpp"

#include "cfn/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace cfn {

System System::base_b(unsigned b) {
  if (b < 2) throw InvalidDigit("base must be at least 2");
  return {SystemKind::BASE, b};
}

std::string System::name() const {
  switch (kind) {
    case SystemKind::RCF: return "rcf";
    case SystemKind::OCF: return "ocf";
    case SystemKind::ECF: return "ecf";
    case SystemKind::GENERAL: return "general";
    case SystemKind::BASE: return "base" + std::to_string(base);
  }
  return "?";
}

System System::parse(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "rcf") return rcf();
  if (t == "ocf") return ocf();
  if (t == "ecf") return ecf();
  if (t == "general") return general();
  std::string digits;
  if (t.rfind("base", 0) == 0) digits = t.substr(4);
  else if (t.size() > 1 && t[0] == 'b') digits = t.substr(1);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
    return base_b(static_cast<unsigned>(std::stoul(digits)));
  }
  throw ParseError("unknown digit system '" + text + "'");
}

Digit::Digit(std::uint64_t a, int e) : alpha(a), epsilon(e) {
  if (a < 1) throw InvalidDigit("alpha must be >= 1");
  if (e != 1 && e != -1) throw InvalidDigit("epsilon must be +1 or -1");
  if (a == 1 && e == -1) throw InvalidDigit("(1,-1) is not a digit");
}

std::string to_string(const Digit& d) {
  return "(" + std::to_string(d.alpha) + "," + std::to_string(d.epsilon) + ")";
}

std::string admissibility_error(System sys, const std::vector<Digit>& digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const Digit& d = digits[i];
    std::string at = " at position " + std::to_string(i + 1);
    if (!d.is_valid()) return "invalid digit " + to_string(d) + at;
    switch (sys.kind) {
      case SystemKind::RCF:
        if (d.epsilon != 1) return "RCF digit with epsilon -1" + at;
        break;
      case SystemKind::OCF:
        if (d.alpha % 2 == 0) return "OCF digit with even alpha" + at;
        break;
      case SystemKind::ECF:
        if (d.alpha % 2 != 0) return "ECF digit with odd alpha" + at;
        break;
      case SystemKind::BASE:
        if (d.epsilon != 1 || d.value() >= sys.base) return "base-" + std::to_string(sys.base) + " digit out of range" + at;
        break;
      case SystemKind::GENERAL: break;
    }
  }
  return {};
}

bool is_admissible(System sys, const std::vector<Digit>& digits) { return admissibility_error(sys, digits).empty(); }

DigitString::DigitString(System sys, std::vector<Digit> digits) : sys_(sys), digits_(std::move(digits)) {
  auto err = admissibility_error(sys_, digits_);
  if (!err.empty()) throw InadmissibleString(err);
}

DigitString DigitString::rcf(std::initializer_list<std::uint64_t> alphas) {
  return rcf(std::vector<std::uint64_t>(alphas));
}

DigitString DigitString::rcf(const std::vector<std::uint64_t>& alphas) {
  std::vector<Digit> ds;
  ds.reserve(alphas.size());
  for (auto a : alphas) ds.emplace_back(a, 1);
  return DigitString(System::rcf(), std::move(ds));
}

DigitString DigitString::general(std::initializer_list<std::pair<std::uint64_t, int>> ds) {
  std::vector<Digit> out;
  for (auto [a, e] : ds) out.emplace_back(a, e);
  return DigitString(System::general(), std::move(out));
}

DigitString DigitString::ocf(std::initializer_list<std::pair<std::uint64_t, int>> ds) {
  return general(ds).retag(System::ocf());
}

DigitString DigitString::base(unsigned b, const std::vector<std::uint64_t>& values) {
  std::vector<Digit> ds;
  for (auto v : values) ds.push_back(Digit::base_value(v));
  return DigitString(System::base_b(b), std::move(ds));
}

DigitString DigitString::base(unsigned b, const std::string& block) {
  std::vector<std::uint64_t> vals;
  for (char c : block) {
    if (!std::isalnum(static_cast<unsigned char>(c))) throw ParseError(std::string("bad base digit '") + c + "'");
    unsigned v = std::isdigit(static_cast<unsigned char>(c)) ? unsigned(c - '0')
                                                             : unsigned(std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
    vals.push_back(v);
  }
  return base(b, vals);
}

DigitString DigitString::slice(std::size_t from, std::size_t to) const {
  to = std::min(to, digits_.size());
  from = std::min(from, to);
  DigitString out;
  out.sys_ = sys_;
  out.digits_.assign(digits_.begin() + static_cast<std::ptrdiff_t>(from), digits_.begin() + static_cast<std::ptrdiff_t>(to));
  return out;
}

DigitString DigitString::concat(const DigitString& tail) const {
  std::vector<Digit> ds = digits_;
  ds.insert(ds.end(), tail.digits_.begin(), tail.digits_.end());
  return DigitString(sys_, std::move(ds));
}

std::vector<std::uint64_t> DigitString::alphas() const {
  std::vector<std::uint64_t> out;
  for (const auto& d : digits_) out.push_back(d.alpha);
  return out;
}

std::vector<std::uint64_t> DigitString::values() const {
  std::vector<std::uint64_t> out;
  for (const auto& d : digits_) out.push_back(d.value());
  return out;
}

std::string to_json_text(const DigitString& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << '[' << s[i].alpha << ',' << s[i].epsilon << ']';
  }
  os << ']';
  return os.str();
}

std::string to_compact_text(const DigitString& s) {
  std::ostringstream os;
  const auto& sys = s.system();
  if (sys.is_base() && sys.base <= 10) {
    for (const auto& d : s) os << d.value();
    return os.str();
  }
  bool all_plus = std::all_of(s.begin(), s.end(), [](const Digit& d) { return d.epsilon == 1; });
  if (sys.kind == SystemKind::RCF || (sys.kind == SystemKind::GENERAL && all_plus)) {
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i].alpha;
    return os.str();
  }
  for (const auto& d : s) os << to_string(d);
  return os.str();
}

namespace {

std::uint64_t parse_u64(const std::string& t) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty()) throw ParseError("bad integer '" + t + "'");
  return v;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Digit checked(std::uint64_t a, int e) {
  try {
    return Digit(a, e);
  } catch (const InvalidDigit& ex) {
    throw ParseError(ex.what());
  }
}

}  // namespace

DigitString parse_digit_string(const std::string& raw, System sys) {
  std::string text = strip(raw);
  std::vector<Digit> ds;
  if (text.empty()) return DigitString(sys, {});
  if (text[0] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
      throw ParseError(std::string("digit JSON: ") + ex.what());
    }
    if (!j.is_array()) throw ParseError("digit JSON must be an array");
    for (const auto& e : j) {
      if (e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number_integer()) {
        if (e[0].get<long long>() < 1) throw ParseError("alpha must be >= 1");
        ds.push_back(checked(e[0].get<std::uint64_t>(), e[1].get<int>()));
      } else if (e.is_number_integer()) {
        if (sys.is_base()) ds.push_back(Digit::base_value(e.get<std::uint64_t>()));
        else ds.push_back(checked(e.get<std::uint64_t>(), 1));
      } else {
        throw ParseError("digit JSON entries must be [alpha, epsilon] or integers");
      }
    }
  } else if (text[0] == '(') {
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
      if (text[i] != '(') throw ParseError("expected '(' in digit pairs");
      auto close = text.find(')', i);
      if (close == std::string::npos) throw ParseError("unterminated digit pair");
      std::string inner = text.substr(i + 1, close - i - 1);
      auto comma = inner.find(',');
      if (comma == std::string::npos) throw ParseError("digit pair needs a comma");
      std::string es = strip(inner.substr(comma + 1));
      int eps = 0;
      if (es == "1" || es == "+1" || es == "+") eps = 1;
      else if (es == "-1" || es == "-") eps = -1;
      else throw ParseError("bad epsilon '" + es + "'");
      ds.push_back(checked(parse_u64(strip(inner.substr(0, comma))), eps));
      i = close + 1;
    }
  } else if (sys.is_base() && text.find(',') == std::string::npos) {
    try {
      return DigitString::base(sys.base, text);
    } catch (const InadmissibleString& ex) {
      throw ParseError(ex.what());
    }
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto v = parse_u64(strip(tok));
      ds.push_back(sys.is_base() ? Digit::base_value(v) : checked(v, 1));
    }
  }
  try {
    return DigitString(sys, std::move(ds));
  } catch (const InadmissibleString& ex) {
    throw ParseError(ex.what());
  }
}

}  // namespace cfn
