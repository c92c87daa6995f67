#pragma once

#include "cfn/digit.hpp"
#include "cfn/exact_number.hpp"
#include "cfn/stream.hpp"

#include <optional>
#include <string>

namespace cfn {

enum class ExpansionStatus {
  Complete,            // n digits produced
  Terminated,          // the expansion is finite and shorter than n
  PrecisionExhausted,  // interval endpoints disagree on the next digit
};

std::string to_string(ExpansionStatus s);

struct Expansion {
  DigitString digits;
  ExpansionStatus status = ExpansionStatus::Complete;
  bool terminated() const { return status == ExpansionStatus::Terminated; }
  bool exhausted() const { return status == ExpansionStatus::PrecisionExhausted; }
};

/// One application of the shift map.
struct ShiftStep {
  ExpansionStatus status = ExpansionStatus::Complete;
  std::optional<Digit> digit;
  std::optional<ExactNumber> rest;
};

/// Digit d_1(x) and T x for RCF, OCF or BASE(b).
ShiftStep shift(System sys, const ExactNumber& x);

Expansion rcf_digits(const ExactNumber& x, std::size_t n);
Expansion ocf_digits(const ExactNumber& x, std::size_t n);
Expansion base_b_orbit(const ExactNumber& x, unsigned b, std::size_t n);
Expansion expand(System sys, const ExactNumber& x, std::size_t n);

/// "0.xxx" as the closed interval [v, v + 10^-d]. Throws ParseError.
ExactNumber parse_decimal(const std::string& text);
Expansion digits_from_decimal(const std::string& text, System sys, std::size_t n);

/// Exact value of the eventually periodic expansion pre + per^inf (quadratic or rational).
/// Throws DomainError when the periodic fixed point is not in (0,1).
ExactNumber periodic_point(const DigitString& pre, const DigitString& per);
/// Closed rational interval of width <= 10^-k around the same value.
ExactNumber periodic_point(const DigitString& pre, const DigitString& per, unsigned k);

/// Lazy stream of the system's digits of x; ends where the expansion terminates
/// or the interval stops determining digits.
DigitStream expansion_stream(System sys, const ExactNumber& x);

/// Parses p/q, dec:0.xxx, cf:[a1,...;p1,...], bB:block (periodic base-B block).
ExactNumber parse_number(const std::string& text);
/// Digit stream for `text` in `sys`; cf: and bB: specs become exact periodic streams.
DigitStream parse_number_stream(const std::string& text, System sys);

}  // namespace cfn
