#pragma once

#include "cfn/digit.hpp"
#include "cfn/stream.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace cfn {

/// 1-based insertion at digit n: (a_n,e_n),(a_{n+1},e_{n+1}) -> (a_n+e_n,-e_n),(1,1),(a_{n+1}-1,e_{n+1}).
DigitString insert_at(const DigitString& s, std::size_t n);
/// 1-based singularization at digit n, with digit n+1 = (1,1). When n+1 is the last digit the
/// (1,1) is dropped and digit n becomes (a_n+e_n,-e_n).
DigitString singularize_at(const DigitString& s, std::size_t n);

enum class EventKind { None, Insert, Singularize, Delete };
std::string to_string(EventKind k);

struct RewriteEvent {
  std::size_t index = 0;  // original input digit, 1-based
  EventKind kind = EventKind::None;
  friend bool operator==(const RewriteEvent&, const RewriteEvent&) = default;
};

struct ConversionOptions {
  std::size_t max_input = std::numeric_limits<std::size_t>::max();
  std::size_t max_output = std::numeric_limits<std::size_t>::max();
  /// Treat the end of a finite input as the end of the expansion (value-exact closure).
  bool close_finite = true;
};

struct ConversionTrace {
  DigitString output;
  std::vector<EventKind> events;  // events[i] is the event at input digit i+1
  std::vector<std::size_t> m;     // m[i] = m(i+1), 1-based output index
  std::size_t input_read = 0;
  /// Closure applied: output has exactly the value of the whole input.
  bool complete = false;
  /// Working digits not yet emitted. For a prefix, eval(output ++ residual) equals the value of
  /// the input digits read.
  DigitString residual;

  std::size_t decided() const { return events.size(); }
  std::vector<RewriteEvent> event_log() const;
  /// 1-based m(n); throws NeedsMoreInput past the decided window.
  std::size_t m_of(std::size_t n) const;
};

ConversionTrace rcf_to_ocf(const DigitStream& in, const ConversionOptions& opt = {});
ConversionTrace ocf_to_rcf(const DigitStream& in, const ConversionOptions& opt = {});
ConversionTrace rcf_to_ecf(const DigitStream& in, const ConversionOptions& opt = {});

/// Reference sweeps that literally rewrite a working string with insert_at/singularize_at.
ConversionTrace rcf_to_ocf_slow(const DigitString& in, bool close_finite = true);
ConversionTrace ocf_to_rcf_slow(const DigitString& in, bool close_finite = true);
ConversionTrace rcf_to_ecf_slow(const DigitString& in, bool close_finite = true);

/// min{n : m(n) >= N}; N = 0 gives 1. Throws NeedsMoreInput when the trace is too short.
std::size_t m_inverse(const ConversionTrace& t, std::size_t N);

}  // namespace cfn
