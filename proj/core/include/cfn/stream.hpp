#pragma once

#include "cfn/digit.hpp"

#include <functional>
#include <memory>
#include <optional>

namespace cfn {

using DigitProducer = std::function<std::optional<Digit>()>;

/// Finite, eventually periodic, or generated digit source. Pulling is deterministic:
/// every cursor starts from the first digit.
class DigitStream {
 public:
  static DigitStream finite(DigitString s);
  /// Throws InadmissibleString when the period is empty or digits break the system invariants.
  static DigitStream periodic(DigitString pre, DigitString per);
  /// `factory` must return a fresh producer positioned at the first digit on every call.
  static DigitStream generated(System sys, std::function<DigitProducer()> factory);

  enum class Kind { Finite, EventuallyPeriodic, Generated };
  Kind kind() const { return kind_; }
  const System& system() const { return sys_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const DigitString& preperiod() const { return pre_; }
  const DigitString& period() const { return per_; }

  class Cursor {
   public:
    std::optional<Digit> next();
    std::size_t position() const { return pos_; }

   private:
    friend class DigitStream;
    const DigitStream* src_ = nullptr;
    DigitProducer gen_;
    std::size_t pos_ = 0;
  };
  Cursor cursor() const;

  /// Up to n digits (fewer only when the stream ends).
  DigitString take(std::size_t n) const;

 private:
  Kind kind_ = Kind::Finite;
  System sys_;
  DigitString pre_, per_;
  std::function<DigitProducer()> factory_;
};

}  // namespace cfn
