#include "cfn/stream.hpp"

#include "cfn/errors.hpp"

namespace cfn {

DigitStream DigitStream::finite(DigitString s) {
  DigitStream st;
  st.kind_ = Kind::Finite;
  st.sys_ = s.system();
  st.pre_ = std::move(s);
  return st;
}

DigitStream DigitStream::periodic(DigitString pre, DigitString per) {
  if (per.empty()) throw InadmissibleString("period must be non-empty");
  if (!(pre.system() == per.system())) throw InadmissibleString("preperiod and period systems differ");
  pre.concat(per).concat(per);  // validates the joined digits
  DigitStream st;
  st.kind_ = Kind::EventuallyPeriodic;
  st.sys_ = pre.system();
  st.pre_ = std::move(pre);
  st.per_ = std::move(per);
  return st;
}

DigitStream DigitStream::generated(System sys, std::function<DigitProducer()> factory) {
  DigitStream st;
  st.kind_ = Kind::Generated;
  st.sys_ = sys;
  st.factory_ = std::move(factory);
  return st;
}

DigitStream::Cursor DigitStream::cursor() const {
  Cursor c;
  c.src_ = this;
  if (kind_ == Kind::Generated) c.gen_ = factory_();
  return c;
}

std::optional<Digit> DigitStream::Cursor::next() {
  const DigitStream& s = *src_;
  std::optional<Digit> d;
  switch (s.kind_) {
    case Kind::Finite:
      if (pos_ < s.pre_.size()) d = s.pre_[pos_];
      break;
    case Kind::EventuallyPeriodic:
      if (pos_ < s.pre_.size()) d = s.pre_[pos_];
      else d = s.per_[(pos_ - s.pre_.size()) % s.per_.size()];
      break;
    case Kind::Generated:
      d = gen_();
      break;
  }
  if (d) ++pos_;
  return d;
}

DigitString DigitStream::take(std::size_t n) const {
  if (kind_ == Kind::Finite && n >= pre_.size()) return pre_;
  std::vector<Digit> out;
  auto c = cursor();
  while (out.size() < n) {
    auto d = c.next();
    if (!d) break;
    out.push_back(*d);
  }
  return DigitString(sys_, std::move(out));
}

}  // namespace cfn
