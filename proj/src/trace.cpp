#include "ldlmdp/trace.hpp"

#include "ldlmdp/parser.hpp"

namespace ldlmdp {

std::optional<size_t> Alphabet::index_of(const std::string& name) const {
  for (size_t i = 0; i < props.size(); ++i)
    if (props[i] == name) return i;
  if (has_last && name == kLastProp) return props.size();
  return std::nullopt;
}

Alphabet Alphabet::with_last() const {
  Alphabet a = *this;
  a.has_last = true;
  return a;
}

Alphabet Alphabet::without_last() const {
  Alphabet a = *this;
  a.has_last = false;
  return a;
}

std::string Alphabet::letter_to_string(Letter l) const {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < bit_count(); ++i) {
    if (!(l & (Letter{1} << i))) continue;
    if (!first) out += ",";
    first = false;
    out += (i < props.size()) ? props[i] : std::string(kLastProp);
  }
  out += "}";
  return out;
}

Alphabet make_alphabet(const std::vector<std::string>& props) {
  Alphabet a;
  for (const auto& p : props) {
    if (is_reserved_word(p))
      throw std::invalid_argument("reserved word used as proposition: " + p);
    if (a.index_of(p))
      throw std::invalid_argument("duplicate proposition: " + p);
    a.props.push_back(p);
  }
  return a;
}

uint64_t count_traces(const Alphabet& a, size_t max_len) {
  const uint64_t k = uint64_t{1} << a.props.size();
  uint64_t total = 0, pow = 1;
  for (size_t len = 0; len <= max_len; ++len) {
    total += pow;
    pow *= k;
  }
  return total;
}

void for_each_trace(const Alphabet& a, size_t max_len,
                    const std::function<void(const Trace&)>& fn,
                    uint64_t cap) {
  if (count_traces(a, max_len) > cap)
    throw CapExceeded("trace enumeration exceeds cap");
  const Letter letters = Letter{1} << a.props.size();
  Trace t;
  for (size_t len = 0; len <= max_len; ++len) {
    t.letters.assign(len, 0);
    for (;;) {
      fn(t);
      // Increment like an odometer, most significant position first.
      size_t i = len;
      while (i > 0) {
        --i;
        if (++t.letters[i] < letters) break;
        t.letters[i] = 0;
        if (i == 0) goto next_len;
      }
      if (len == 0) break;
    }
  next_len:;
  }
}

std::vector<Trace> enumerate_traces(const Alphabet& a, size_t max_len,
                                    uint64_t cap) {
  std::vector<Trace> out;
  for_each_trace(a, max_len, [&](const Trace& t) { out.push_back(t); }, cap);
  return out;
}

}  // namespace ldlmdp
