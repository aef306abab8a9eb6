// trace.hpp — finite traces over an explicit propositional alphabet.
//
// A letter is a bitmask over the alphabet's ordered propositions; the
// reserved `last` pseudo-proposition, when carried (automaton construction
// only), occupies the bit just past the declared props.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldlmdp/formula.hpp"

namespace ldlmdp {

using Letter = uint32_t;

struct Alphabet {
  std::vector<std::string> props;  // ordered, user-declared
  bool has_last = false;

  size_t bit_count() const { return props.size() + (has_last ? 1 : 0); }
  size_t letter_count() const { return size_t{1} << bit_count(); }
  Letter last_mask() const { return has_last ? Letter{1} << props.size() : 0; }

  // Index of a prop name; `last` resolves to its pseudo-bit when carried.
  std::optional<size_t> index_of(const std::string& name) const;

  Alphabet with_last() const;
  Alphabet without_last() const;

  // Renders a letter as "{a,b}" in prop order.
  std::string letter_to_string(Letter l) const;

  bool operator==(const Alphabet& o) const {
    return props == o.props && has_last == o.has_last;
  }
};

// Makes an alphabet from declared names, rejecting reserved/duplicate names.
Alphabet make_alphabet(const std::vector<std::string>& props);

struct Trace {
  std::vector<Letter> letters;

  size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr uint64_t kDefaultTraceCap = uint64_t{1} << 20;

// Number of traces of length 0..max_len over the alphabet.
uint64_t count_traces(const Alphabet& a, size_t max_len);

// Visits every trace of length 0..max_len over 2^props, shortest first and
// lexicographically within a length, each exactly once.
void for_each_trace(const Alphabet& a, size_t max_len,
                    const std::function<void(const Trace&)>& fn,
                    uint64_t cap = kDefaultTraceCap);

std::vector<Trace> enumerate_traces(const Alphabet& a, size_t max_len,
                                    uint64_t cap = kDefaultTraceCap);

}  // namespace ldlmdp
