// automata.hpp — explicit NFA/DFA over 2^P, with subset construction, Moore
// minimization, reversal, labeled synchronous product, reachability and DOT
// export.  Interpretations are bitsets over the ordered alphabet; automata
// are immutable once built.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldlmdp/trace.hpp"

namespace ldlmdp {

struct StateCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr size_t kDefaultStateCap = 100000;
inline constexpr size_t kMaxExplicitProps = 12;

struct Nfa {
  Alphabet alphabet;
  size_t num_states = 0;
  std::vector<uint32_t> initial;  // sorted
  std::vector<uint32_t> finals;   // sorted
  // next[s][letter] = sorted successor list
  std::vector<std::vector<std::vector<uint32_t>>> next;
  // Optional human-readable state annotations (macro-state formulas).
  std::vector<std::string> state_names;

  // Runs the automaton over the trace.  When the alphabet carries `last`,
  // the final letter is read with the last bit set, matching the
  // construction-time convention; the empty trace is accepted iff some
  // initial state is final.
  bool accepts(const Trace& t) const;
};

struct Dfa {
  Alphabet alphabet;
  size_t num_states = 0;
  uint32_t initial = 0;
  std::vector<bool> is_final;
  // next[s][letter], total by construction
  std::vector<std::vector<uint32_t>> next;
  // Accepting-component labels on product states; empty when unused.
  bool has_labels = false;
  std::vector<std::vector<uint32_t>> labels;  // sorted per state

  bool accepts(const Trace& t) const;
  std::vector<uint32_t> final_states() const;

  bool operator==(const Dfa& o) const = default;
};

Dfa determinize(const Nfa& nfa, size_t state_cap = kDefaultStateCap);

// Unique minimal automaton for the language; when labels are present the
// initial partition separates label vectors so reward-relevant acceptance
// is never merged.  Output is canonically numbered by BFS from the initial
// state (letters in increasing order), so equal languages give equal
// structs.
Dfa minimize(const Dfa& dfa);

// Language reversal: swaps initial and final states and flips every edge.
Nfa reverse_nfa(const Nfa& nfa);

Nfa dfa_to_nfa(const Dfa& dfa);

// Synchronous product restricted to states reachable from the joint initial
// state; labels(q1..qm) = { i : qi final in component i }.
Dfa labeled_product(const std::vector<Dfa>& dfas,
                    size_t state_cap = kDefaultStateCap);

// States reachable from `from` by zero or more transitions (sorted).
std::vector<uint32_t> reach(const Dfa& dfa, uint32_t from);

// BFS-canonical renumbering of the reachable part.
Dfa canonical_form(const Dfa& dfa);

bool isomorphic(const Dfa& a, const Dfa& b);

// No two distinct reachable states related by a bisimulation that respects
// finality (and labels, when present).  True for minimization fixpoints.
bool pairwise_distinguishable(const Dfa& dfa);

std::string to_dot(const Nfa& nfa);
// `colors`, if nonempty, tints states (indexed by state).
std::string to_dot(const Dfa& dfa, const std::vector<std::string>& colors = {});

std::string to_json(const Nfa& nfa);
std::string to_json(const Dfa& dfa);

}  // namespace ldlmdp
