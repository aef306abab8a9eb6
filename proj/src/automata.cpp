#include "ldlmdp/automata.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace ldlmdp {
namespace {

std::vector<uint32_t> sorted_unique(std::vector<uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains(const std::vector<uint32_t>& v, uint32_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

bool Nfa::accepts(const Trace& t) const {
  std::vector<uint32_t> cur = initial;
  const size_t n = t.length();
  for (size_t i = 0; i < n; ++i) {
    Letter l = t.letters[i];
    if (alphabet.has_last && i + 1 == n) l |= alphabet.last_mask();
    std::vector<uint32_t> nxt;
    for (uint32_t s : cur)
      for (uint32_t d : next[s][l]) nxt.push_back(d);
    cur = sorted_unique(std::move(nxt));
    if (cur.empty()) return false;
  }
  for (uint32_t s : cur)
    if (contains(finals, s)) return true;
  return false;
}

bool Dfa::accepts(const Trace& t) const {
  uint32_t s = initial;
  const size_t n = t.length();
  for (size_t i = 0; i < n; ++i) {
    Letter l = t.letters[i];
    if (alphabet.has_last && i + 1 == n) l |= alphabet.last_mask();
    s = next[s][l];
  }
  return is_final[s];
}

std::vector<uint32_t> Dfa::final_states() const {
  std::vector<uint32_t> out;
  for (uint32_t s = 0; s < num_states; ++s)
    if (is_final[s]) out.push_back(s);
  return out;
}

Dfa determinize(const Nfa& nfa, size_t state_cap) {
  const size_t letters = nfa.alphabet.letter_count();
  std::map<std::vector<uint32_t>, uint32_t> index;
  std::vector<std::vector<uint32_t>> subsets;
  Dfa dfa;
  dfa.alphabet = nfa.alphabet;

  auto intern = [&](std::vector<uint32_t> subset) {
    auto it = index.find(subset);
    if (it != index.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(subsets.size());
    if (subsets.size() >= state_cap)
      throw StateCapExceeded("determinize: state cap exceeded");
    index.emplace(subset, id);
    subsets.push_back(std::move(subset));
    dfa.next.emplace_back(letters, 0);
    return id;
  };

  dfa.initial = intern(sorted_unique(nfa.initial));
  for (uint32_t s = 0; s < subsets.size(); ++s) {
    for (size_t l = 0; l < letters; ++l) {
      std::vector<uint32_t> nxt;
      for (uint32_t q : subsets[s])
        for (uint32_t d : nfa.next[q][l]) nxt.push_back(d);
      dfa.next[s][l] = intern(sorted_unique(std::move(nxt)));
    }
  }
  dfa.num_states = subsets.size();
  dfa.is_final.assign(dfa.num_states, false);
  for (uint32_t s = 0; s < dfa.num_states; ++s)
    for (uint32_t q : subsets[s])
      if (contains(nfa.finals, q)) dfa.is_final[s] = true;
  return dfa;
}

namespace {

std::vector<uint32_t> reachable_states(const Dfa& dfa) {
  std::vector<bool> seen(dfa.num_states, false);
  std::queue<uint32_t> work;
  seen[dfa.initial] = true;
  work.push(dfa.initial);
  while (!work.empty()) {
    uint32_t s = work.front();
    work.pop();
    for (uint32_t d : dfa.next[s])
      if (!seen[d]) {
        seen[d] = true;
        work.push(d);
      }
  }
  std::vector<uint32_t> out;
  for (uint32_t s = 0; s < dfa.num_states; ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

}  // namespace

Dfa canonical_form(const Dfa& dfa) {
  const size_t letters = dfa.alphabet.letter_count();
  std::vector<uint32_t> order(dfa.num_states, kNoId);
  std::vector<uint32_t> bfs;
  order[dfa.initial] = 0;
  bfs.push_back(dfa.initial);
  for (size_t i = 0; i < bfs.size(); ++i) {
    uint32_t s = bfs[i];
    for (size_t l = 0; l < letters; ++l) {
      uint32_t d = dfa.next[s][l];
      if (order[d] == kNoId) {
        order[d] = static_cast<uint32_t>(bfs.size());
        bfs.push_back(d);
      }
    }
  }
  Dfa out;
  out.alphabet = dfa.alphabet;
  out.num_states = bfs.size();
  out.initial = 0;
  out.is_final.assign(out.num_states, false);
  out.next.assign(out.num_states, std::vector<uint32_t>(letters, 0));
  out.has_labels = dfa.has_labels;
  if (dfa.has_labels) out.labels.assign(out.num_states, {});
  for (uint32_t s : bfs) {
    uint32_t ns = order[s];
    out.is_final[ns] = dfa.is_final[s];
    if (dfa.has_labels) out.labels[ns] = dfa.labels[s];
    for (size_t l = 0; l < letters; ++l)
      out.next[ns][l] = order[dfa.next[s][l]];
  }
  return out;
}

Dfa minimize(const Dfa& dfa) {
  const size_t letters = dfa.alphabet.letter_count();
  std::vector<uint32_t> live = reachable_states(dfa);

  // Initial partition: label vector when present, else finality.
  std::map<std::pair<bool, std::vector<uint32_t>>, uint32_t> init_blocks;
  std::vector<uint32_t> block(dfa.num_states, 0);
  for (uint32_t s : live) {
    std::pair<bool, std::vector<uint32_t>> key{
        dfa.is_final[s], dfa.has_labels ? dfa.labels[s] : std::vector<uint32_t>{}};
    auto it = init_blocks.find(key);
    if (it == init_blocks.end())
      it = init_blocks.emplace(key, static_cast<uint32_t>(init_blocks.size())).first;
    block[s] = it->second;
  }

  size_t block_count = init_blocks.size();
  for (;;) {
    // Signature of a state: its block plus the blocks of its successors.
    std::map<std::vector<uint32_t>, uint32_t> sig_block;
    std::vector<uint32_t> next_block(dfa.num_states, 0);
    for (uint32_t s : live) {
      std::vector<uint32_t> sig;
      sig.reserve(letters + 1);
      sig.push_back(block[s]);
      for (size_t l = 0; l < letters; ++l) sig.push_back(block[dfa.next[s][l]]);
      auto it = sig_block.find(sig);
      if (it == sig_block.end())
        it = sig_block.emplace(std::move(sig), static_cast<uint32_t>(sig_block.size())).first;
      next_block[s] = it->second;
    }
    if (sig_block.size() == block_count) break;
    block_count = sig_block.size();
    block = std::move(next_block);
  }

  Dfa out;
  out.alphabet = dfa.alphabet;
  out.num_states = block_count;
  out.initial = block[dfa.initial];
  out.is_final.assign(block_count, false);
  out.next.assign(block_count, std::vector<uint32_t>(letters, 0));
  out.has_labels = dfa.has_labels;
  if (dfa.has_labels) out.labels.assign(block_count, {});
  for (uint32_t s : live) {
    uint32_t b = block[s];
    out.is_final[b] = dfa.is_final[s];
    if (dfa.has_labels) out.labels[b] = dfa.labels[s];
    for (size_t l = 0; l < letters; ++l) out.next[b][l] = block[dfa.next[s][l]];
  }
  return canonical_form(out);
}

Nfa reverse_nfa(const Nfa& nfa) {
  Nfa out;
  out.alphabet = nfa.alphabet;
  out.num_states = nfa.num_states;
  out.initial = nfa.finals;
  out.finals = nfa.initial;
  out.next.assign(nfa.num_states,
                  std::vector<std::vector<uint32_t>>(nfa.alphabet.letter_count()));
  for (uint32_t s = 0; s < nfa.num_states; ++s)
    for (size_t l = 0; l < nfa.next[s].size(); ++l)
      for (uint32_t d : nfa.next[s][l]) out.next[d][l].push_back(s);
  for (auto& per_state : out.next)
    for (auto& succ : per_state) succ = sorted_unique(std::move(succ));
  return out;
}

Nfa dfa_to_nfa(const Dfa& dfa) {
  Nfa out;
  out.alphabet = dfa.alphabet;
  out.num_states = dfa.num_states;
  out.initial = {dfa.initial};
  for (uint32_t s = 0; s < dfa.num_states; ++s)
    if (dfa.is_final[s]) out.finals.push_back(s);
  out.next.assign(dfa.num_states,
                  std::vector<std::vector<uint32_t>>(dfa.alphabet.letter_count()));
  for (uint32_t s = 0; s < dfa.num_states; ++s)
    for (size_t l = 0; l < dfa.next[s].size(); ++l)
      out.next[s][l] = {dfa.next[s][l]};
  return out;
}

Dfa labeled_product(const std::vector<Dfa>& dfas, size_t state_cap) {
  if (dfas.empty()) throw std::invalid_argument("labeled_product: no automata");
  for (const Dfa& d : dfas)
    if (!(d.alphabet == dfas[0].alphabet))
      throw std::invalid_argument("labeled_product: alphabets differ");
  const size_t letters = dfas[0].alphabet.letter_count();

  std::map<std::vector<uint32_t>, uint32_t> index;
  std::vector<std::vector<uint32_t>> tuples;
  Dfa out;
  out.alphabet = dfas[0].alphabet;
  out.has_labels = true;

  auto intern = [&](std::vector<uint32_t> tuple) {
    auto it = index.find(tuple);
    if (it != index.end()) return it->second;
    if (tuples.size() >= state_cap)
      throw StateCapExceeded("labeled_product: state cap exceeded");
    uint32_t id = static_cast<uint32_t>(tuples.size());
    index.emplace(tuple, id);
    tuples.push_back(std::move(tuple));
    out.next.emplace_back(letters, 0);
    return id;
  };

  std::vector<uint32_t> init;
  for (const Dfa& d : dfas) init.push_back(d.initial);
  out.initial = intern(std::move(init));

  for (uint32_t s = 0; s < tuples.size(); ++s) {
    for (size_t l = 0; l < letters; ++l) {
      std::vector<uint32_t> nxt(dfas.size());
      for (size_t i = 0; i < dfas.size(); ++i)
        nxt[i] = dfas[i].next[tuples[s][i]][l];
      out.next[s][l] = intern(std::move(nxt));
    }
  }
  out.num_states = tuples.size();
  out.is_final.assign(out.num_states, false);
  out.labels.assign(out.num_states, {});
  for (uint32_t s = 0; s < out.num_states; ++s) {
    for (uint32_t i = 0; i < dfas.size(); ++i)
      if (dfas[i].is_final[tuples[s][i]]) out.labels[s].push_back(i);
    out.is_final[s] = !out.labels[s].empty();
  }
  return out;
}

std::vector<uint32_t> reach(const Dfa& dfa, uint32_t from) {
  if (from >= dfa.num_states)
    throw std::out_of_range("reach: state out of range");
  std::vector<bool> seen(dfa.num_states, false);
  std::queue<uint32_t> work;
  seen[from] = true;
  work.push(from);
  while (!work.empty()) {
    uint32_t s = work.front();
    work.pop();
    for (uint32_t d : dfa.next[s])
      if (!seen[d]) {
        seen[d] = true;
        work.push(d);
      }
  }
  std::vector<uint32_t> out;
  for (uint32_t s = 0; s < dfa.num_states; ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

bool isomorphic(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet == b.alphabet)) return false;
  return canonical_form(a) == canonical_form(b);
}

bool pairwise_distinguishable(const Dfa& dfa) {
  Dfa reduced = minimize(dfa);
  Dfa pruned = canonical_form(dfa);  // reachable part only
  return reduced.num_states == pruned.num_states;
}

namespace {

std::string dot_header() {
  return "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n"
         "  init [shape=point];\n";
}

}  // namespace

std::string to_dot(const Nfa& nfa) {
  std::ostringstream os;
  os << dot_header();
  for (uint32_t s = 0; s < nfa.num_states; ++s) {
    os << "  q" << s << " [";
    if (contains(nfa.finals, s)) os << "shape=doublecircle, ";
    os << "label=\"" << s;
    if (s < nfa.state_names.size() && !nfa.state_names[s].empty())
      os << "\\n" << nfa.state_names[s];
    os << "\"];\n";
  }
  for (uint32_t s : nfa.initial) os << "  init -> q" << s << ";\n";
  for (uint32_t s = 0; s < nfa.num_states; ++s)
    for (size_t l = 0; l < nfa.next[s].size(); ++l)
      for (uint32_t d : nfa.next[s][l])
        os << "  q" << s << " -> q" << d << " [label=\""
           << nfa.alphabet.letter_to_string(static_cast<Letter>(l)) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const Dfa& dfa, const std::vector<std::string>& colors) {
  std::ostringstream os;
  os << dot_header();
  for (uint32_t s = 0; s < dfa.num_states; ++s) {
    os << "  q" << s << " [";
    if (dfa.is_final[s]) os << "shape=doublecircle, ";
    if (s < colors.size() && !colors[s].empty())
      os << "style=filled, fillcolor=\"" << colors[s] << "\", ";
    os << "label=\"" << s;
    if (dfa.has_labels) {
      os << "\\n{";
      for (size_t i = 0; i < dfa.labels[s].size(); ++i)
        os << (i ? "," : "") << dfa.labels[s][i];
      os << "}";
    }
    os << "\"];\n";
  }
  os << "  init -> q" << dfa.initial << ";\n";
  for (uint32_t s = 0; s < dfa.num_states; ++s)
    for (size_t l = 0; l < dfa.next[s].size(); ++l)
      os << "  q" << s << " -> q" << dfa.next[s][l] << " [label=\""
         << dfa.alphabet.letter_to_string(static_cast<Letter>(l)) << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

nlohmann::json alphabet_json(const Alphabet& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : a.props) out.push_back(p);
  if (a.has_last) out.push_back(kLastProp);
  return out;
}

}  // namespace

std::string to_json(const Nfa& nfa) {
  nlohmann::json j;
  j["alphabet"] = alphabet_json(nfa.alphabet);
  j["states"] = nfa.num_states;
  j["initial"] = nfa.initial;
  j["finals"] = nfa.finals;
  auto trans = nlohmann::json::array();
  for (uint32_t s = 0; s < nfa.num_states; ++s)
    for (size_t l = 0; l < nfa.next[s].size(); ++l)
      for (uint32_t d : nfa.next[s][l])
        trans.push_back(nlohmann::json::array({s, l, d}));
  j["transitions"] = trans;
  return j.dump(2);
}

std::string to_json(const Dfa& dfa) {
  nlohmann::json j;
  j["alphabet"] = alphabet_json(dfa.alphabet);
  j["states"] = dfa.num_states;
  j["initial"] = dfa.initial;
  j["finals"] = dfa.final_states();
  auto trans = nlohmann::json::array();
  for (uint32_t s = 0; s < dfa.num_states; ++s)
    for (size_t l = 0; l < dfa.next[s].size(); ++l)
      trans.push_back(nlohmann::json::array({s, l, dfa.next[s][l]}));
  j["transitions"] = trans;
  if (dfa.has_labels) {
    nlohmann::json labels = nlohmann::json::object();
    for (uint32_t s = 0; s < dfa.num_states; ++s)
      labels[std::to_string(s)] = dfa.labels[s];
    j["labels"] = labels;
  }
  return j.dump(2);
}

}  // namespace ldlmdp
