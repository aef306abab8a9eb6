#include "doctest.h"

#include "ldlmdp/compile.hpp"
#include "ldlmdp/parser.hpp"
#include "ldlmdp/printer.hpp"
#include "ldlmdp/rewrite.hpp"
#include "ldlmdp/semantics.hpp"
#include "support/gen.hpp"

using namespace ldlmdp;

namespace {

Dfa compile_min(const char* text, const Alphabet& a) {
  return formula_to_min_dfa(expand_sugar(parse_formula(text)), a);
}

Nfa compile_plain_nfa(const char* text, const Alphabet& a) {
  return eliminate_last(ldlf_to_nfa(expand_sugar(parse_formula(text)), a).nfa);
}

bool language_equal(const Dfa& x, const Dfa& y, const Alphabet& a,
                    size_t max_len) {
  bool equal = true;
  for_each_trace(a, max_len, [&](const Trace& t) {
    if (x.accepts(t) != y.accepts(t)) equal = false;
  });
  return equal;
}

}  // namespace

TEST_CASE("determinize") {
  Alphabet a = make_alphabet({"a"});
  Dfa universal = minimize(determinize(compile_plain_nfa("tt", a)));
  CHECK(universal.num_states == 1);

  Dfa parity = compile_min("<(true; true)*> end", a);
  CHECK(parity.num_states == 2);

  // Acceptance preserved through the whole chain on random formulas.
  testgen::FormulaGen gen(51, {"a", "b"});
  Alphabet ab = make_alphabet({"a", "b"});
  for (FormulaId f : gen.corpus(25, 3)) {
    Nfa nfa = eliminate_last(ldlf_to_nfa(expand_sugar(f), ab).nfa);
    Dfa dfa = determinize(nfa);
    for_each_trace(ab, 3, [&](const Trace& t) {
      REQUIRE(dfa.accepts(t) == nfa.accepts(t));
    });
  }
}

TEST_CASE("minimize") {
  Alphabet a = make_alphabet({"a"});
  Dfa parity = compile_min("<(true; true)*> end", a);

  SUBCASE("idempotent and deterministic") {
    CHECK(minimize(parity) == parity);
    CHECK(minimize(minimize(parity)) == minimize(parity));
  }

  SUBCASE("merges a duplicated state") {
    // Duplicate parity's initial state: same language, one more state.
    Dfa dup = parity;
    uint32_t clone = static_cast<uint32_t>(dup.num_states);
    dup.next.push_back(dup.next[dup.initial]);
    dup.is_final.push_back(dup.is_final[dup.initial]);
    dup.num_states++;
    // Reroute one incoming edge through the clone.
    dup.next[1][0] = clone;
    Dfa re_min = minimize(dup);
    CHECK(re_min.num_states == parity.num_states);
    CHECK(language_equal(re_min, parity, a, 6));
  }
}

TEST_CASE("reverse_nfa") {
  Alphabet a = make_alphabet({"g"});

  SUBCASE("eventually is reversal symmetric") {
    Nfa fwd = compile_plain_nfa("F g", a);
    Dfa fwd_min = minimize(determinize(fwd));
    Dfa rev_min = minimize(determinize(reverse_nfa(fwd)));
    CHECK(isomorphic(fwd_min, rev_min));
  }

  SUBCASE("goal-at-last-position reverses to goal-at-first-position") {
    Nfa fwd = compile_plain_nfa("<(!g)*; g> end", a);
    Dfa rev = minimize(determinize(reverse_nfa(fwd)));
    for_each_trace(a, 5, [&](const Trace& t) {
      bool want = !t.empty() && (t.letters[0] & 1);
      for (size_t i = 1; i < t.length(); ++i)
        if (t.letters[i] & 1) want = false;
      CHECK(rev.accepts(t) == want);
    });
  }

  SUBCASE("reversal is an involution on languages") {
    testgen::FormulaGen gen(52, {"a", "b"});
    Alphabet ab = make_alphabet({"a", "b"});
    for (FormulaId f : gen.corpus(20, 3)) {
      Nfa fwd = eliminate_last(ldlf_to_nfa(expand_sugar(f), ab).nfa);
      Dfa once = minimize(determinize(fwd));
      Dfa twice = minimize(determinize(reverse_nfa(reverse_nfa(fwd))));
      CHECK(isomorphic(once, twice));
    }
  }
}

TEST_CASE("labeled_product") {
  Alphabet a = make_alphabet({"a", "b"});
  Dfa ev_a = compile_min("F a", a);
  Dfa alw_b = compile_min("G b", a);

  SUBCASE("singleton product mirrors the component") {
    Dfa prod = labeled_product({ev_a});
    CHECK(prod.num_states == ev_a.num_states);
    for (uint32_t s = 0; s < prod.num_states; ++s)
      CHECK(prod.labels[s] ==
            (prod.is_final[s] ? std::vector<uint32_t>{0} : std::vector<uint32_t>{}));
  }

  SUBCASE("tt x ff collapses to one labeled state") {
    Dfa top = compile_min("tt", a);
    Dfa bot = compile_min("ff", a);
    Dfa prod = labeled_product({top, bot});
    CHECK(prod.num_states == 1);
    CHECK(prod.labels[0] == std::vector<uint32_t>{0});
  }

  SUBCASE("product of minimal components is pairwise distinguishable") {
    Dfa prod = labeled_product({ev_a, alw_b});
    CHECK(pairwise_distinguishable(prod));
  }
}

TEST_CASE("reach") {
  Alphabet a = make_alphabet({"a"});
  Dfa alw = compile_min("G a", a);
  // Find the rejecting sink.
  uint32_t sink = kNoId;
  for (uint32_t s = 0; s < alw.num_states; ++s)
    if (!alw.is_final[s]) sink = s;
  REQUIRE(sink != kNoId);
  CHECK(reach(alw, sink) == std::vector<uint32_t>{sink});
  CHECK(reach(alw, alw.initial).size() == alw.num_states);

  Dfa parity = compile_min("<(true; true)*> end", a);
  CHECK(reach(parity, 0).size() == 2);
  CHECK(reach(parity, 1).size() == 2);
}

TEST_CASE("dfa acceptance") {
  Alphabet a = make_alphabet({"a"});
  Dfa top = compile_min("tt", a);
  Dfa parity = compile_min("<(true; true)*> end", a);
  Dfa ev = compile_min("F a", a);
  Trace t3;
  t3.letters = {1, 0, 1};
  CHECK(top.accepts(t3));
  CHECK(!parity.accepts(t3));
  Trace t;
  t.letters = {0, 1};
  CHECK(ev.accepts(t));
  CHECK(ev.accepts(Trace{{1}}));
  CHECK(!ev.accepts(Trace{}));
}

TEST_CASE("dot export is deterministic and well formed") {
  Alphabet a = make_alphabet({"a"});
  Dfa top = compile_min("tt", a);
  std::string dot = to_dot(top);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot == to_dot(top));

  Dfa parity = compile_min("<(true; true)*> end", a);
  std::string pd = to_dot(parity);
  // 2 states, 2 interpretations each: 4 edges.
  size_t edges = 0;
  for (size_t pos = pd.find("->", 0); pos != std::string::npos;
       pos = pd.find("->", pos + 1))
    ++edges;
  CHECK(edges == 4 + 1);  // plus the init arrow
}
