// monitor.hpp — runtime-verification coloring of DFA states and the
// early/negative reward-shaping transforms built on it.
//
// Colors, from the monitor's point of view after some prefix:
//   TRUE / FALSE            verdict settled forever
//   WILL_TRUE / WILL_FALSE  not settled yet, but every sufficiently long
//                           continuation settles it that way
//   WILL_TEMP_TRUE          every long continuation passes through
//                           acceptance, which may later be lost
//   TEMP_TRUE / TEMP_FALSE  currently accepted/rejected, future open
//
// The will_* verdicts are cycle conditions on the transition graph: a state
// is WILL_TRUE when no cycle outside the settled-true region is reachable
// without first entering it, and symmetrically for WILL_FALSE; WILL_TEMP_TRUE
// when every cycle reachable without touching acceptance is absent.  One
// color per state, by the precedence
//   TRUE > FALSE > WILL_TRUE > WILL_FALSE > WILL_TEMP_TRUE
//        > TEMP_TRUE > TEMP_FALSE.

#pragma once

#include "ldlmdp/extended.hpp"

namespace ldlmdp {

enum class MonitorColor : uint8_t {
  True,
  False,
  WillTrue,
  WillFalse,
  WillTempTrue,
  TempTrue,
  TempFalse,
};

const char* color_name(MonitorColor c);
const char* color_tint(MonitorColor c);  // fill color for DOT export

std::vector<MonitorColor> color_states(const Dfa& dfa);

std::string coloring_to_json(const Dfa& dfa,
                             const std::vector<MonitorColor>& colors);

enum class ShapeMode {
  EarlyPositive,      // pay r_i on the first entry into WILL_TRUE /
                      // WILL_TEMP_TRUE / TRUE, alongside the base rewards
  NegativeTransform,  // complete-trace only: -r_i at the first entry into
                      // WILL_FALSE / FALSE, 0 instead of r_i at an accepted
                      // stop, -r_i at a rejected stop when never doomed
};

struct ShapedMdp {
  ExtendedMdp mdp;                 // states carry first-trigger bits
  std::vector<std::vector<MonitorColor>> colorings;  // per formula
  std::vector<std::string> warnings;
};

// Rebuilds the extended MDP with one first-trigger bit per formula and the
// shaped reward scheme.  With discount 1 and complete traces the negative
// transform changes every complete trace's total by exactly -r_i per
// formula; with discount < 1 a caveat is emitted because earlier rewards
// weigh more.
ShapedMdp shape_rewards(const ExtendedMdp& mdp, ShapeMode mode);

}  // namespace ldlmdp
