#pragma once

#include "fscsynth/models/pmc.h"
#include "fscsynth/models/pomdp.h"

namespace fscsynth::testing {

// Small models from the worked examples. State ids are noted in fixtures.cpp.

/// Fragment with observations z0 = {s1, s3}, z1 = {s2, s4, s5}; s1 is initial.
Pomdp fragmentPomdp();
/// Four states; s0 has three actions, s1 and s3 share an observation.
Pomdp threeActionPomdp();
/// The pMC induced by threeActionPomdp for one memory node, written out by hand.
Pmc threeActionPmc();
/// Binary POMDP: s0 chooses between a (0.2/0.8) and b (0.5/0.5).
Pomdp binaryPomdp();
/// Simple pMC equivalent to binaryPomdp: s0 -> s_a with p, s_b with 1-p.
Pmc chainPmc();
/// One observation; a1 moves s0 to the goal s1, a2 loops at s0.
Pomdp loopOrLeavePomdp();
/// Three-state cycle with one action; s0 and s1 share an observation.
Pomdp cyclePomdp();
/// Two observations where a deterministic memoryless controller is strictly suboptimal.
Pomdp randomizationPomdp();

}  // namespace fscsynth::testing
