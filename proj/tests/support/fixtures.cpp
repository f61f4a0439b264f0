#include "fixtures.h"

#include "fscsynth/models/io.h"

namespace fscsynth::testing {

// s1=0 s2=1 s3=2 s4=3 s5=4
Pomdp fragmentPomdp() {
    return parsePomdp(R"(pomdp
states 5
initial 0
observations 2
obs 0 0
obs 1 1
obs 2 0
obs 3 1
obs 4 1
trans 0 a1 1 0.6
trans 0 a1 2 0.4
trans 0 a2 3 0.7
trans 0 a2 4 0.3
trans 1 a1 1 1
trans 1 a2 1 1
trans 2 a1 2 1
trans 2 a2 2 1
trans 3 a1 3 1
trans 3 a2 3 1
trans 4 a1 4 1
trans 4 a2 4 1
label goal 1
)");
}

// At the shared observation of s1 and s3 the action "a2" carries the parameter and
// "b1" (lexicographically last) receives the remaining probability.
Pomdp threeActionPomdp() {
    return parsePomdp(R"(pomdp
states 4
initial 0
observations 3
obs 0 0
obs 1 1
obs 2 2
obs 3 1
trans 0 a1 1 1
trans 0 a2 2 0.5
trans 0 a2 3 0.5
trans 0 a3 3 1
trans 1 b1 2 1
trans 1 a2 0 0.5
trans 1 a2 2 0.5
trans 2 a1 2 1
trans 3 b1 2 1
trans 3 a2 3 1
label goal 2
)");
}

Pmc threeActionPmc() {
    return parsePmc(R"(pmc
states 4
initial 0
params p1 p2 q
group p1 p2
trans 0 1 p1*1
trans 0 2 p2*0.5
trans 0 3 p2*0.5 + (1-p1-p2)*1
trans 3 3 q
trans 3 2 1-q
trans 1 0 0.5*q
trans 1 2 1-0.5*q
trans 2 2 1
label goal 2
)");
}

// s0=0 s1=1 s2=2
Pomdp binaryPomdp() {
    return parsePomdp(R"(pomdp
states 3
initial 0
observations 2
obs 0 0
obs 1 1
obs 2 1
trans 0 a 1 0.2
trans 0 a 2 0.8
trans 0 b 1 0.5
trans 0 b 2 0.5
trans 1 a 1 1
trans 2 a 2 1
label goal 2
)");
}

// s0=0 s1=1 s2=2 s_a=3 s_b=4
Pmc chainPmc() {
    return parsePmc(R"(pmc
states 5
initial 0
params p
trans 0 3 p
trans 0 4 1-p
trans 3 1 0.2
trans 3 2 0.8
trans 4 1 0.5
trans 4 2 0.5
trans 1 1 1
trans 2 2 1
label goal 2
)");
}

Pomdp loopOrLeavePomdp() {
    return parsePomdp(R"(pomdp
states 2
initial 0
observations 1
obs 0 0
obs 1 0
trans 0 a1 1 1
trans 0 a2 0 1
trans 1 a1 1 1
trans 1 a2 1 1
label goal 1
)");
}

Pomdp cyclePomdp() {
    return parsePomdp(R"(pomdp
states 3
initial 0
observations 2
obs 0 0
obs 1 0
obs 2 1
trans 0 a 1 1
trans 1 a 2 1
trans 2 a 2 1/2
trans 2 a 0 1/2
reward 0 a 1
reward 1 a 2
label goal 2
)");
}

// States 1 and 2 look alike. At 1 the goal needs "r", at 2 it needs "l"; the
// wrong action risks the sink 4. Deterministic choices reach 1/2, mixing both
// actions evenly reaches 2/3. State 0 is initial, 3 is the goal.
Pomdp randomizationPomdp() {
    return parsePomdp(R"(pomdp
states 5
initial 0
observations 2
obs 0 0
obs 1 1
obs 2 1
obs 3 0
obs 4 0
trans 0 go 1 1/2
trans 0 go 2 1/2
trans 1 l 1 1/2
trans 1 l 4 1/2
trans 1 r 3 1
trans 2 l 3 1
trans 2 r 2 1/2
trans 2 r 4 1/2
trans 3 go 3 1
trans 4 go 4 1
label goal 3
)");
}

}  // namespace fscsynth::testing
