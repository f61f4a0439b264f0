#pragma once

#include <string>
#include <string_view>

#include "fscsynth/models/rational.h"

namespace fscsynth {

enum class SpecKind { ReachAvoidProb, ExpectedReward };
enum class Comparison { Greater, GreaterEqual, Less, LessEqual };
enum class Direction { Maximize, Minimize };

struct Specification {
    SpecKind kind = SpecKind::ReachAvoidProb;
    Comparison comparison = Comparison::Greater;
    Rational threshold = 0;
    // Reach-avoid form "!bad U goal"; plain "F goal" ignores bad states.
    bool avoidBad = true;
    // Expected-reward optimization direction as written (Emin / Emax).
    Direction rewardDirection = Direction::Minimize;

    /// Direction in which a search should push the value.
    Direction searchDirection() const;
    bool isLowerBound() const { return comparison == Comparison::Greater || comparison == Comparison::GreaterEqual; }

    bool satisfiedBy(Rational const& value) const;
    bool satisfiedBy(double value) const;
    /// Satisfaction by an infinite value (expected rewards only).
    bool satisfiedByInfinity() const { return isLowerBound(); }

    std::string toString() const;
    friend bool operator==(Specification const&, Specification const&) = default;
};

/// Parses `P> 0.9 [!bad U goal]`, `P>= 0.5 [F goal]`, `Emin<= 10.5 [F goal]`.
Specification parseSpecification(std::string_view text);

std::string toString(Comparison c);

}  // namespace fscsynth
