#include "fscsynth/models/specification.h"

#include <cctype>

#include "fscsynth/models/errors.h"

namespace fscsynth {

std::string toString(Comparison c) {
    switch (c) {
        case Comparison::Greater:
            return ">";
        case Comparison::GreaterEqual:
            return ">=";
        case Comparison::Less:
            return "<";
        case Comparison::LessEqual:
            return "<=";
    }
    return "?";
}

Direction Specification::searchDirection() const {
    if (kind == SpecKind::ExpectedReward) return rewardDirection;
    return isLowerBound() ? Direction::Maximize : Direction::Minimize;
}

bool Specification::satisfiedBy(Rational const& value) const {
    switch (comparison) {
        case Comparison::Greater:
            return value > threshold;
        case Comparison::GreaterEqual:
            return value >= threshold;
        case Comparison::Less:
            return value < threshold;
        case Comparison::LessEqual:
            return value <= threshold;
    }
    return false;
}

bool Specification::satisfiedBy(double value) const {
    double t = threshold.get_d();
    switch (comparison) {
        case Comparison::Greater:
            return value > t;
        case Comparison::GreaterEqual:
            return value >= t;
        case Comparison::Less:
            return value < t;
        case Comparison::LessEqual:
            return value <= t;
    }
    return false;
}

std::string Specification::toString() const {
    std::string head = kind == SpecKind::ReachAvoidProb
                           ? "P"
                           : (rewardDirection == Direction::Minimize ? "Emin" : "Emax");
    std::string path = kind == SpecKind::ReachAvoidProb && avoidBad ? "[!bad U goal]" : "[F goal]";
    return head + fscsynth::toString(comparison) + " " + fscsynth::toString(threshold) + " " + path;
}

namespace {

class SpecParser {
   public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    Specification parse() {
        Specification spec;
        skip();
        if (acceptWord("Emin")) {
            spec.kind = SpecKind::ExpectedReward;
            spec.rewardDirection = Direction::Minimize;
        } else if (acceptWord("Emax")) {
            spec.kind = SpecKind::ExpectedReward;
            spec.rewardDirection = Direction::Maximize;
        } else if (acceptWord("P")) {
            spec.kind = SpecKind::ReachAvoidProb;
        } else {
            fail("expected 'P', 'Emin' or 'Emax'");
        }
        skip();
        if (acceptWord(">=")) {
            spec.comparison = Comparison::GreaterEqual;
        } else if (acceptWord("<=")) {
            spec.comparison = Comparison::LessEqual;
        } else if (acceptWord(">")) {
            spec.comparison = Comparison::Greater;
        } else if (acceptWord("<")) {
            spec.comparison = Comparison::Less;
        } else {
            fail("expected comparison operator");
        }
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '[') {
            ++pos_;
        }
        try {
            spec.threshold = parseRational(text_.substr(start, pos_ - start));
        } catch (std::invalid_argument const&) {
            pos_ = start;
            fail("malformed threshold");
        }
        if (spec.kind == SpecKind::ReachAvoidProb && (spec.threshold < 0 || spec.threshold >= 1)) {
            pos_ = start;
            fail("probability threshold must lie in [0,1)");
        }
        if (spec.kind == SpecKind::ExpectedReward && spec.threshold < 0) {
            pos_ = start;
            fail("reward threshold must be non-negative");
        }
        skip();
        expect("[");
        skip();
        if (acceptWord("F")) {
            spec.avoidBad = false;
            skip();
            expect("goal");
        } else {
            if (spec.kind == SpecKind::ExpectedReward) fail("reward specifications use 'F goal'");
            expect("!");
            skip();
            expect("bad");
            skip();
            expect("U");
            skip();
            expect("goal");
            spec.avoidBad = true;
        }
        skip();
        expect("]");
        skip();
        if (pos_ != text_.size()) fail("trailing characters");
        return spec;
    }

   private:
    [[noreturn]] void fail(std::string const& message) const { throw ParseError(message, 1, pos_ + 1); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool acceptWord(std::string_view word) {
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view word) {
        if (!acceptWord(word)) fail("expected '" + std::string(word) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Specification parseSpecification(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace fscsynth
