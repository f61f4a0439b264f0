#include "fscsynth/models/rational_function.h"

#include <stdexcept>

namespace fscsynth {

std::size_t RationalFunction::gcdThreshold = 64;

RationalFunction::RationalFunction(Polynomial numerator) : numerator_(std::move(numerator)), denominator_(1) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (denominator_.isZero()) throw std::domain_error("rational function with zero denominator");
    normalizeConstantDenominator();
}

void RationalFunction::normalizeConstantDenominator() {
    if (numerator_.isZero()) {
        denominator_ = Polynomial(1);
        return;
    }
    if (denominator_.isConstant() && !denominator_.isOne()) {
        numerator_ *= Rational(1 / denominator_.constantTerm());
        denominator_ = Polynomial(1);
    }
}

void RationalFunction::maybeSimplify() {
    normalizeConstantDenominator();
    if (numerator_.termCount() > gcdThreshold || denominator_.termCount() > gcdThreshold) simplify();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.numerator_ = -r.numerator_;
    return r;
}

RationalFunction operator+(RationalFunction const& a, RationalFunction const& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    RationalFunction r;
    if (a.denominator_ == b.denominator_) {
        r.numerator_ = a.numerator_ + b.numerator_;
        r.denominator_ = a.denominator_;
    } else {
        r.numerator_ = a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_;
        r.denominator_ = a.denominator_ * b.denominator_;
    }
    r.maybeSimplify();
    return r;
}

RationalFunction operator-(RationalFunction const& a, RationalFunction const& b) { return a + (-b); }

RationalFunction operator*(RationalFunction const& a, RationalFunction const& b) {
    if (a.isZero() || b.isZero()) return RationalFunction();
    RationalFunction r;
    // Cross-cancel identical factors before multiplying out.
    if (a.numerator_ == b.denominator_) {
        r.numerator_ = b.numerator_;
        r.denominator_ = a.denominator_;
    } else if (b.numerator_ == a.denominator_) {
        r.numerator_ = a.numerator_;
        r.denominator_ = b.denominator_;
    } else {
        r.numerator_ = a.numerator_ * b.numerator_;
        r.denominator_ = a.denominator_ * b.denominator_;
    }
    r.maybeSimplify();
    return r;
}

RationalFunction operator/(RationalFunction const& a, RationalFunction const& b) {
    if (b.isZero()) throw std::domain_error("division by zero rational function");
    return a * RationalFunction(b.denominator_, b.numerator_);
}

RationalFunction& RationalFunction::simplify() {
    normalizeConstantDenominator();
    if (denominator_.isConstant()) return *this;
    Polynomial g = gcd(numerator_, denominator_);
    if (!g.isConstant()) {
        numerator_ = *numerator_.divideExact(g);
        denominator_ = *denominator_.divideExact(g);
    }
    normalizeConstantDenominator();
    return *this;
}

RationalFunction RationalFunction::canonical() const {
    RationalFunction r = *this;
    r.simplify();
    // Common integer scaling of numerator and denominator.
    Polynomial both = r.numerator_;
    Polynomial probe = r.denominator_;
    mpz_class lcm = 1;
    for (auto const* p : {&r.numerator_, &r.denominator_}) {
        for (auto const& [m, c] : p->terms()) lcm = ::lcm(lcm, c.get_den());
    }
    mpz_class g = 0;
    for (auto const* p : {&r.numerator_, &r.denominator_}) {
        for (auto const& [m, c] : p->terms()) g = ::gcd(g, mpz_class(c.get_num() * (lcm / c.get_den())));
    }
    Rational factor(lcm, g);
    factor.canonicalize();
    if (r.denominator_.leadingCoefficient() < 0) factor = -factor;
    r.numerator_ *= factor;
    r.denominator_ *= factor;
    return r;
}

bool RationalFunction::equivalent(RationalFunction const& other) const {
    return numerator_ * other.denominator_ == other.numerator_ * denominator_;
}

Rational RationalFunction::evaluate(Instantiation const& u, ParameterTable const* names) const {
    Rational den = denominator_.evaluate(u, names);
    if (den == 0) throw std::domain_error("rational function denominator vanishes at instantiation");
    return numerator_.evaluate(u, names) / den;
}

double RationalFunction::evaluate(std::span<double const> values) const {
    return numerator_.evaluate(values) / denominator_.evaluate(values);
}

std::string RationalFunction::toString(ParameterTable const* names) const {
    RationalFunction c = canonical();
    if (c.denominator_.isOne()) return c.numerator_.toString(names);
    std::string num = "(" + c.numerator_.toString(names) + ")";
    if (c.denominator_.isConstant()) return num + "/" + c.denominator_.toString(names);
    return num + "/(" + c.denominator_.toString(names) + ")";
}

}  // namespace fscsynth
