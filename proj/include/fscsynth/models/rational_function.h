#pragma once

#include <string>

#include "fscsynth/models/polynomial.h"

namespace fscsynth {

/// Quotient of polynomials. Arithmetic cancels common factors cheaply (constant
/// denominators, equal denominators); full gcd cancellation runs via simplify()
/// or automatically once either side exceeds the configured term count.
class RationalFunction {
   public:
    RationalFunction() : denominator_(1) {}
    RationalFunction(Polynomial numerator);  // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial numerator, Polynomial denominator);

    Polynomial const& numerator() const { return numerator_; }
    Polynomial const& denominator() const { return denominator_; }
    bool isZero() const { return numerator_.isZero(); }
    bool isConstant() const { return numerator_.isConstant() && denominator_.isConstant(); }
    bool isPolynomial() const { return denominator_.isConstant(); }
    std::size_t termCount() const { return numerator_.termCount() + denominator_.termCount(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(RationalFunction const& a, RationalFunction const& b);
    friend RationalFunction operator-(RationalFunction const& a, RationalFunction const& b);
    friend RationalFunction operator*(RationalFunction const& a, RationalFunction const& b);
    friend RationalFunction operator/(RationalFunction const& a, RationalFunction const& b);
    RationalFunction& operator+=(RationalFunction const& o) { return *this = *this + o; }
    RationalFunction& operator*=(RationalFunction const& o) { return *this = *this * o; }

    /// Cancels the polynomial gcd of numerator and denominator.
    RationalFunction& simplify();
    /// gcd-free, integer-coefficient, content-free form with positive leading
    /// denominator coefficient. Structurally equal iff mathematically equal.
    RationalFunction canonical() const;

    /// Exact identity test by cross multiplication.
    bool equivalent(RationalFunction const& other) const;

    Rational evaluate(Instantiation const& u, ParameterTable const* names = nullptr) const;
    double evaluate(std::span<double const> values) const;

    /// "(5 + 3*p)/10" style; parseable by parseExpression.
    std::string toString(ParameterTable const* names = nullptr) const;

    friend bool operator==(RationalFunction const& a, RationalFunction const& b) {
        return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
    }

    /// Term-count threshold above which arithmetic triggers gcd cancellation.
    static std::size_t gcdThreshold;

   private:
    void normalizeConstantDenominator();
    void maybeSimplify();

    Polynomial numerator_;
    Polynomial denominator_;
};

}  // namespace fscsynth
