#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fscsynth/models/parameters.h"
#include "fscsynth/models/rational.h"

namespace fscsynth {

/// Power product of parameters, stored as (parameter, exponent) pairs sorted by
/// parameter id with strictly positive exponents.
class Monomial {
   public:
    using Factor = std::pair<ParamId, std::uint32_t>;

    Monomial() = default;
    static Monomial variable(ParamId id, std::uint32_t exponent = 1);

    std::span<Factor const> factors() const { return factors_; }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t exponentOf(ParamId id) const;
    bool isConstant() const { return factors_.empty(); }

    Monomial operator*(Monomial const& other) const;
    bool divides(Monomial const& other) const;
    /// Requires divides(other) == true; returns other / *this.
    Monomial quotientOf(Monomial const& other) const;
    /// Removes `id` from the product, returning its former exponent.
    std::pair<Monomial, std::uint32_t> split(ParamId id) const;

    template <typename V>
    V evaluate(std::span<V const> values) const {
        V result(1);
        for (auto [p, e] : factors_) {
            for (std::uint32_t i = 0; i < e; ++i) result *= values[p];
        }
        return result;
    }

    std::string toString(ParameterTable const* names) const;

    friend bool operator==(Monomial const& a, Monomial const& b) { return a.factors_ == b.factors_; }
    /// Graded lexicographic order with lower parameter ids ranking higher.
    friend std::strong_ordering operator<=>(Monomial const& a, Monomial const& b);

   private:
    std::vector<Factor> factors_;
    std::uint32_t degree_ = 0;
};

/// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
   public:
    using Terms = std::map<Monomial, Rational>;
    using Term = Terms::value_type;

    Polynomial() = default;
    Polynomial(Rational const& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(Monomial const& monomial, Rational const& coefficient);

    static Polynomial variable(ParamId id) { return Polynomial(Monomial::variable(id), 1); }

    Terms const& terms() const { return terms_; }
    std::size_t termCount() const { return terms_.size(); }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    bool isOne() const;
    /// Constant coefficient (zero when absent).
    Rational constantTerm() const;
    Rational coefficient(Monomial const& m) const;

    std::uint32_t totalDegree() const;
    std::uint32_t degreeIn(ParamId id) const;
    bool contains(ParamId id) const { return degreeIn(id) > 0; }
    std::vector<ParamId> parameters() const;
    bool isAffine() const { return totalDegree() <= 1; }

    /// Largest term in graded lexicographic order. Requires !isZero().
    Term const& leadingTerm() const;
    Rational const& leadingCoefficient() const { return leadingTerm().second; }

    Polynomial operator-() const;
    Polynomial& operator+=(Polynomial const& other);
    Polynomial& operator-=(Polynomial const& other);
    Polynomial& operator*=(Polynomial const& other);
    Polynomial& operator*=(Rational const& scalar);
    friend Polynomial operator+(Polynomial a, Polynomial const& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, Polynomial const& b) { return a -= b; }
    friend Polynomial operator*(Polynomial const& a, Polynomial const& b);
    friend Polynomial operator*(Polynomial a, Rational const& s) { return a *= s; }
    friend bool operator==(Polynomial const& a, Polynomial const& b) { return a.terms_ == b.terms_; }

    /// Exact evaluation; throws MissingParameterError for unassigned parameters.
    Rational evaluate(Instantiation const& u, ParameterTable const* names = nullptr) const;

    /// Unchecked evaluation for dense valuations.
    template <typename V>
    V evaluate(std::span<V const> values) const {
        V result(0);
        for (auto const& [m, c] : terms_) result += coefficientAs<V>(c) * m.evaluate(values);
        return result;
    }

    /// Renames parameter i to mapping[i].
    Polynomial renamed(std::span<ParamId const> mapping) const;

    /// Coefficients when viewed as a univariate polynomial in `id`.
    std::map<std::uint32_t, Polynomial> coefficientsIn(ParamId id) const;

    /// Quotient if `divisor` divides this polynomial exactly.
    std::optional<Polynomial> divideExact(Polynomial const& divisor) const;

    /// Scales to integer coefficients with gcd 1; returns the applied factor.
    Rational integerNormalizationFactor() const;

    /// Terms ordered by ascending degree, earlier parameters first within a degree.
    std::string toString(ParameterTable const* names = nullptr) const;

   private:
    template <typename V>
    static V coefficientAs(Rational const& c) {
        if constexpr (std::is_same_v<V, double>) {
            return c.get_d();
        } else {
            return V(c);
        }
    }

    void addTerm(Monomial const& m, Rational const& c);

    Terms terms_;
};

/// Greatest common divisor over Q[V], normalized to leading coefficient 1.
Polynomial gcd(Polynomial const& a, Polynomial const& b);

}  // namespace fscsynth
