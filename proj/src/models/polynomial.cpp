#include "fscsynth/models/polynomial.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "modular_gcd.h"

namespace fscsynth {

Monomial Monomial::variable(ParamId id, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0) {
        m.factors_.emplace_back(id, exponent);
        m.degree_ = exponent;
    }
    return m;
}

std::uint32_t Monomial::exponentOf(ParamId id) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{id, 0});
    return it != factors_.end() && it->first == id ? it->second : 0;
}

Monomial Monomial::operator*(Monomial const& other) const {
    Monomial result;
    result.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            result.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            result.factors_.push_back(*b++);
        } else {
            result.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    result.degree_ = degree_ + other.degree_;
    return result;
}

bool Monomial::divides(Monomial const& other) const {
    for (auto [p, e] : factors_) {
        if (other.exponentOf(p) < e) return false;
    }
    return true;
}

Monomial Monomial::quotientOf(Monomial const& other) const {
    Monomial result;
    for (auto [p, e] : other.factors_) {
        std::uint32_t mine = exponentOf(p);
        if (e > mine) result.factors_.emplace_back(p, e - mine);
    }
    result.degree_ = other.degree_ - degree_;
    return result;
}

std::pair<Monomial, std::uint32_t> Monomial::split(ParamId id) const {
    Monomial rest;
    std::uint32_t exponent = 0;
    for (auto f : factors_) {
        if (f.first == id) {
            exponent = f.second;
        } else {
            rest.factors_.push_back(f);
            rest.degree_ += f.second;
        }
    }
    return {rest, exponent};
}

std::string Monomial::toString(ParameterTable const* names) const {
    std::string out;
    for (auto [p, e] : factors_) {
        if (!out.empty()) out += '*';
        out += names && p < names->size() ? names->name(p) : "x" + std::to_string(p);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(Monomial const& a, Monomial const& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
        if (i->first != j->first) {
            // The monomial containing the lower-id parameter is larger.
            return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (i->second != j->second) return i->second <=> j->second;
    }
    if (i == a.factors_.end() && j == b.factors_.end()) return std::strong_ordering::equal;
    // Equal degrees make this unreachable, kept for totality.
    return i == a.factors_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

Polynomial::Polynomial(Rational const& constant) : Polynomial(Monomial(), constant) {}

Polynomial::Polynomial(Monomial const& monomial, Rational const& coefficient) {
    Rational c = coefficient;
    c.canonicalize();
    if (c != 0) terms_.emplace(monomial, std::move(c));
}

bool Polynomial::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isConstant());
}

bool Polynomial::isOne() const {
    return terms_.size() == 1 && terms_.begin()->first.isConstant() && terms_.begin()->second == 1;
}

Rational Polynomial::constantTerm() const { return coefficient(Monomial()); }

Rational Polynomial::coefficient(Monomial const& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::totalDegree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

std::uint32_t Polynomial::degreeIn(ParamId id) const {
    std::uint32_t d = 0;
    for (auto const& [m, c] : terms_) d = std::max(d, m.exponentOf(id));
    return d;
}

std::vector<ParamId> Polynomial::parameters() const {
    std::vector<ParamId> result;
    for (auto const& [m, c] : terms_) {
        for (auto [p, e] : m.factors()) result.push_back(p);
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

Polynomial::Term const& Polynomial::leadingTerm() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

void Polynomial::addTerm(Monomial const& m, Rational const& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial result = *this;
    for (auto& [m, c] : result.terms_) c = -c;
    return result;
}

Polynomial& Polynomial::operator+=(Polynomial const& other) {
    for (auto const& [m, c] : other.terms_) addTerm(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(Polynomial const& other) {
    for (auto const& [m, c] : other.terms_) addTerm(m, Rational(-c));
    return *this;
}

Polynomial operator*(Polynomial const& a, Polynomial const& b) {
    Polynomial result;
    if (a.isZero() || b.isZero()) return result;
    for (auto const& [ma, ca] : a.terms_) {
        for (auto const& [mb, cb] : b.terms_) result.addTerm(ma * mb, Rational(ca * cb));
    }
    return result;
}

Polynomial& Polynomial::operator*=(Polynomial const& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(Rational const& scalar) {
    if (scalar == 0) {
        terms_.clear();
    } else {
        for (auto& [m, c] : terms_) c *= scalar;
    }
    return *this;
}

Rational Polynomial::evaluate(Instantiation const& u, ParameterTable const* names) const {
    Rational result(0);
    for (auto const& [m, c] : terms_) {
        Rational term = c;
        for (auto [p, e] : m.factors()) {
            Rational const& v = u.at(p, names);
            for (std::uint32_t i = 0; i < e; ++i) term *= v;
        }
        result += term;
    }
    return result;
}

Polynomial Polynomial::renamed(std::span<ParamId const> mapping) const {
    Polynomial result;
    for (auto const& [m, c] : terms_) {
        Monomial r;
        for (auto [p, e] : m.factors()) r = r * Monomial::variable(mapping[p], e);
        result.addTerm(r, c);
    }
    return result;
}

std::map<std::uint32_t, Polynomial> Polynomial::coefficientsIn(ParamId id) const {
    std::map<std::uint32_t, Polynomial> result;
    for (auto const& [m, c] : terms_) {
        auto [rest, e] = m.split(id);
        result[e].addTerm(rest, c);
    }
    return result;
}

std::optional<Polynomial> Polynomial::divideExact(Polynomial const& divisor) const {
    if (divisor.isZero()) throw std::domain_error("division by zero polynomial");
    Polynomial remainder = *this;
    Polynomial quotient;
    auto const& [dm, dc] = divisor.leadingTerm();
    while (!remainder.isZero()) {
        auto const& [rm, rc] = remainder.leadingTerm();
        if (!dm.divides(rm)) return std::nullopt;
        Polynomial step(dm.quotientOf(rm), Rational(rc / dc));
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

Rational Polynomial::integerNormalizationFactor() const {
    if (terms_.empty()) return 1;
    mpz_class lcm = 1;
    mpz_class g = 0;
    for (auto const& [m, c] : terms_) lcm = ::lcm(lcm, c.get_den());
    for (auto const& [m, c] : terms_) g = ::gcd(g, mpz_class(c.get_num() * (lcm / c.get_den())));
    Rational factor(lcm, g);
    factor.canonicalize();
    return factor;
}

std::string Polynomial::toString(ParameterTable const* names) const {
    if (terms_.empty()) return "0";
    // Ascending degree; within one degree the graded-lex largest (lowest ids) first.
    std::vector<Term const*> ordered;
    for (auto const& t : terms_) ordered.push_back(&t);
    std::stable_sort(ordered.begin(), ordered.end(), [](auto const* a, auto const* b) {
        if (a->first.degree() != b->first.degree()) return a->first.degree() < b->first.degree();
        return b->first < a->first;
    });

    std::ostringstream out;
    bool first = true;
    for (auto const* term : ordered) {
        Rational const& c = term->second;
        Monomial const& m = term->first;
        Rational magnitude = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (m.isConstant()) {
            out << fscsynth::toString(magnitude);
        } else if (magnitude == 1) {
            out << m.toString(names);
        } else {
            out << fscsynth::toString(magnitude) << '*' << m.toString(names);
        }
        first = false;
    }
    return out.str();
}

namespace {

Polynomial monic(Polynomial const& p) {
    if (p.isZero()) return p;
    return p * Rational(1 / p.leadingCoefficient());
}

// Univariate images modulo a prime: coefficient of x^i at index i.
constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1
using Univariate = std::vector<std::uint64_t>;

std::uint64_t mulMod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powMod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulMod(a, a)) {
        if (e & 1) r = mulMod(r, a);
    }
    return r;
}

std::uint64_t inverseMod(std::uint64_t a) { return powMod(a, kPrime - 2); }

std::optional<std::uint64_t> reduce(Rational const& c) {
    mpz_class num = c.get_num() % mpz_class(std::to_string(kPrime));
    mpz_class den = c.get_den() % mpz_class(std::to_string(kPrime));
    if (den == 0) return std::nullopt;
    if (num < 0) num += mpz_class(std::to_string(kPrime));
    return mulMod(std::stoull(num.get_str()), inverseMod(std::stoull(den.get_str())));
}

void trim(Univariate& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
}

// Image of p in x modulo the prime after substituting `point` for every other parameter.
std::optional<Univariate> imageIn(Polynomial const& p, ParamId x, std::vector<std::uint64_t> const& point) {
    Univariate u;
    for (auto const& [m, c] : p.terms()) {
        auto v = reduce(c);
        if (!v) return std::nullopt;
        std::uint32_t dx = 0;
        for (auto [q, e] : m.factors()) {
            if (q == x) {
                dx = e;
            } else {
                *v = mulMod(*v, powMod(point[q], e));
            }
        }
        if (u.size() <= dx) u.resize(dx + 1, 0);
        u[dx] = (u[dx] + *v) % kPrime;
    }
    trim(u);
    return u;
}

std::size_t univariateGcdDegree(Univariate a, Univariate b) {
    while (!b.empty()) {
        std::uint64_t inv = inverseMod(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t f = mulMod(a.back(), inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                a[i + shift] = (a[i + shift] + kPrime - mulMod(f, b[i])) % kPrime;
            }
            a.pop_back();
            trim(a);
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// Substitutes point[q] for every q with drop[q] set.
Polynomial specialize(Polynomial const& p, std::vector<char> const& drop, std::vector<Rational> const& point) {
    Polynomial result;
    for (auto const& [m, c] : p.terms()) {
        Rational v = c;
        Monomial rest;
        for (auto [q, e] : m.factors()) {
            if (drop[q]) {
                for (std::uint32_t i = 0; i < e; ++i) v *= point[q];
            } else {
                rest = rest * Monomial::variable(q, e);
            }
        }
        result += Polynomial(rest, v);
    }
    return result;
}

Polynomial contentIn(Polynomial const& p, ParamId x);

Polynomial primitivePartIn(Polynomial const& p, ParamId x) {
    Polynomial content = contentIn(p, x);
    if (content.isConstant()) return p;
    return *p.divideExact(content);
}

Polynomial pseudoRemainder(Polynomial a, Polynomial const& b, ParamId x) {
    auto bCoeffs = b.coefficientsIn(x);
    std::uint32_t db = bCoeffs.rbegin()->first;
    Polynomial const& lcb = bCoeffs.rbegin()->second;
    while (!a.isZero()) {
        auto aCoeffs = a.coefficientsIn(x);
        std::uint32_t da = aCoeffs.rbegin()->first;
        if (da < db) break;
        Polynomial shift(Monomial::variable(x, da - db), 1);
        a = lcb * a - aCoeffs.rbegin()->second * shift * b;
    }
    return a;
}

Polynomial gcdImpl(Polynomial const& a, Polynomial const& b);

Polynomial power(Polynomial const& p, std::uint32_t e) {
    Polynomial r(1);
    for (std::uint32_t i = 0; i < e; ++i) r = r * p;
    return r;
}

Polynomial leadingCoefficientIn(Polynomial const& p, ParamId x) { return p.coefficientsIn(x).rbegin()->second; }

// Subresultant remainder sequence in x; both arguments contain x.
Polynomial prsGcd(Polynomial const& a, Polynomial const& b, ParamId x) {
    Polynomial ca = contentIn(a, x);
    Polynomial cb = contentIn(b, x);
    Polynomial c = gcdImpl(ca, cb);
    Polynomial pa = ca.isConstant() ? a : *a.divideExact(ca);
    Polynomial pb = cb.isConstant() ? b : *b.divideExact(cb);
    if (pa.degreeIn(x) < pb.degreeIn(x)) std::swap(pa, pb);
    pa = pa * pa.integerNormalizationFactor();
    pb = pb * pb.integerNormalizationFactor();

    Polynomial g(1);
    Polynomial h(1);
    Polynomial result;
    while (true) {
        std::uint32_t d = pa.degreeIn(x) - pb.degreeIn(x);
        Polynomial r = pseudoRemainder(pa, pb, x);
        if (r.isZero()) {
            result = primitivePartIn(pb, x);
            break;
        }
        if (r.degreeIn(x) == 0) {
            result = Polynomial(1);
            break;
        }
        pa = std::move(pb);
        pb = *r.divideExact(g * power(h, d));
        g = leadingCoefficientIn(pa, x);
        if (d == 0) {
            // h unchanged
        } else if (d == 1) {
            h = g;
        } else {
            h = *power(g, d).divideExact(power(h, d - 1));
        }
    }
    return monic(c * result);
}

Polynomial gcdImpl(Polynomial const& a, Polynomial const& b) {
    if (a.isZero()) return monic(b);
    if (b.isZero()) return monic(a);
    if (a.isConstant() || b.isConstant()) return Polynomial(1);

    auto va = a.parameters();
    auto vb = b.parameters();
    ParamId maxId = 0;
    for (ParamId p : va) maxId = std::max(maxId, p);
    for (ParamId p : vb) maxId = std::max(maxId, p);
    std::vector<char> inA(maxId + 1, 0), inB(maxId + 1, 0);
    for (ParamId p : va) inA[p] = 1;
    for (ParamId p : vb) inB[p] = 1;

    // Small nonzero integers keep specialized coefficients short.
    std::vector<Rational> point(maxId + 1);
    std::vector<std::uint64_t> modPoint(maxId + 1);
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i <= maxId; ++i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        modPoint[i] = 2 + (state >> 3) % (kPrime - 3);
        point[i] = Rational(static_cast<long>(2 + (state >> 33) % 61));
    }

    // A variable cannot occur in the gcd when it is missing from one side, or when an
    // image in it with preserved leading degrees has a constant gcd.
    std::vector<char> absent(maxId + 1, 0);
    bool anyShared = false;
    ParamId main = 0;
    std::uint32_t mainDegree = 0;
    for (ParamId x = 0; x <= maxId; ++x) {
        if (!inA[x] && !inB[x]) continue;
        if (!inA[x] || !inB[x]) {
            absent[x] = 1;
            continue;
        }
        auto ia = imageIn(a, x, modPoint);
        auto ib = imageIn(b, x, modPoint);
        bool preserved = ia && ib && ia->size() == a.degreeIn(x) + 1u && ib->size() == b.degreeIn(x) + 1u;
        if (preserved && univariateGcdDegree(*ia, *ib) == 0) {
            absent[x] = 1;
            continue;
        }
        std::uint32_t d = std::max(a.degreeIn(x), b.degreeIn(x));
        if (!anyShared || d < mainDegree) {
            main = x;
            mainDegree = d;
        }
        anyShared = true;
    }
    if (!anyShared) return Polynomial(1);

    // The gcd g survives specialization of the absent variables, so it divides the gcd h
    // of the specializations; h dividing both inputs makes them equal.
    bool anyAbsent = std::find(absent.begin(), absent.end(), 1) != absent.end();
    if (anyAbsent) {
        Polynomial h = gcdImpl(specialize(a, absent, point), specialize(b, absent, point));
        if (h.isConstant()) return Polynomial(1);
        if (a.divideExact(h) && b.divideExact(h)) return monic(h);
    }
    if (auto g = detail::modularGcd(a, b)) return monic(*g);
    return prsGcd(a, b, main);
}

Polynomial contentIn(Polynomial const& p, ParamId x) {
    Polynomial g;
    for (auto const& [e, coeff] : p.coefficientsIn(x)) {
        g = gcdImpl(g, coeff);
        if (g.isConstant()) return Polynomial(1);
    }
    return g;
}

}  // namespace

Polynomial gcd(Polynomial const& a, Polynomial const& b) { return gcdImpl(a, b); }

}  // namespace fscsynth
