#include "modular_gcd.h"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace fscsynth::detail {
namespace {

using u64 = std::uint64_t;
using Exp = std::vector<std::uint32_t>;
// Sparse polynomial over Z/p, descending lexicographic exponent order.
using MP = std::map<Exp, u64, std::greater<Exp>>;
// Dense univariate polynomial over Z/p, coefficient of x^i at index i.
using UP = std::vector<u64>;

class ModP {
   public:
    explicit ModP(u64 p) : p_(p) {}

    u64 add(u64 a, u64 b) const { return a + b >= p_ ? a + b - p_ : a + b; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p_); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        for (; e; e >>= 1, a = mul(a, a)) {
            if (e & 1) r = mul(r, a);
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p_ - 2); }
    u64 prime() const { return p_; }

    // ---- univariate ----

    static void trim(UP& u) {
        while (!u.empty() && u.back() == 0) u.pop_back();
    }

    u64 eval(UP const& u, u64 x) const {
        u64 r = 0;
        for (auto it = u.rbegin(); it != u.rend(); ++it) r = add(mul(r, x), *it);
        return r;
    }

    UP monic(UP u) const {
        trim(u);
        if (u.empty()) return u;
        u64 f = inv(u.back());
        for (auto& c : u) c = mul(c, f);
        return u;
    }

    UP gcd(UP a, UP b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            a = rem(std::move(a), b);
            std::swap(a, b);
        }
        return monic(std::move(a));
    }

    UP rem(UP a, UP const& b) const {
        u64 lb = inv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            u64 f = mul(a.back(), lb);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(f, b[i]));
            a.pop_back();
            trim(a);
        }
        return a;
    }

    UP divExact(UP a, UP const& b) const {
        trim(a);
        if (a.empty()) return a;
        UP q(a.size() - b.size() + 1, 0);
        u64 lb = inv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            u64 f = mul(a.back(), lb);
            std::size_t shift = a.size() - b.size();
            q[shift] = f;
            for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(f, b[i]));
            a.pop_back();
            trim(a);
        }
        return q;
    }

    UP mulLinear(UP const& q, u64 alpha) const {  // q * (x - alpha)
        UP r(q.size() + 1, 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            r[i + 1] = add(r[i + 1], q[i]);
            r[i] = sub(r[i], mul(alpha, q[i]));
        }
        return r;
    }

    // ---- multivariate in k variables; the last one is evaluated in the recursion ----

    static std::map<Exp, UP, std::greater<Exp>> splitLast(MP const& a, std::size_t k) {
        std::map<Exp, UP, std::greater<Exp>> out;
        for (auto const& [e, c] : a) {
            Exp prefix(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k - 1));
            auto& u = out[prefix];
            if (u.size() <= e[k - 1]) u.resize(e[k - 1] + 1, 0);
            u[e[k - 1]] = c;
        }
        return out;
    }

    static MP joinLast(std::map<Exp, UP, std::greater<Exp>> const& parts) {
        MP out;
        for (auto const& [prefix, u] : parts) {
            for (std::size_t i = 0; i < u.size(); ++i) {
                if (u[i] == 0) continue;
                Exp e = prefix;
                e.push_back(static_cast<std::uint32_t>(i));
                out[e] = u[i];
            }
        }
        return out;
    }

    UP contentLast(MP const& a, std::size_t k) const {
        UP g;
        for (auto const& [prefix, u] : splitLast(a, k)) {
            g = gcd(g, u);
            if (g.size() == 1) break;
        }
        return g;
    }

    MP divideLast(MP const& a, std::size_t k, UP const& c) const {
        if (c.size() <= 1) return c.empty() ? a : scale(a, inv(c[0]));
        auto parts = splitLast(a, k);
        for (auto& [prefix, u] : parts) u = divExact(u, c);
        return joinLast(parts);
    }

    MP multiplyLast(MP const& a, std::size_t k, UP const& c) const {
        MP out;
        for (auto const& [e, v] : a) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] == 0) continue;
                Exp f = e;
                if (f.size() < k) f.resize(k, 0);
                f[k - 1] += static_cast<std::uint32_t>(i);
                u64& slot = out[f];
                slot = add(slot, mul(v, c[i]));
                if (slot == 0) out.erase(f);
            }
        }
        return out;
    }

    UP leadingLast(MP const& a, std::size_t k) const { return splitLast(a, k).begin()->second; }

    MP evalLast(MP const& a, std::size_t k, u64 alpha) const {
        MP out;
        for (auto const& [e, c] : a) {
            Exp prefix(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k - 1));
            u64& slot = out[prefix];
            slot = add(slot, mul(c, pow(alpha, e[k - 1])));
        }
        std::erase_if(out, [](auto const& t) { return t.second == 0; });
        return out;
    }

    MP scale(MP a, u64 f) const {
        for (auto& [e, c] : a) c = mul(c, f);
        return a;
    }

    MP monic(MP const& a) const { return a.empty() ? a : scale(a, inv(a.begin()->second)); }

    bool divides(MP r, MP const& b) const {
        auto const& [lb, cb] = *b.begin();
        u64 icb = inv(cb);
        while (!r.empty()) {
            auto [lr, cr] = *r.begin();
            Exp shift(lr.size());
            for (std::size_t i = 0; i < lr.size(); ++i) {
                if (lr[i] < lb[i]) return false;
                shift[i] = lr[i] - lb[i];
            }
            u64 f = mul(cr, icb);
            for (auto const& [e, c] : b) {
                Exp t = e;
                for (std::size_t i = 0; i < t.size(); ++i) t[i] += shift[i];
                u64& slot = r[t];
                slot = sub(slot, mul(f, c));
                if (slot == 0) r.erase(t);
            }
        }
        return true;
    }

    // Monic gcd of polynomials in k variables (exponent vectors of length k).
    std::optional<MP> gcd(MP const& a, MP const& b, std::size_t k) const {
        if (a.empty()) return monic(b);
        if (b.empty()) return monic(a);
        if (k == 0) return MP{{Exp{}, 1}};
        if (k == 1) {
            UP ua, ub;
            for (auto const& [e, c] : a) {
                if (ua.size() <= e[0]) ua.resize(e[0] + 1, 0);
                ua[e[0]] = c;
            }
            for (auto const& [e, c] : b) {
                if (ub.size() <= e[0]) ub.resize(e[0] + 1, 0);
                ub[e[0]] = c;
            }
            UP g = gcd(ua, ub);
            MP out;
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (g[i] != 0) out[Exp{static_cast<std::uint32_t>(i)}] = g[i];
            }
            return out;
        }

        UP ca = contentLast(a, k);
        UP cb = contentLast(b, k);
        UP c = gcd(ca, cb);
        MP pa = divideLast(a, k, ca);
        MP pb = divideLast(b, k, cb);
        UP gamma = gcd(leadingLast(pa, k), leadingLast(pb, k));
        auto degLast = [&](MP const& m) {
            std::uint32_t d = 0;
            for (auto const& [e, v] : m) d = std::max(d, e[k - 1]);
            return d;
        };
        std::size_t bound = (gamma.size() - 1) + std::min(degLast(pa), degLast(pb)) + 1;

        MP interpolant;
        UP q{1};
        std::optional<Exp> lead;
        std::size_t points = 0;
        for (u64 alpha = 1; alpha < 200000; ++alpha) {
            u64 g0 = eval(gamma, alpha);
            if (g0 == 0) continue;
            auto image = gcd(evalLast(pa, k, alpha), evalLast(pb, k, alpha), k - 1);
            if (!image) return std::nullopt;
            Exp l = image->begin()->first;
            if (std::all_of(l.begin(), l.end(), [](std::uint32_t v) { return v == 0; })) {
                return monic(multiplyLast(MP{{Exp(k, 0), 1}}, k, c));
            }
            if (lead && l > *lead) continue;
            if (!lead || l < *lead) {
                interpolant.clear();
                q = UP{1};
                points = 0;
                lead = l;
            }
            MP scaled = scale(*image, g0);
            bool stable = false;
            if (points == 0) {
                interpolant = multiplyLast(scaled, k, UP{1});
            } else {
                MP current = evalLast(interpolant, k, alpha);
                MP diff = scaled;
                for (auto const& [e, v] : current) {
                    u64& slot = diff[e];
                    slot = sub(slot, v);
                    if (slot == 0) diff.erase(e);
                }
                if (diff.empty()) {
                    stable = true;
                } else {
                    MP correction = multiplyLast(scale(diff, inv(eval(q, alpha))), k, q);
                    for (auto const& [e, v] : correction) {
                        u64& slot = interpolant[e];
                        slot = add(slot, v);
                        if (slot == 0) interpolant.erase(e);
                    }
                }
            }
            q = mulLinear(q, alpha);
            ++points;
            if (stable || points > bound) {
                MP h = divideLast(interpolant, k, contentLast(interpolant, k));
                if (divides(pa, h) && divides(pb, h)) return monic(multiplyLast(h, k, c));
                if (points > bound) lead.reset();
            }
        }
        return std::nullopt;
    }

   private:
    u64 p_;
};

bool isPrime(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    ModP f(n);
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = f.pow(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = f.mul(x, x);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> const& primes() {
    static std::vector<u64> const list = [] {
        std::vector<u64> out;
        for (u64 n = (1ULL << 61) - 1; out.size() < 24; n -= 2) {
            if (isPrime(n)) out.push_back(n);
        }
        return out;
    }();
    return list;
}

std::optional<Rational> reconstruct(mpz_class const& u, mpz_class const& m) {
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = u, s0 = 0, s1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (s1 == 0 || abs(s1) > bound) return std::nullopt;
    Rational v(r1, s1);
    v.canonicalize();
    return v;
}

}  // namespace

std::optional<Polynomial> modularGcd(Polynomial const& a, Polynomial const& b) {
    std::vector<ParamId> vars = a.parameters();
    for (ParamId p : b.parameters()) vars.push_back(p);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::size_t k = vars.size();
    auto position = [&](ParamId p) {
        return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), p) - vars.begin());
    };
    auto integral = [](Polynomial const& p) { return p * p.integerNormalizationFactor(); };
    Polynomial ia = integral(a);
    Polynomial ib = integral(b);

    auto exponents = [&](Monomial const& m) {
        Exp e(k, 0);
        for (auto [p, d] : m.factors()) e[position(p)] = d;
        return e;
    };
    auto leadOf = [&](Polynomial const& p) {
        Exp best;
        for (auto const& [m, c] : p.terms()) best = std::max(best, exponents(m));
        return best;
    };
    Exp leadA = leadOf(ia);
    Exp leadB = leadOf(ib);

    std::map<Exp, mpz_class, std::greater<Exp>> residues;
    mpz_class modulus = 0;
    std::optional<Exp> lead;
    for (u64 prime : primes()) {
        ModP field(prime);
        mpz_class mp(std::to_string(prime));
        auto reduce = [&](Polynomial const& p) {
            MP out;
            for (auto const& [m, c] : p.terms()) {
                mpz_class r = c.get_num() % mp;
                if (r < 0) r += mp;
                if (r != 0) out[exponents(m)] = std::stoull(r.get_str());
            }
            return out;
        };
        MP ra = reduce(ia);
        MP rb = reduce(ib);
        if (ra.empty() || rb.empty() || ra.begin()->first != leadA || rb.begin()->first != leadB) continue;
        auto image = field.gcd(ra, rb, k);
        if (!image) return std::nullopt;
        Exp l = image->begin()->first;
        if (lead && l > *lead) continue;
        if (!lead || l < *lead) {
            residues.clear();
            modulus = 0;
            lead = l;
        }
        if (modulus == 0) {
            for (auto const& [e, v] : *image) residues[e] = mpz_class(std::to_string(v));
            modulus = mp;
        } else {
            // x = r + modulus * t with t = (v - r) / modulus mod p.
            mpz_class inverse;
            mpz_invert(inverse.get_mpz_t(), mpz_class(modulus % mp).get_mpz_t(), mp.get_mpz_t());
            std::map<Exp, mpz_class, std::greater<Exp>> combined;
            for (auto const& [e, r] : residues) combined[e] = 0;
            for (auto const& [e, v] : *image) combined[e] = 0;
            for (auto& [e, x] : combined) {
                mpz_class r = residues.count(e) ? residues[e] : mpz_class(0);
                mpz_class v = image->count(e) ? mpz_class(std::to_string(image->at(e))) : mpz_class(0);
                mpz_class t = ((v - r) % mp + mp) % mp * inverse % mp;
                x = r + modulus * t;
            }
            residues = std::move(combined);
            modulus *= mp;
        }

        Polynomial candidate;
        bool ok = true;
        for (auto const& [e, x] : residues) {
            if (x == 0) continue;
            auto v = reconstruct(x, modulus);
            if (!v) {
                ok = false;
                break;
            }
            Monomial m;
            for (std::size_t i = 0; i < k; ++i) {
                if (e[i] > 0) m = m * Monomial::variable(vars[i], e[i]);
            }
            candidate += Polynomial(m, *v);
        }
        if (!ok || candidate.isZero()) continue;
        if (candidate.isConstant()) return Polynomial(1);
        if (a.divideExact(candidate) && b.divideExact(candidate)) return candidate;
    }
    return std::nullopt;
}

}  // namespace fscsynth::detail
