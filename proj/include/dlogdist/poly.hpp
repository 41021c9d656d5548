#ifndef DLOGDIST_POLY_HPP
#define DLOGDIST_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "field.hpp"

namespace dlogdist {

/// Dense univariate polynomial over F_q, lowest degree first.
/// Always normalized: the last stored coefficient is nonzero, and the zero polynomial is empty.
struct Poly {
    std::vector<Elem> c;

    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : c(std::move(coeffs)) { normalize(); }

    static Poly constant(Elem a) { return Poly({a}); }
    static Poly monomial(Elem a, std::size_t k) {
        std::vector<Elem> v(k + 1);
        v[k] = a;
        return Poly(std::move(v));
    }

    /// Degree, with -1 standing in for the degree of the zero polynomial.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_constant() const { return c.size() <= 1; }
    Elem lead() const { return c.empty() ? Elem{} : c.back(); }
    Elem operator[](std::size_t i) const { return i < c.size() ? c[i] : Elem{}; }

    void normalize() {
        while (!c.empty() && c.back().index == 0) c.pop_back();
    }

    friend bool operator==(const Poly&, const Poly&) = default;
};

/// Canonical order: by degree, then coefficient indices lowest-first.
inline bool canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

inline Poly poly_x(const Field& F) { return Poly::monomial(F.one(), 1); }

/// Polynomial with prime-subfield coefficients given as integers, lowest first.
inline Poly poly_from_ints(const Field& F, const std::vector<std::int64_t>& coeffs) {
    std::vector<Elem> v;
    v.reserve(coeffs.size());
    for (auto a : coeffs) v.push_back(F.from_int(a));
    return Poly(std::move(v));
}

inline Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    std::vector<Elem> r(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a[i], b[i]);
    return Poly(std::move(r));
}

inline Poly poly_neg(const Field& F, const Poly& a) {
    std::vector<Elem> r(a.c.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.neg(a.c[i]);
    return Poly(std::move(r));
}

inline Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    std::vector<Elem> r(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return Poly(std::move(r));
}

inline Poly poly_scale(const Field& F, const Poly& a, Elem s) {
    std::vector<Elem> r(a.c.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.mul(a.c[i], s);
    return Poly(std::move(r));
}

inline Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Elem> r(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].index == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    }
    return Poly(std::move(r));
}

inline Poly poly_monic(const Field& F, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(F, a, F.inv(a.lead()));
}

/// Euclidean division; throws std::domain_error when b = 0.
inline std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Elem> rem = a.c;
    std::vector<Elem> quot(a.c.size() - b.c.size() + 1);
    const Elem inv_lead = F.inv(b.lead());
    const std::size_t db = b.c.size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Elem t = F.mul(rem[k + db], inv_lead);
        quot[k] = t;
        if (t.index == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) rem[k + i] = F.sub(rem[k + i], F.mul(t, b.c[i]));
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline Poly poly_mod(const Field& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }
inline Poly poly_div(const Field& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).first; }

/// Monic gcd; gcd(0, 0) = 0.
inline Poly poly_gcd(const Field& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        a = poly_mod(F, a, b);
        std::swap(a, b);
    }
    return poly_monic(F, a);
}

inline Poly poly_pow(const Field& F, Poly base, std::uint64_t e) {
    Poly r = Poly::constant(F.one());
    while (e) {
        if (e & 1) r = poly_mul(F, r, base);
        e >>= 1;
        if (e) base = poly_mul(F, base, base);
    }
    return r;
}

inline Poly poly_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) {
    return poly_mod(F, poly_mul(F, a, b), m);
}

inline Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& m) {
    Poly r = poly_mod(F, Poly::constant(F.one()), m);
    base = poly_mod(F, base, m);
    while (e) {
        if (e & 1) r = poly_mulmod(F, r, base, m);
        e >>= 1;
        if (e) base = poly_mulmod(F, base, base, m);
    }
    return r;
}

/// Horner evaluation.
inline Elem poly_eval(const Field& F, const Poly& f, Elem y) {
    Elem r{};
    for (std::size_t i = f.c.size(); i-- > 0;) r = F.add(F.mul(r, y), f.c[i]);
    return r;
}

/// f(g(x)).
inline Poly poly_compose(const Field& F, const Poly& f, const Poly& g) {
    Poly r;
    for (std::size_t i = f.c.size(); i-- > 0;) r = poly_add(F, poly_mul(F, r, g), Poly::constant(f.c[i]));
    return r;
}

/// f(x + s).
inline Poly poly_shift(const Field& F, const Poly& f, Elem s) {
    return poly_compose(F, f, Poly({s, F.one()}));
}

/// Formal derivative; the exponent is reduced mod p, so x^p differentiates to 0.
inline Poly derivative(const Field& F, const Poly& f) {
    if (f.c.size() <= 1) return {};
    std::vector<Elem> r(f.c.size() - 1);
    for (std::size_t i = 1; i < f.c.size(); ++i) r[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i % F.p())), f.c[i]);
    return Poly(std::move(r));
}

/// t-th derivative by iteration.
inline Poly derivative(const Field& F, Poly f, unsigned t) {
    while (t--) f = derivative(F, f);
    return f;
}

struct Factor {
    Poly poly;  // monic irreducible
    std::uint32_t multiplicity = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Factorization {
    Elem unit;
    std::vector<Factor> factors;  // canonical order, pairwise distinct
};

inline Poly expand(const Field& F, const Factorization& fz) {
    Poly r = Poly::constant(fz.unit);
    for (const auto& [g, e] : fz.factors) r = poly_mul(F, r, poly_pow(F, g, e));
    return r;
}

namespace detail {

// Inverse of the Frobenius on a polynomial whose exponents are all multiples of p.
inline Poly pth_root(const Field& F, const Poly& f) {
    const std::uint32_t p = F.p();
    const std::uint64_t root_exp = F.q() / p;  // (a^{q/p})^p = a
    std::vector<Elem> r(f.c.size() / p + 1);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].index == 0) continue;
        if (i % p != 0) throw std::logic_error("pth_root: polynomial is not a p-th power");
        r[i / p] = F.pow(f.c[i], root_exp);
    }
    return Poly(std::move(r));
}

inline bool is_one(const Poly& f) { return f.c.size() == 1 && f.c[0].index == 1; }

inline std::vector<Factor> squarefree_decomposition(const Field& F, const Poly& f) {
    std::vector<Factor> out;
    const std::uint32_t p = F.p();
    const Poly df = derivative(F, f);
    if (df.is_zero()) {
        for (auto& [h, m] : squarefree_decomposition(F, pth_root(F, f))) out.push_back({h, m * p});
        return out;
    }
    Poly c = poly_gcd(F, f, df);
    Poly w = poly_div(F, f, c);
    std::uint32_t i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(F, w, c);
        Poly fac = poly_div(F, w, y);
        if (fac.degree() > 0) out.push_back({poly_monic(F, fac), i});
        c = poly_div(F, c, y);
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0)
        for (auto& [h, m] : squarefree_decomposition(F, pth_root(F, poly_monic(F, c)))) out.push_back({h, m * p});
    return out;
}

// Splits a monic squarefree polynomial into (product of all irreducibles of degree d, d).
inline std::vector<std::pair<Poly, std::uint32_t>> distinct_degree(const Field& F, Poly h) {
    std::vector<std::pair<Poly, std::uint32_t>> out;
    const Poly x = poly_x(F);
    Poly xq = x;
    for (std::uint32_t i = 1; h.degree() >= 2 * static_cast<int>(i); ++i) {
        xq = poly_powmod(F, xq, F.q(), h);
        Poly g = poly_gcd(F, h, poly_sub(F, xq, x));
        if (g.degree() > 0) {
            h = poly_div(F, h, g);
            xq = poly_mod(F, xq, h);
            out.emplace_back(std::move(g), i);
        }
    }
    if (h.degree() > 0) out.emplace_back(h, static_cast<std::uint32_t>(h.degree()));
    return out;
}

// a^{(q^d - 1)/2} mod g for odd q, or the absolute trace sum a + a^2 + ... + a^{2^{nd-1}} for even q.
inline Poly splitting_map(const Field& F, const Poly& a, std::uint32_t d, const Poly& g) {
    if (F.p() == 2) {
        Poly t = a, sum = a;
        for (std::uint32_t i = 1; i < F.n() * d; ++i) {
            t = poly_mulmod(F, t, t, g);
            sum = poly_add(F, sum, t);
        }
        return sum;
    }
    Poly t = a, norm = a;
    for (std::uint32_t i = 1; i < d; ++i) {
        t = poly_powmod(F, t, F.q(), g);
        norm = poly_mulmod(F, norm, t, g);
    }
    return poly_powmod(F, norm, (F.q() - 1) / 2, g);
}

inline void equal_degree(const Field& F, const Poly& g, std::uint32_t d, std::mt19937_64& rng,
                         std::vector<Poly>& out) {
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g);
        return;
    }
    std::uniform_int_distribution<std::uint32_t> coeff(0, F.q() - 1);
    const Elem minus_one = F.neg(F.one());
    for (;;) {
        std::vector<Elem> v(static_cast<std::size_t>(g.degree()));
        for (auto& e : v) e = Elem{coeff(rng)};
        const Poly a(std::move(v));
        if (a.degree() < 1) continue;
        Poly b = splitting_map(F, a, d, g);
        if (F.p() != 2) b = poly_add(F, b, Poly::constant(minus_one));
        Poly h = poly_gcd(F, g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(F, h, d, rng, out);
            equal_degree(F, poly_div(F, g, h), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Complete factorization into monic irreducibles; throws std::invalid_argument for f = 0.
inline Factorization factorize(const Field& F, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factorize the zero polynomial");
    Factorization out{f.lead(), {}};
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(0x5eed0f1e1d5ULL ^ static_cast<std::uint64_t>(f.degree()));
    for (auto& [sf, m] : detail::squarefree_decomposition(F, poly_monic(F, f))) {
        for (auto& [h, d] : detail::distinct_degree(F, sf)) {
            std::vector<Poly> irr;
            detail::equal_degree(F, h, d, rng, irr);
            for (auto& g : irr) out.factors.push_back({std::move(g), m});
        }
    }
    auto& fs = out.factors;
    std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
    std::vector<Factor> merged;
    for (auto& fac : fs) {
        if (!merged.empty() && merged.back().poly == fac.poly)
            merged.back().multiplicity += fac.multiplicity;
        else
            merged.push_back(std::move(fac));
    }
    fs = std::move(merged);
    return out;
}

/// Number of distinct roots in a splitting field: the degree of the radical.
inline std::uint64_t distinct_root_count(const Field& F, const Poly& f) {
    std::uint64_t z = 0;
    for (const auto& fac : factorize(F, f).factors) z += static_cast<std::uint64_t>(fac.poly.degree());
    return z;
}

struct PowerForm {
    Elem unit;
    Poly root;  // monic

    friend bool operator==(const PowerForm&, const PowerForm&) = default;
};

/// Decides whether f = u * G^L with G monic. L = 1 always succeeds with (lead(f), monic(f)).
inline std::optional<PowerForm> is_power_form(const Field& F, const Poly& f, std::uint64_t L) {
    if (f.is_zero()) throw std::invalid_argument("is_power_form: zero polynomial");
    if (L < 1) throw std::invalid_argument("is_power_form: L must be >= 1");
    if (L == 1) return PowerForm{f.lead(), poly_monic(F, f)};
    const auto fz = factorize(F, f);
    Poly G = Poly::constant(F.one());
    for (const auto& [g, e] : fz.factors) {
        if (e % L != 0) return std::nullopt;
        G = poly_mul(F, G, poly_pow(F, g, e / L));
    }
    return PowerForm{fz.unit, std::move(G)};
}

}  // namespace dlogdist

#endif
