#ifndef DLOGDIST_INT_POLY_HPP
#define DLOGDIST_INT_POLY_HPP

// Integer polynomials: reduction mod p, power-form detection of the reductions and
// Sylvester resultants in arbitrary precision.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace dlogdist {

using BigInt = boost::multiprecision::cpp_int;

struct ZPoly {
    std::vector<BigInt> c;  // lowest degree first, no trailing zeros

    ZPoly() = default;
    explicit ZPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { normalize(); }
    ZPoly(std::initializer_list<std::int64_t> coeffs) {
        for (auto v : coeffs) c.emplace_back(v);
        normalize();
    }

    static ZPoly from_ints(const std::vector<std::int64_t>& coeffs) {
        ZPoly f;
        for (auto v : coeffs) f.c.emplace_back(v);
        f.normalize();
        return f;
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const BigInt& lead() const { return c.back(); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    friend bool operator==(const ZPoly&, const ZPoly&) = default;
};

inline ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return ZPoly(std::move(r));
}

inline ZPoly zpoly_derivative(const ZPoly& f) {
    if (f.c.size() <= 1) return {};
    std::vector<BigInt> r(f.c.size() - 1);
    for (std::size_t i = 1; i < f.c.size(); ++i) r[i - 1] = f.c[i] * static_cast<unsigned>(i);
    return ZPoly(std::move(r));
}

struct Reduction {
    Poly poly;
    bool degree_dropped = false;  // p divides the leading coefficient
    bool vanished = false;        // every coefficient is divisible by p
};

/// Coefficientwise reduction into the prime field F_p (the field must have n = 1).
inline Reduction reduce_mod_p(const Field& Fp, const ZPoly& f) {
    if (Fp.n() != 1) throw std::invalid_argument("reduce_mod_p expects a prime field");
    const BigInt p = Fp.p();
    std::vector<Elem> v;
    v.reserve(f.c.size());
    for (const auto& a : f.c) {
        BigInt r = a % p;
        if (r < 0) r += p;
        v.push_back(Elem{r.convert_to<std::uint32_t>()});
    }
    Reduction out{Poly(std::move(v)), false, false};
    out.vanished = out.poly.is_zero();
    out.degree_dropped = !f.is_zero() && out.poly.degree() < f.degree();
    return out;
}

/// Whether f mod p equals a * g(x)^d over F_p. Throws std::domain_error when f mod p vanishes.
inline bool power_form_mod_p(const Field& Fp, const ZPoly& f, std::uint64_t d) {
    if (d < 2) throw std::invalid_argument("power_form_mod_p: d must be > 1");
    const auto red = reduce_mod_p(Fp, f);
    if (red.vanished) throw std::domain_error("f vanishes mod p");
    return is_power_form(Fp, red.poly, d).has_value();
}

/// Determinant by fraction-free (Bareiss) elimination.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return BigInt(1);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return BigInt(0);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Resultant Res(f, g) as the determinant of the Sylvester matrix.
inline BigInt resultant_z(const ZPoly& f, const ZPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
    const std::size_t m = static_cast<std::size_t>(f.degree()), n = static_cast<std::size_t>(g.degree());
    const std::size_t size = m + n;
    std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f.c[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g.c[n - i];
    return bareiss_determinant(std::move(s));
}

/// B = |Res(f, f')| for f squarefree over Q: for every prime p > max(B, |lead(f)|), f mod p is
/// squarefree and so not of the form a * g^d with d > 1.
/// Non-squarefree f would need the full factorization of f over Z and is rejected.
inline BigInt bad_prime_bound_squarefree(const ZPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("bad_prime_bound_squarefree: f must have positive degree");
    const BigInt r = resultant_z(f, zpoly_derivative(f));
    if (r == 0) throw std::invalid_argument("f is not squarefree over Q; only the squarefree case is supported");
    return abs(r);
}

}  // namespace dlogdist

#endif
