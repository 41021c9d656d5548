#ifndef DLOGDIST_APPLICATIONS_HPP
#define DLOGDIST_APPLICATIONS_HPP

// Applications of the counting machinery: square/nonsquare quadrants of (y, f(y)), runs of
// consecutive square values, primitive roots among polynomial values, discrete logs on affine
// subspaces (with the subspace polynomial L_V) and d-th powers with a prescribed digit sum.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "counting.hpp"
#include "int_poly.hpp"

namespace dlogdist {

// ---------------------------------------------------------------------------------------------
// Arithmetic functions

inline std::uint64_t euler_phi(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("euler_phi(0) is undefined");
    std::uint64_t r = m;
    for (auto [prime, e] : detail::factorize_u64(m)) r = r / prime * (prime - 1);
    return r;
}

inline int moebius(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("moebius(0) is undefined");
    int sign = 1;
    for (auto [prime, e] : detail::factorize_u64(m)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

/// Number of distinct prime factors.
inline unsigned prime_omega(std::uint64_t m) { return static_cast<unsigned>(detail::factorize_u64(m).size()); }

// ---------------------------------------------------------------------------------------------
// Squares and nonsquares

struct QuadrantCounts {
    std::uint32_t p = 0;
    // n[i][j] with index 0 for the nonzero squares and 1 for the nonsquares;
    // i classifies f(y), j classifies y.
    std::array<std::array<std::uint64_t, 2>, 2> n{};
    std::uint64_t excluded = 0;  // y = 0 or f(y) = 0, each y counted once
    bool independent = false;    // (x, f mod p) is (2,2)-multiplicatively independent
    std::uint64_t Z = 0;
    bool bounds_hold = true;

    /// n_{i,j} with i, j in {1, -1}.
    std::uint64_t at(int i, int j) const { return n[i == 1 ? 0 : 1][j == 1 ? 0 : 1]; }
};

inline QuadrantCounts square_quadrant_counts(const ZPoly& f, std::uint32_t p) {
    if (p == 2) throw std::invalid_argument("square_quadrant_counts needs an odd prime");
    const Field F(FieldSpec{p, 1});
    const auto red = reduce_mod_p(F, f);
    if (red.vanished) throw std::domain_error("f vanishes mod p");
    TupleSpec spec{{red.poly, poly_x(F)}, {2, 2}};
    const auto dist = full_distribution(F, spec);
    QuadrantCounts out;
    out.p = p;
    for (std::uint32_t i = 0; i < 2; ++i)
        for (std::uint32_t j = 0; j < 2; ++j) out.n[i][j] = dist.at({i, j}).N;
    out.excluded = dist.excluded;
    out.independent = dist.verdict.independent();
    out.Z = dist.Z;
    out.bounds_hold = dist.bounds_hold();
    return out;
}

struct ConsecutiveSquares {
    std::optional<Elem> u;
    std::uint64_t roots = 0;         // t, the distinct roots of P
    bool coprime_shifts = false;     // gcd(P(x), P(x+i)) = 1 for 0 < i < p
    bool not_square_form = false;    // P is not a * g^2
    bool hypotheses_hold = false;
    bool guaranteed = false;         // hypotheses and t p 2^p <= sqrt(q)
};

/// First u (enumeration order) with P(u), P(u+1), ..., P(u+p-1) all nonzero squares.
inline ConsecutiveSquares consecutive_square_search(const Field& F, const Poly& P) {
    if (F.p() == 2) throw std::invalid_argument("consecutive_square_search needs odd characteristic");
    if (P.is_zero()) throw std::invalid_argument("consecutive_square_search: P must be nonzero");
    const std::uint32_t p = F.p();
    ConsecutiveSquares out;
    if (P.degree() >= 1) {
        out.roots = distinct_root_count(F, P);
        out.coprime_shifts = true;
        for (std::uint32_t i = 1; i < p && out.coprime_shifts; ++i)
            out.coprime_shifts = poly_gcd(F, P, poly_shift(F, P, F.from_int(i))).degree() == 0;
        out.not_square_form = !is_power_form(F, P, 2).has_value();
        out.hypotheses_hold = out.roots > 0 && out.coprime_shifts && out.not_square_form;
        if (out.hypotheses_hold && p < 40) {
            const detail::u128 lhs = static_cast<detail::u128>(out.roots) * p * (detail::u128{1} << p);
            out.guaranteed = lhs * lhs <= F.q();
        }
    }
    for (Elem u : F.elements()) {
        bool ok = true;
        for (std::uint32_t i = 0; i < p && ok; ++i) {
            const Elem v = poly_eval(F, P, F.add(u, F.from_int(i)));
            ok = v.index != 0 && F.log_unchecked(v) % 2 == 0;
        }
        if (ok) {
            out.u = u;
            break;
        }
    }
    if (out.guaranteed && !out.u) throw std::logic_error("no run of square values although one is guaranteed");
    return out;
}

// ---------------------------------------------------------------------------------------------
// Primitive roots

struct PrimitiveRootReport {
    std::uint32_t p = 0;
    std::uint64_t g = 0;        // #{y in F_p : f(y) is a primitive root}
    double predicted = 0.0;     // p phi(p-1) / (p-1)
    double error_bound = 0.0;   // 2^s e sqrt(p)
    unsigned s = 0;             // distinct prime factors of p - 1
    int e = 0;                  // deg(f mod p)
    bool asserted = false;      // f mod p is nonconstant and not b h^r for a prime r | p-1
    bool within = false;        // |g - predicted| < error_bound, exact
    bool pass = true;           // within, or not asserted
};

inline PrimitiveRootReport primitive_root_image_count(const Field& Fp, const ZPoly& f) {
    const std::uint32_t p = Fp.p();
    const auto red = reduce_mod_p(Fp, f);
    if (red.vanished) throw std::domain_error("f vanishes mod p");
    PrimitiveRootReport rep;
    rep.p = p;
    const std::uint64_t m = p - 1;
    for (Elem y : Fp.elements()) {
        const Elem v = poly_eval(Fp, red.poly, y);
        if (v.index != 0 && std::gcd<std::uint64_t>(Fp.log_unchecked(v), m) == 1) ++rep.g;
    }
    const std::uint64_t phi = euler_phi(m);
    rep.s = prime_omega(m);
    rep.e = red.poly.degree();
    rep.predicted = static_cast<double>(p) * static_cast<double>(phi) / static_cast<double>(m);
    rep.error_bound = std::ldexp(static_cast<double>(rep.e) * std::sqrt(static_cast<double>(p)), static_cast<int>(rep.s));
    rep.asserted = rep.e >= 1;
    for (auto r : Fp.group_order_primes())
        if (rep.asserted && is_power_form(Fp, red.poly, r)) rep.asserted = false;
    // (g (p-1) - p phi)^2 < 4^s e^2 p (p-1)^2
    using detail::i128;
    using detail::u128;
    const i128 diff = static_cast<i128>(rep.g) * m - static_cast<i128>(p) * phi;
    const u128 lhs = static_cast<u128>(diff < 0 ? -diff : diff) * static_cast<u128>(diff < 0 ? -diff : diff);
    const u128 rhs = (u128{1} << (2 * rep.s)) * static_cast<u128>(rep.e * rep.e) * p * m * m;
    rep.within = lhs < rhs;
    rep.pass = !rep.asserted || rep.within;
    return rep;
}

inline PrimitiveRootReport primitive_root_image_count(const ZPoly& f, std::uint32_t p) {
    return primitive_root_image_count(Field(FieldSpec{p, 1}), f);
}

/// g_{p,f} rebuilt from counts: #{y : f(y) != 0} + sum over squarefree w > 1 dividing p - 1 of
/// mu(w) N((f), (0)(w), p).
inline std::uint64_t primitive_root_count_by_inclusion_exclusion(const Field& Fp, const ZPoly& f) {
    const auto red = reduce_mod_p(Fp, f);
    if (red.vanished) throw std::domain_error("f vanishes mod p");
    std::int64_t total = 0;
    for (Elem y : Fp.elements())
        if (poly_eval(Fp, red.poly, y).index != 0) ++total;
    const auto& primes = Fp.group_order_primes();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << primes.size()); ++mask) {
        std::uint64_t w = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask >> i & 1) w *= primes[i];
        const TupleSpec spec{{red.poly}, {w}};
        const auto rep = count_direct(Fp, spec, {0}, IndepVerdict{});
        total += moebius(w) * static_cast<std::int64_t>(rep.N);
    }
    return static_cast<std::uint64_t>(total);
}

// ---------------------------------------------------------------------------------------------
// Affine subspaces over the prime field

struct AffineSpace {
    Elem offset;
    std::vector<Elem> basis;

    std::size_t dim() const { return basis.size(); }
};

/// Rank over F_p of a list of elements viewed as coordinate vectors.
inline std::size_t rank_over_prime_field(const Field& F, const std::vector<Elem>& vecs) {
    const std::uint64_t p = F.p();
    std::vector<std::vector<std::uint32_t>> rows;
    for (Elem v : vecs) rows.push_back(F.coords(v));
    std::size_t rank = 0;
    for (std::uint32_t col = 0; col < F.n() && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const std::uint64_t inv = detail::pow_mod(rows[rank][col], p - 2, p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const std::uint64_t factor = rows[r][col] * inv % p;
            for (std::uint32_t c = 0; c < F.n(); ++c)
                rows[r][c] = static_cast<std::uint32_t>((rows[r][c] + p * p - factor * rows[rank][c]) % p);
        }
        ++rank;
    }
    return rank;
}

inline void validate_space(const Field& F, const AffineSpace& V) {
    if (V.dim() < 1 || V.dim() > F.n()) throw std::invalid_argument("affine space dimension must lie in [1, n]");
    if (rank_over_prime_field(F, V.basis) != V.dim())
        throw std::invalid_argument("basis is not linearly independent over F_p");
}

/// All p^t points offset + sum c_i b_i, ordered by the packed coefficient vector (c_1 lowest).
inline std::vector<Elem> span_elements(const Field& F, const AffineSpace& V) {
    std::vector<Elem> out{V.offset};
    for (Elem b : V.basis) {
        const std::size_t base = out.size();
        Elem step = b;
        for (std::uint32_t c = 1; c < F.p(); ++c, step = F.add(step, b))
            for (std::size_t i = 0; i < base; ++i) out.push_back(F.add(out[i], step));
    }
    return out;
}

/// The subfield F_{p^r} of F_{p^n} as a linear space, for r dividing n.
inline AffineSpace subfield_space(const Field& F, std::uint32_t r) {
    if (r < 1 || F.n() % r != 0) throw std::invalid_argument("subfield degree must divide n");
    const std::uint64_t pr = detail::ipow(F.p(), r);
    AffineSpace V{F.zero(), {}};
    for (Elem x : F.elements()) {
        if (x.index == 0 || F.pow(x, pr) != x) continue;
        auto trial = V.basis;
        trial.push_back(x);
        if (rank_over_prime_field(F, trial) == trial.size()) V.basis = std::move(trial);
        if (V.dim() == r) break;
    }
    return V;
}

/// Every t-dimensional linear subspace, one basis per subspace (reduced row echelon form).
inline std::vector<AffineSpace> enumerate_subspaces(const Field& F, std::uint32_t t) {
    const std::uint32_t n = F.n(), p = F.p();
    std::vector<AffineSpace> out;
    if (t < 1 || t > n) return out;
    std::vector<std::uint32_t> pivots(t);
    for (std::uint32_t i = 0; i < t; ++i) pivots[i] = i;
    for (;;) {
        // free positions: (row r, column c) with c > pivot[r] and c not a pivot column
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
        for (std::uint32_t r = 0; r < t; ++r)
            for (std::uint32_t c = pivots[r] + 1; c < n; ++c)
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_pos.emplace_back(r, c);
        const std::uint64_t combos = detail::ipow(p, static_cast<unsigned>(free_pos.size()));
        for (std::uint64_t m = 0; m < combos; ++m) {
            std::vector<std::vector<std::uint32_t>> rows(t, std::vector<std::uint32_t>(n, 0));
            for (std::uint32_t r = 0; r < t; ++r) rows[r][pivots[r]] = 1;
            std::uint64_t rest = m;
            for (auto [r, c] : free_pos) {
                rows[r][c] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            AffineSpace V{F.zero(), {}};
            for (const auto& row : rows) V.basis.push_back(F.from_coords(row));
            out.push_back(std::move(V));
        }
        // next pivot set in lexicographic order
        std::int64_t i = static_cast<std::int64_t>(t) - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - t + static_cast<std::uint32_t>(i)) --i;
        if (i < 0) break;
        ++pivots[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < t; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

/// Uniformly random basis of a t-dimensional space, optionally with a random offset.
template <class Rng>
AffineSpace random_space(const Field& F, std::uint32_t t, Rng& rng, bool affine = false) {
    if (t < 1 || t > F.n()) throw std::invalid_argument("dimension must lie in [1, n]");
    std::uniform_int_distribution<std::uint32_t> pick(1, F.q() - 1);
    AffineSpace V{F.zero(), {}};
    while (V.dim() < t) {
        auto trial = V.basis;
        trial.push_back(Elem{pick(rng)});
        if (rank_over_prime_field(F, trial) == trial.size()) V.basis = std::move(trial);
    }
    if (affine) V.offset = Elem{std::uniform_int_distribution<std::uint32_t>(0, F.q() - 1)(rng)};
    return V;
}

struct SubspacePolynomial {
    Poly L;  // prod over u in M(F_q) of (x - u)
    Poly M;  // prod over v in V of (x - v)
    std::uint64_t expected_degree = 0;  // p^{n-t}
    bool degree_ok = false;
    bool separable = false;
    bool composition_ok = false;  // L(M(x)) = x^q - x
    bool image_ok = false;        // L(F_q) = V
    bool fibers_ok = false;       // every v in V has exactly p^{n-t} preimages

    bool verified() const { return degree_ok && separable && composition_ok && image_ok && fibers_ok; }
};

inline Poly product_of_linear_factors(const Field& F, const std::vector<Elem>& roots) {
    Poly r = Poly::constant(F.one());
    for (Elem v : roots) r = poly_mul(F, r, Poly({F.neg(v), F.one()}));
    return r;
}

/// L_V: a separable polynomial of degree p^{n-t} mapping F_{p^n} onto the linear space V with
/// uniform fibers. Every postcondition is re-checked and reported.
inline SubspacePolynomial subspace_poly(const Field& F, const AffineSpace& V) {
    if (V.offset.index != 0) throw std::invalid_argument("subspace_poly needs a linear space (offset 0)");
    validate_space(F, V);
    SubspacePolynomial out;
    const auto points = span_elements(F, V);
    out.M = product_of_linear_factors(F, points);

    std::set<Elem> image;
    for (Elem y : F.elements()) image.insert(poly_eval(F, out.M, y));
    out.L = product_of_linear_factors(F, std::vector<Elem>(image.begin(), image.end()));

    out.expected_degree = detail::ipow(F.p(), F.n() - static_cast<std::uint32_t>(V.dim()));
    out.degree_ok = static_cast<std::uint64_t>(out.L.degree()) == out.expected_degree;
    out.separable = poly_gcd(F, out.L, derivative(F, out.L)).degree() == 0;
    const Poly frob = poly_sub(F, Poly::monomial(F.one(), F.q()), poly_x(F));
    out.composition_ok = poly_compose(F, out.L, out.M) == frob;

    std::map<Elem, std::uint64_t> fibers;
    for (Elem y : F.elements()) ++fibers[poly_eval(F, out.L, y)];
    const std::set<Elem> vset(points.begin(), points.end());
    out.image_ok = fibers.size() == vset.size() &&
                   std::all_of(fibers.begin(), fibers.end(), [&](const auto& kv) { return vset.count(kv.first) > 0; });
    out.fibers_ok = std::all_of(fibers.begin(), fibers.end(),
                                [&](const auto& kv) { return kv.second == out.expected_degree; });
    return out;
}

struct SubspaceDistribution {
    std::uint64_t d = 0;
    std::uint64_t points = 0;   // p^t
    std::uint64_t nonzero = 0;  // #(V \ {0})
    double error_bound = 0.0;   // p^{n/2}
    std::vector<std::uint64_t> cells;  // V_{a(d)}
    std::vector<bool> within;          // |V_a - p^t / d| < p^{n/2}, exact

    double error(std::uint64_t a) const {
        return static_cast<double>(cells[a]) - static_cast<double>(points) / static_cast<double>(d);
    }
    bool pass() const { return std::all_of(within.begin(), within.end(), [](bool b) { return b; }); }
};

inline SubspaceDistribution subspace_log_distribution(const Field& F, const AffineSpace& V, std::uint64_t d) {
    require_divisor(F, d);
    validate_space(F, V);
    SubspaceDistribution out;
    out.d = d;
    out.cells.assign(d, 0);
    const auto points = span_elements(F, V);
    out.points = points.size();
    for (Elem v : points) {
        if (v.index == 0) continue;
        ++out.nonzero;
        ++out.cells[F.log_unchecked(v) % d];
    }
    const std::uint64_t pn = F.q();
    out.error_bound = std::sqrt(static_cast<double>(pn));
    for (std::uint64_t a = 0; a < d; ++a) {
        // (V_a d - p^t)^2 < d^2 p^n
        const detail::i128 diff = static_cast<detail::i128>(out.cells[a] * d) - static_cast<detail::i128>(out.points);
        out.within.push_back(diff * diff < static_cast<detail::i128>(d) * d * pn);
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Digits

/// An F_p-basis of F_{p^n}; digits are the coordinates of an element in this basis.
class DigitBasis {
public:
    DigitBasis(const Field& F, std::vector<Elem> elements) : field_(&F), elements_(std::move(elements)) {
        const std::uint32_t n = F.n();
        const std::uint64_t p = F.p();
        if (elements_.size() != n) throw std::invalid_argument("a digit basis needs exactly n elements");
        // Gauss-Jordan on [B | I], where column i of B holds the coordinates of b_i.
        std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(2 * n, 0));
        for (std::uint32_t i = 0; i < n; ++i) {
            const auto c = F.coords(elements_[i]);
            for (std::uint32_t r = 0; r < n; ++r) a[r][i] = c[r];
            a[i][n + i] = 1;
        }
        for (std::uint32_t col = 0; col < n; ++col) {
            std::uint32_t piv = col;
            while (piv < n && a[piv][col] == 0) ++piv;
            if (piv == n) throw std::invalid_argument("digit basis is not linearly independent over F_p");
            std::swap(a[col], a[piv]);
            const std::uint64_t inv = detail::pow_mod(a[col][col], p - 2, p);
            for (auto& v : a[col]) v = v * inv % p;
            for (std::uint32_t r = 0; r < n; ++r) {
                if (r == col || a[r][col] == 0) continue;
                const std::uint64_t factor = a[r][col];
                for (std::uint32_t c = 0; c < 2 * n; ++c) a[r][c] = (a[r][c] + p * p - factor * a[col][c]) % p;
            }
        }
        inverse_.assign(n, std::vector<std::uint32_t>(n));
        for (std::uint32_t r = 0; r < n; ++r)
            for (std::uint32_t c = 0; c < n; ++c) inverse_[r][c] = static_cast<std::uint32_t>(a[r][n + c]);
    }

    /// {1, x, ..., x^{n-1}}.
    static DigitBasis power_basis(const Field& F) {
        std::vector<Elem> b;
        for (std::uint32_t i = 0; i < F.n(); ++i) {
            std::vector<std::uint32_t> c(F.n(), 0);
            c[i] = 1;
            b.push_back(F.from_coords(c));
        }
        return DigitBasis(F, std::move(b));
    }

    const Field& field() const { return *field_; }
    const std::vector<Elem>& elements() const { return elements_; }

    std::vector<std::uint32_t> digits(Elem x) const {
        const auto c = field_->coords(x);
        const std::uint64_t p = field_->p();
        std::vector<std::uint32_t> out(c.size(), 0);
        for (std::size_t r = 0; r < c.size(); ++r) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < c.size(); ++k) s += std::uint64_t{inverse_[r][k]} * c[k];
            out[r] = static_cast<std::uint32_t>(s % p);
        }
        return out;
    }

private:
    const Field* field_;
    std::vector<Elem> elements_;
    std::vector<std::vector<std::uint32_t>> inverse_;
};

/// Sum of the digits of x, reduced mod p.
inline std::uint32_t digit_sum(const DigitBasis& B, Elem x) {
    std::uint64_t s = 0;
    for (auto d : B.digits(x)) s += d;
    return static_cast<std::uint32_t>(s % B.field().p());
}

struct DigitPowerReport {
    std::uint32_t c = 0;
    std::uint64_t d = 0;
    std::uint64_t count = 0;       // distinct d-th powers y^d (y != 0) with digit sum c
    std::uint64_t preimages = 0;   // #{y != 0 : s(y^d) = c} = d * count
    std::uint64_t main_num = 0;    // p^{n-1}
    std::uint64_t main_den = 1;    // d
    double error = 0.0;            // count - p^{n-1} / d
    double error_bound = 0.0;      // p^{n/2}
    bool pass = false;             // |error| <= p^{n/2}, exact
};

inline std::vector<DigitPowerReport> digit_power_table(const DigitBasis& B, std::uint64_t d) {
    const Field& F = B.field();
    require_divisor(F, d);
    const std::uint32_t p = F.p();
    std::vector<std::uint64_t> counts(p, 0);
    for (Elem x : F.elements())
        if (x.index != 0 && F.log_unchecked(x) % d == 0) ++counts[digit_sum(B, x)];
    const std::uint64_t main = F.q() / p;
    std::vector<DigitPowerReport> out;
    for (std::uint32_t c = 0; c < p; ++c) {
        DigitPowerReport r;
        r.c = c;
        r.d = d;
        r.count = counts[c];
        r.preimages = counts[c] * d;
        r.main_num = main;
        r.main_den = d;
        r.error = static_cast<double>(counts[c]) - static_cast<double>(main) / static_cast<double>(d);
        r.error_bound = std::sqrt(static_cast<double>(F.q()));
        // (count d - p^{n-1})^2 <= d^2 p^n
        const detail::i128 diff = static_cast<detail::i128>(counts[c] * d) - static_cast<detail::i128>(main);
        r.pass = diff * diff <= static_cast<detail::i128>(d) * d * F.q();
        out.push_back(r);
    }
    return out;
}

inline DigitPowerReport digit_power_counts(const DigitBasis& B, std::uint64_t d, std::uint32_t c) {
    if (c >= B.field().p()) throw std::invalid_argument("digit sum class must lie in [0, p-1]");
    return digit_power_table(B, d)[c];
}

}  // namespace dlogdist

#endif
