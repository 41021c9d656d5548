#ifndef DLOGDIST_INDEP_HPP
#define DLOGDIST_INDEP_HPP

// d-multiplicative independence of a polynomial tuple (P_1, ..., P_k).
//
// With L = lcm(d_1, ..., d_k), the tuple is dependent when some nonzero a in
// [0, d_1 - 1] x ... x [0, d_k - 1] makes P_1^{(L/d_1) a_1} ... P_k^{(L/d_k) a_k} a unit times an
// L-th power. The search walks the exponent vectors in lexicographic order and works on
// multiplicity vectors of the factorizations instead of expanding the products.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlog.hpp"
#include "poly.hpp"

namespace dlogdist {

inline constexpr std::uint64_t kDefaultMaxCells = 1'000'000;

struct TupleSpec {
    std::vector<Poly> polys;
    std::vector<std::uint64_t> divisors;

    std::size_t k() const { return polys.size(); }

    std::uint64_t lcm() const {
        std::uint64_t L = 1;
        for (auto d : divisors) L = std::lcm(L, d);
        return L;
    }

    /// d_1 * ... * d_k, saturating at UINT64_MAX.
    std::uint64_t cell_count() const {
        std::uint64_t c = 1;
        for (auto d : divisors) {
            if (d != 0 && c > UINT64_MAX / d) return UINT64_MAX;
            c *= d;
        }
        return c;
    }

    void validate(const Field& F) const {
        if (polys.empty()) throw std::invalid_argument("tuple must contain at least one polynomial");
        if (polys.size() != divisors.size())
            throw std::invalid_argument("got " + std::to_string(polys.size()) + " polynomials but " +
                                        std::to_string(divisors.size()) + " divisors");
        for (auto d : divisors) require_divisor(F, d);
        for (const auto& P : polys) {
            if (P.is_zero()) throw std::invalid_argument("tuple polynomials must be nonzero");
            for (auto c : P.c)
                if (!F.contains(c)) throw std::invalid_argument("coefficient outside the field");
        }
    }
};

inline void require_cell_cap(const TupleSpec& spec, std::uint64_t max_cells) {
    if (spec.cell_count() > max_cells)
        throw std::invalid_argument("product of divisors " + std::to_string(spec.cell_count()) +
                                    " exceeds the enumeration cap " + std::to_string(max_cells));
}

/// Residue vector of a cell index; the first coordinate is the most significant digit.
inline std::vector<std::uint32_t> residue_vector(const std::vector<std::uint64_t>& d, std::uint64_t index) {
    std::vector<std::uint32_t> a(d.size());
    for (std::size_t i = d.size(); i-- > 0;) {
        a[i] = static_cast<std::uint32_t>(index % d[i]);
        index /= d[i];
    }
    return a;
}

inline std::uint64_t cell_index(const std::vector<std::uint64_t>& d, const std::vector<std::uint32_t>& a) {
    if (a.size() != d.size()) throw std::invalid_argument("residue vector has wrong length");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (a[i] >= d[i]) throw std::invalid_argument("residue a_i must lie in [0, d_i - 1]");
        idx = idx * d[i] + a[i];
    }
    return idx;
}

struct Witness {
    std::vector<std::uint32_t> a;
    Elem u;
    Poly G;  // monic
};

struct IndepVerdict {
    std::optional<Witness> witness;

    bool independent() const { return !witness.has_value(); }
};

/// Expands P_1^{(L/d_1) a_1} ... P_k^{(L/d_k) a_k}.
inline Poly exponent_product(const Field& F, const TupleSpec& spec, const std::vector<std::uint32_t>& a) {
    const auto L = spec.lcm();
    Poly r = Poly::constant(F.one());
    for (std::size_t i = 0; i < spec.k(); ++i) r = poly_mul(F, r, poly_pow(F, spec.polys[i], L / spec.divisors[i] * a[i]));
    return r;
}

inline bool witness_holds(const Field& F, const TupleSpec& spec, const Witness& w) {
    const Poly rhs = poly_scale(F, poly_pow(F, w.G, spec.lcm()), w.u);
    return exponent_product(F, spec, w.a) == rhs;
}

inline IndepVerdict check_independence(const Field& F, const TupleSpec& spec,
                                       std::uint64_t max_cells = kDefaultMaxCells) {
    spec.validate(F);
    require_cell_cap(spec, max_cells);
    const std::size_t k = spec.k();
    const std::uint64_t L = spec.lcm();

    // Union of irreducible factors, with mult[i][j] = multiplicity of irreducible j in P_i.
    std::vector<Elem> units(k);
    std::vector<Poly> irreducibles;
    std::vector<std::vector<std::uint64_t>> mult(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto fz = factorize(F, spec.polys[i]);
        units[i] = fz.unit;
        for (const auto& [g, e] : fz.factors) {
            auto it = std::find(irreducibles.begin(), irreducibles.end(), g);
            const auto j = static_cast<std::size_t>(it - irreducibles.begin());
            if (it == irreducibles.end()) irreducibles.push_back(g);
            for (auto& row : mult) row.resize(irreducibles.size(), 0);
            mult[i][j] = e;
        }
    }
    for (auto& row : mult) row.resize(irreducibles.size(), 0);

    std::vector<std::uint64_t> weight(k);
    for (std::size_t i = 0; i < k; ++i) weight[i] = L / spec.divisors[i];

    const std::uint64_t cells = spec.cell_count();
    for (std::uint64_t idx = 1; idx < cells; ++idx) {
        const auto a = residue_vector(spec.divisors, idx);
        bool power = true;
        std::vector<std::uint64_t> total(irreducibles.size(), 0);
        for (std::size_t j = 0; j < irreducibles.size() && power; ++j) {
            for (std::size_t i = 0; i < k; ++i) total[j] += weight[i] * a[i] * mult[i][j];
            power = total[j] % L == 0;
        }
        if (!power) continue;
        Witness w{a, F.one(), Poly::constant(F.one())};
        for (std::size_t i = 0; i < k; ++i) w.u = F.mul(w.u, F.pow(units[i], weight[i] * a[i]));
        for (std::size_t j = 0; j < irreducibles.size(); ++j)
            w.G = poly_mul(F, w.G, poly_pow(F, irreducibles[j], total[j] / L));
        if (!witness_holds(F, spec, w)) throw std::logic_error("independence witness failed re-expansion");
        return IndepVerdict{std::move(w)};
    }
    return IndepVerdict{};
}

struct DependenceReport {
    std::uint64_t checked = 0;  // number of y avoiding every zero set
    bool all_hold = true;
    std::uint32_t v = 0;  // log_theta(u)
};

/// For each y with P_i(y) != 0 for all i, checks sum_i (L a_i / d_i) log P_i(y) = log u (mod L).
inline DependenceReport dependence_identity(const Field& F, const TupleSpec& spec, const Witness& w) {
    spec.validate(F);
    if (w.a.size() != spec.k()) throw std::invalid_argument("witness has wrong length");
    cell_index(spec.divisors, w.a);
    if (std::all_of(w.a.begin(), w.a.end(), [](auto x) { return x == 0; }))
        throw std::invalid_argument("witness exponent vector must be nonzero");
    if (w.u.index == 0 || !witness_holds(F, spec, w)) throw std::invalid_argument("invalid witness");

    const std::uint64_t L = spec.lcm();
    DependenceReport rep;
    rep.v = discrete_log(F, w.u).value;
    for (Elem y : F.elements()) {
        std::uint64_t s = 0;
        bool root = false;
        for (std::size_t i = 0; i < spec.k() && !root; ++i) {
            const Elem val = poly_eval(F, spec.polys[i], y);
            if (val.index == 0) {
                root = true;
                break;
            }
            s += (L / spec.divisors[i]) * w.a[i] % L * (F.log_unchecked(val) % L);
            s %= L;
        }
        if (root) continue;
        ++rep.checked;
        if (s != rep.v % L) rep.all_hold = false;
    }
    return rep;
}

}  // namespace dlogdist

#endif
