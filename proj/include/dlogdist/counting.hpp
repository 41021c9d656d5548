#ifndef DLOGDIST_COUNTING_HPP
#define DLOGDIST_COUNTING_HPP

// Counting N(P, a(d), q): the number of y in F_q with every P_i(y) != 0 and
// log_theta P_i(y) = a_i (mod d_i) for all i, against the main term q / (d_1 ... d_k).
//
// Two independent routes are provided. The direct route sweeps F_q once and bins every y into
// its residue cell. The character route rebuilds each count from the expansion
//     (d_1 ... d_k) N = sum_{c} omega_c S_c,
//     S_c = sum_y prod_j eta_{c_j(d_j)}(P_j(y)),   omega_c = prod_j eta_{c_j(d_j)}(theta^{-a_j}),
// where every character vanishes at 0 (including the trivial one).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "charsum.hpp"
#include "indep.hpp"

namespace dlogdist {

struct CountReport {
    std::vector<std::uint32_t> a;
    std::uint64_t N = 0;
    std::uint64_t main_num = 0;  // q
    std::uint64_t main_den = 1;  // d_1 ... d_k
    std::int64_t H_num = 0;      // N * main_den - q, so H = H_num / main_den
    std::uint64_t Z = 0;
    double bound = 0.0;  // Z sqrt(q)
    /// |H| < Z sqrt(q), evaluated exactly; only set when the tuple is independent.
    std::optional<bool> within_bound;
    std::uint64_t excluded = 0;  // y with some P_i(y) = 0

    double main_term() const { return static_cast<double>(main_num) / static_cast<double>(main_den); }
    double H() const { return static_cast<double>(H_num) / static_cast<double>(main_den); }
};

/// H^2 < Z^2 q in integers: (N D - q)^2 < Z^2 q D^2.
inline bool strictly_within_bound(std::uint64_t N, std::uint64_t q, std::uint64_t D, std::uint64_t Z) {
    using detail::i128;
    using detail::u128;
    const i128 h = static_cast<i128>(N) * D - static_cast<i128>(q);
    const u128 lhs = static_cast<u128>(h < 0 ? -h : h) * static_cast<u128>(h < 0 ? -h : h);
    const u128 rhs = static_cast<u128>(Z) * Z * q * D * D;
    return lhs < rhs;
}

/// Z(P): distinct roots of P_1 ... P_k in a splitting field.
inline std::uint64_t tuple_root_count(const Field& F, const TupleSpec& spec) {
    Poly prod = Poly::constant(F.one());
    for (const auto& P : spec.polys) prod = poly_mul(F, prod, P);
    return distinct_root_count(F, prod);
}

namespace detail {

struct Tally {
    std::vector<std::uint64_t> cells;
    std::uint64_t excluded = 0;
};

inline void tally_range(const Field& F, const TupleSpec& spec, std::uint32_t lo, std::uint32_t hi, Tally& t) {
    const std::size_t k = spec.k();
    for (std::uint32_t yi = lo; yi < hi; ++yi) {
        const Elem y{yi};
        std::uint64_t idx = 0;
        bool root = false;
        for (std::size_t i = 0; i < k; ++i) {
            const Elem v = poly_eval(F, spec.polys[i], y);
            if (v.index == 0) {
                root = true;
                break;
            }
            idx = idx * spec.divisors[i] + F.log_unchecked(v) % spec.divisors[i];
        }
        if (root)
            ++t.excluded;
        else
            ++t.cells[idx];
    }
}

// One pass over F_q; workers own disjoint y-ranges and their tallies are summed afterwards.
inline Tally sweep(const Field& F, const TupleSpec& spec, unsigned threads) {
    const std::uint64_t cells = spec.cell_count();
    threads = std::max(1u, std::min<unsigned>(threads, F.q()));
    std::vector<Tally> parts(threads, Tally{std::vector<std::uint64_t>(cells, 0), 0});
    if (threads == 1) {
        tally_range(F, spec, 0, F.q(), parts[0]);
        return parts[0];
    }
    std::vector<std::thread> pool;
    const std::uint32_t chunk = (F.q() + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint32_t lo = std::min<std::uint32_t>(F.q(), w * chunk);
        const std::uint32_t hi = std::min<std::uint32_t>(F.q(), lo + chunk);
        pool.emplace_back([&, w, lo, hi] { tally_range(F, spec, lo, hi, parts[w]); });
    }
    for (auto& th : pool) th.join();
    Tally total{std::vector<std::uint64_t>(cells, 0), 0};
    for (const auto& part : parts) {
        total.excluded += part.excluded;
        for (std::size_t i = 0; i < cells; ++i) total.cells[i] += part.cells[i];
    }
    return total;
}

inline CountReport make_report(const Field& F, const TupleSpec& spec, std::vector<std::uint32_t> a, std::uint64_t N,
                               std::uint64_t Z, std::uint64_t excluded, bool independent) {
    CountReport r;
    r.a = std::move(a);
    r.N = N;
    r.main_num = F.q();
    r.main_den = spec.cell_count();
    r.H_num = static_cast<std::int64_t>(N * r.main_den) - static_cast<std::int64_t>(F.q());
    r.Z = Z;
    r.bound = static_cast<double>(Z) * std::sqrt(static_cast<double>(F.q()));
    r.excluded = excluded;
    if (independent) r.within_bound = strictly_within_bound(N, F.q(), r.main_den, Z);
    return r;
}

}  // namespace detail

struct Distribution {
    TupleSpec spec;
    IndepVerdict verdict;
    std::uint64_t Z = 0;
    std::uint64_t excluded = 0;
    std::vector<CountReport> cells;  // lexicographic order of a

    const CountReport& at(const std::vector<std::uint32_t>& a) const { return cells[cell_index(spec.divisors, a)]; }

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (const auto& c : cells) s += c.N;
        return s;
    }

    /// False only when the tuple is independent and some cell violates |H| < Z sqrt(q).
    bool bounds_hold() const {
        return std::all_of(cells.begin(), cells.end(), [](const CountReport& c) { return c.within_bound.value_or(true); });
    }
};

/// Every cell of Lambda(d) from a single sweep; dependent tuples are accepted.
inline Distribution full_distribution(const Field& F, const TupleSpec& spec, unsigned threads = 1,
                                      std::uint64_t max_cells = kDefaultMaxCells) {
    spec.validate(F);
    require_cell_cap(spec, max_cells);
    Distribution dist{spec, check_independence(F, spec, max_cells), tuple_root_count(F, spec), 0, {}};
    const auto tally = detail::sweep(F, spec, threads);
    dist.excluded = tally.excluded;
    const bool indep = dist.verdict.independent();
    for (std::uint64_t idx = 0; idx < tally.cells.size(); ++idx)
        dist.cells.push_back(detail::make_report(F, spec, residue_vector(spec.divisors, idx), tally.cells[idx], dist.Z,
                                                 tally.excluded, indep));
    return dist;
}

inline CountReport count_direct(const Field& F, const TupleSpec& spec, const std::vector<std::uint32_t>& a,
                                const IndepVerdict& verdict) {
    spec.validate(F);
    cell_index(spec.divisors, a);
    std::uint64_t N = 0, excluded = 0;
    for (Elem y : F.elements()) {
        bool match = true, root = false;
        for (std::size_t i = 0; i < spec.k(); ++i) {
            const Elem v = poly_eval(F, spec.polys[i], y);
            if (v.index == 0) {
                root = true;
                break;
            }
            if (F.log_unchecked(v) % spec.divisors[i] != a[i]) match = false;
        }
        if (root)
            ++excluded;
        else if (match)
            ++N;
    }
    return detail::make_report(F, spec, a, N, tuple_root_count(F, spec), excluded, verdict.independent());
}

inline CountReport count_direct(const Field& F, const TupleSpec& spec, const std::vector<std::uint32_t>& a) {
    spec.validate(F);
    cell_index(spec.divisors, a);
    return count_direct(F, spec, a, check_independence(F, spec));
}

/// Precomputed character sums S_c for every c in Lambda(d); evaluates the expansion for any a.
class CharacterExpansion {
public:
    CharacterExpansion(const CharacterTable& T, const TupleSpec& spec) : table_(&T), spec_(spec) {
        const Field& F = T.field();
        spec.validate(F);
        const std::uint64_t m = F.group_order();
        const std::uint64_t cells = spec.cell_count();
        const std::size_t k = spec.k();

        // Logs of P_j(y) for the y outside every zero set; y in a zero set contributes 0 to each S_c.
        std::vector<std::vector<std::uint64_t>> logs;
        for (Elem y : F.elements()) {
            std::vector<std::uint64_t> row(k);
            bool root = false;
            for (std::size_t j = 0; j < k && !root; ++j) {
                const Elem v = poly_eval(F, spec.polys[j], y);
                root = v.index == 0;
                if (!root) row[j] = F.log_unchecked(v);
            }
            if (!root) logs.push_back(std::move(row));
        }

        sums_.assign(cells, Complex(0.0, 0.0));
        for (std::uint64_t idx = 0; idx < cells; ++idx) {
            const auto c = residue_vector(spec.divisors, idx);
            Complex s(0.0, 0.0);
            for (const auto& row : logs) {
                std::uint64_t e = 0;
                for (std::size_t j = 0; j < k; ++j) e = (e + (m / spec.divisors[j]) * c[j] % m * row[j]) % m;
                s += T.root(e);
            }
            sums_[idx] = s;
        }
    }

    /// S_c.
    Complex character_sum(const std::vector<std::uint32_t>& c) const { return sums_[cell_index(spec_.divisors, c)]; }

    /// sum_c omega_c S_c, which equals (d_1 ... d_k) N.
    Complex weighted_total(const std::vector<std::uint32_t>& a) const {
        const Field& F = table_->field();
        const std::uint64_t m = F.group_order();
        cell_index(spec_.divisors, a);
        Complex total(0.0, 0.0);
        for (std::uint64_t idx = 0; idx < sums_.size(); ++idx) {
            const auto c = residue_vector(spec_.divisors, idx);
            std::uint64_t e = 0;  // exponent of omega_c, as a multiple of 2 pi i / (q - 1)
            for (std::size_t j = 0; j < spec_.k(); ++j) e = (e + (m / spec_.divisors[j]) * c[j] % m * a[j]) % m;
            total += table_->root((m - e) % m) * sums_[idx];
        }
        return total;
    }

    double count(const std::vector<std::uint32_t>& a) const {
        const Complex total = weighted_total(a);
        const double q = table_->field().q();
        if (std::abs(total.imag()) > kCharTolerance * q * static_cast<double>(spec_.cell_count()))
            throw std::logic_error("character expansion has a non-vanishing imaginary part");
        return total.real() / static_cast<double>(spec_.cell_count());
    }

private:
    const CharacterTable* table_;
    TupleSpec spec_;
    std::vector<Complex> sums_;
};

inline double count_via_chars(const CharacterTable& T, const TupleSpec& spec, const std::vector<std::uint32_t>& a) {
    return CharacterExpansion(T, spec).count(a);
}

struct PositivityReport {
    bool condition_holds = false;  // Z <= sqrt(q) / (d_1 ... d_k)
    std::uint64_t min_cell = 0;
};

/// Throws std::invalid_argument for dependent tuples, and std::logic_error if the sufficient
/// condition holds while some cell is empty.
inline PositivityReport positivity_check(const Field& F, const TupleSpec& spec, unsigned threads = 1) {
    const auto dist = full_distribution(F, spec, threads);
    if (!dist.verdict.independent()) throw std::invalid_argument("positivity check requires an independent tuple");
    PositivityReport rep;
    const detail::u128 zd = static_cast<detail::u128>(dist.Z) * spec.cell_count();
    rep.condition_holds = zd * zd <= F.q();
    rep.min_cell = UINT64_MAX;
    for (const auto& c : dist.cells) rep.min_cell = std::min(rep.min_cell, c.N);
    if (rep.condition_holds && rep.min_cell == 0)
        throw std::logic_error("empty cell although Z <= sqrt(q) / (d_1 ... d_k)");
    return rep;
}

}  // namespace dlogdist

#endif
