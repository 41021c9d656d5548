// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dlogdist/dlogdist.hpp"

using namespace dlogdist;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<FieldSpec> prime_powers_up_to(std::uint64_t limit) {
    std::vector<std::pair<std::uint64_t, FieldSpec>> all;
    for (std::uint32_t p = 2; p <= limit; ++p) {
        if (!detail::is_prime(p)) continue;
        std::uint64_t q = p;
        for (std::uint32_t n = 1; q <= limit; ++n, q *= p) all.push_back({q, FieldSpec{p, n}});
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<FieldSpec> out;
    for (auto& [q, s] : all) out.push_back(s);
    return out;
}

std::vector<std::uint64_t> proper_divisors(const Field& F, std::uint64_t cap) {
    std::vector<std::uint64_t> out;
    for (auto d : detail::divisors(F.group_order()))
        if (d > 1 && d <= cap) out.push_back(d);
    return out;
}

// Fixed pool of 20 integer polynomial pairs of degree <= 3 (several dependent).
const std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> kPool{
    {{0, 1}, {1, 1}},          {{0, 1}, {0, 1}},        {{0, 1}, {0, 0, 1}},     {{1, 0, 1}, {2, 1}},
    {{1, 1, 0, 1}, {0, 1}},    {{1, 1}, {1, 3, 3, 1}},  {{1, 1, 1}, {2, 0, 1}},  {{2, 0, 0, 1}, {0, 1, 0, 1}},
    {{0, 2}, {3, 1}},          {{0, 0, 1}, {0, 0, 0, 1}}, {{1, 0, 1, 1}, {5, 1}}, {{-1, 0, 1}, {1, 1}},
    {{0, 0, 0, 1}, {0, 1, 1}}, {{1, 0, 3}, {4, 0, 0, 1}}, {{2, 1}, {3, 1}},       {{2, 3, 0, 1}, {0, 0, 1}},
    {{1, 2, 1}, {1, 1}},       {{5}, {0, 1}},           {{0, 1, 0, 1}, {0, -1, 0, 1}}, {{1, 3, 0, 2}, {4, 1, 1}},
};

struct SweepStats {
    std::uint64_t specs = 0, cells = 0, identity_failures = 0, independent_specs = 0, bound_failures = 0;
    double max_identity_error = 0.0;  // relative to q
};

SweepStats& sweep_stats() {
    static SweepStats stats;
    static bool done = false;
    if (done) return stats;
    done = true;
    for (auto s : prime_powers_up_to(343)) {
        const Field F(s);
        const CharacterTable T(F);
        const auto divs = proper_divisors(F, 36);
        std::vector<std::vector<Poly>> tuples;
        for (const auto& [a, b] : kPool) {
            const Poly A = poly_from_ints(F, a), B = poly_from_ints(F, b);
            if (!A.is_zero()) tuples.push_back({A});
            if (!B.is_zero()) tuples.push_back({B});
            if (!A.is_zero() && !B.is_zero()) tuples.push_back({A, B});
        }
        for (const auto& polys : tuples) {
            std::vector<std::vector<std::uint64_t>> dvecs;
            if (polys.size() == 1)
                for (auto d : divs) dvecs.push_back({d});
            else
                for (auto d1 : divs)
                    for (auto d2 : divs)
                        if (d1 * d2 <= 36) dvecs.push_back({d1, d2});
            for (const auto& d : dvecs) {
                const TupleSpec spec{polys, d};
                const auto dist = full_distribution(F, spec);
                ++stats.specs;
                const bool indep = dist.verdict.independent();
                if (indep) ++stats.independent_specs;
                try {
                    const CharacterExpansion ex(T, spec);
                    for (const auto& c : dist.cells) {
                        ++stats.cells;
                        const double err = std::abs(ex.count(c.a) - static_cast<double>(c.N));
                        stats.max_identity_error = std::max(stats.max_identity_error, err / F.q());
                        if (!(err < 1e-6 * F.q())) ++stats.identity_failures;
                        if (indep && !(c.within_bound && *c.within_bound)) ++stats.bound_failures;
                    }
                } catch (const std::logic_error&) {
                    stats.identity_failures += dist.cells.size();
                }
            }
        }
    }
    return stats;
}

Outcome ac1_character_identity() {
    const auto& s = sweep_stats();
    return {s.identity_failures == 0 && s.cells > 0,
            std::to_string(s.specs) + " specs, " + std::to_string(s.cells) + " cells, " +
                std::to_string(s.identity_failures) + " mismatches, max |direct - chars|/q = " +
                format_double(s.max_identity_error)};
}

Outcome ac2_count_bound() {
    const auto& s = sweep_stats();
    return {s.bound_failures == 0 && s.independent_specs > 0,
            std::to_string(s.independent_specs) + " independent specs, " + std::to_string(s.bound_failures) +
                " cells with H^2 >= Z^2 q"};
}

Outcome ac3_dependent_pair() {
    std::uint64_t primes = 0, bad = 0;
    for (std::uint32_t p = 3; p <= 100; ++p) {
        if (!detail::is_prime(p)) continue;
        ++primes;
        const Field F({p, 1});
        const auto dist = full_distribution(F, TupleSpec{{poly_x(F), poly_x(F)}, {2, 2}});
        const std::uint64_t half = (p - 1) / 2;
        if (dist.at({0, 1}).N != 0 || dist.at({1, 0}).N != 0 || dist.at({0, 0}).N != half || dist.at({1, 1}).N != half)
            ++bad;
    }
    return {bad == 0, std::to_string(primes) + " odd primes, " + std::to_string(bad) + " mismatches"};
}

// Character sums over every c are invariant under c -> c + s, so one representative per
// translation orbit of monic polynomials suffices.
std::vector<Poly> translation_representatives(const Field& F) {
    std::vector<Poly> out{poly_x(F)};
    const std::uint32_t q = F.q();
    for (std::uint32_t a0 = 0; a0 < q; ++a0) {
        if (F.p() != 2)
            out.push_back(Poly({Elem{a0}, F.zero(), F.one()}));
        else
            for (std::uint32_t a1 = 0; a1 < q; ++a1) out.push_back(Poly({Elem{a0}, Elem{a1}, F.one()}));
    }
    for (std::uint32_t a0 = 0; a0 < q; ++a0)
        for (std::uint32_t a1 = 0; a1 < q; ++a1) {
            out.push_back(Poly({Elem{a0}, Elem{a1}, F.zero(), F.one()}));
            if (F.p() == 3 && a1 != 0) out.push_back(Poly({Elem{a0}, F.zero(), Elem{a1}, F.one()}));
        }
    return out;
}

std::vector<Poly> all_monic(const Field& F) {
    std::vector<Poly> out;
    const std::uint32_t q = F.q();
    for (int deg = 1; deg <= 3; ++deg) {
        std::uint64_t total = 1;
        for (int i = 0; i < deg; ++i) total *= q;
        for (std::uint64_t m = 0; m < total; ++m) {
            std::vector<Elem> c(deg + 1);
            std::uint64_t r = m;
            for (int i = 0; i < deg; ++i, r /= q) c[i] = Elem{static_cast<std::uint32_t>(r % q)};
            c[deg] = F.one();
            out.push_back(Poly(std::move(c)));
        }
    }
    return out;
}

struct WeilStats {
    std::uint64_t checked = 0, violations = 0;
    double max_ratio = 0.0;  // |sum| / ((z - 1) sqrt(q)) over applicable cases with z > 1
};

WeilStats weil_scan(const Field& F, const CharacterTable& T, const std::vector<Poly>& polys) {
    WeilStats st;
    std::vector<MultChar> chars;
    for (std::uint64_t r : {2, 3})
        for (auto chi : characters_of_order(F, r)) chars.push_back(chi);
    if (chars.empty()) return st;
    const std::uint64_t m = F.group_order();
    const double sq = std::sqrt(static_cast<double>(F.q()));
    std::vector<std::int64_t> logs(F.q());
    for (const auto& f : polys) {
        for (Elem c : F.elements()) {
            const Elem v = poly_eval(F, f, c);
            logs[c.index] = v.index == 0 ? -1 : static_cast<std::int64_t>(F.log_unchecked(v));
        }
        const auto fz = factorize(F, f);
        std::uint64_t z = 0;
        for (const auto& fac : fz.factors) z += fac.poly.degree();
        for (auto chi : chars) {
            const std::uint64_t r = char_order(F, chi);
            bool applicable = false;
            for (const auto& fac : fz.factors) applicable = applicable || fac.multiplicity % r != 0;
            if (!applicable) continue;
            Complex sum(0.0, 0.0);
            for (auto l : logs)
                if (l >= 0) sum += T.root(chi.k * static_cast<std::uint64_t>(l) % m);
            ++st.checked;
            const double bound = (static_cast<double>(z) - 1.0) * sq;
            if (std::abs(sum) > bound + kCharTolerance) ++st.violations;
            if (z > 1) st.max_ratio = std::max(st.max_ratio, std::abs(sum) / bound);
        }
    }
    return st;
}

Outcome ac4_weil() {
    std::uint64_t checked = 0, violations = 0, fields = 0, cover_mismatch = 0;
    double max_ratio = 0.0;
    for (auto s : prime_powers_up_to(289)) {
        const Field F(s);
        const CharacterTable T(F);
        const auto st = weil_scan(F, T, translation_representatives(F));
        ++fields;
        checked += st.checked;
        violations += st.violations;
        max_ratio = std::max(max_ratio, st.max_ratio);
        if (F.q() <= 32) {
            // The representatives must see the same extremes as the full family.
            const auto full = weil_scan(F, T, all_monic(F));
            violations += full.violations;
            if (std::abs(full.max_ratio - st.max_ratio) > 1e-9) ++cover_mismatch;
        }
    }
    return {violations == 0 && cover_mismatch == 0,
            std::to_string(fields) + " fields, " + std::to_string(checked) + " (polynomial, character) pairs, " +
                std::to_string(violations) + " violations, max |sum|/bound = " + format_double(max_ratio) +
                ", orbit cover mismatches " + std::to_string(cover_mismatch)};
}

bool quadrant_cells_within(const QuadrantCounts& qc, std::uint32_t p) {
    // |n - p/4| < 4 sqrt(p)  <=>  (4n - p)^2 < 256 p
    for (int i : {1, -1})
        for (int j : {1, -1}) {
            const std::int64_t h = 4 * static_cast<std::int64_t>(qc.at(i, j)) - p;
            if (!(h * h < 256 * static_cast<std::int64_t>(p))) return false;
        }
    return true;
}

Outcome ac5_quadrant_trend() {
    const ZPoly f{1, 1, 0, 1};
    const auto primes = primes_in_range(1001, 99999, 20);
    std::uint64_t bad = 0;
    for (auto p : primes)
        if (!quadrant_cells_within(square_quadrant_counts(f, p), p)) ++bad;
    const std::uint32_t top = 99991;
    const auto qc = square_quadrant_counts(f, top);
    double ratio = 0.0;
    for (int i : {1, -1})
        for (int j : {1, -1}) ratio = std::max(ratio, std::abs(static_cast<double>(qc.at(i, j)) / top - 0.25));
    const bool top_ok = quadrant_cells_within(qc, top) && ratio < 0.02;
    return {bad == 0 && top_ok, std::to_string(primes.size()) + " primes, " + std::to_string(bad) +
                                    " outside 4 sqrt(p); at p = 99991 max |n/p - 1/4| = " + format_double(ratio)};
}

Outcome ac6_primitive_roots() {
    std::uint64_t a_bad = 0, b_bad = 0, c_bad = 0, primes = 0;
    for (std::uint32_t p = 2; p <= 10000; ++p) {
        if (!detail::is_prime(p)) continue;
        ++primes;
        const Field F({p, 1});
        if (primitive_root_image_count(F, ZPoly{0, 1}).g != euler_phi(p - 1)) ++a_bad;
        if (!primitive_root_image_count(F, ZPoly{1, 0, 1}).within) ++b_bad;
        if (p <= 500)
            for (const ZPoly& f : {ZPoly{0, 1}, ZPoly{1, 0, 1}, ZPoly{1, 1, 0, 1}})
                if (primitive_root_count_by_inclusion_exclusion(F, f) != primitive_root_image_count(F, f).g) ++c_bad;
    }
    return {a_bad + b_bad + c_bad == 0, std::to_string(primes) + " primes; (a) " + std::to_string(a_bad) + ", (b) " +
                                            std::to_string(b_bad) + ", (c) " + std::to_string(c_bad) + " failures"};
}

Outcome ac7_subspace_polynomials() {
    std::mt19937_64 rng(20240607);
    std::uint64_t checked = 0, bad = 0;
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t n = 1; n <= 4; ++n) {
            const Field F({p, n});
            std::vector<AffineSpace> spaces;
            if (p <= 3 && n <= 3) {
                for (std::uint32_t t = 1; t <= n; ++t)
                    for (auto& V : enumerate_subspaces(F, t)) spaces.push_back(std::move(V));
            } else {
                std::uniform_int_distribution<std::uint32_t> dim(1, n);
                for (int i = 0; i < 50; ++i) spaces.push_back(random_space(F, dim(rng), rng));
            }
            for (const auto& V : spaces) {
                ++checked;
                if (!subspace_poly(F, V).verified()) ++bad;
            }
        }
    return {bad == 0, std::to_string(checked) + " subspaces, " + std::to_string(bad) + " failures"};
}

Outcome ac8_subspace_distribution() {
    std::mt19937_64 rng(7331);
    std::uint64_t spaces = 0, cells = 0, bad = 0;
    for (auto s : {FieldSpec{3, 2}, FieldSpec{3, 4}, FieldSpec{5, 2}, FieldSpec{7, 2}, FieldSpec{2, 6}}) {
        const Field F(s);
        const auto divs = proper_divisors(F, 12);
        for (std::uint32_t t = s.n / 2 + 1; t <= s.n; ++t)
            for (int i = 0; i < 30; ++i) {
                const auto V = random_space(F, t, rng, true);
                ++spaces;
                for (auto d : divs) {
                    const auto dist = subspace_log_distribution(F, V, d);
                    cells += d;
                    if (!dist.pass()) ++bad;
                }
            }
    }
    std::uint64_t sharp_bad = 0;
    for (auto [s, r] : {std::pair{FieldSpec{3, 2}, 1u}, {FieldSpec{3, 4}, 2u}, {FieldSpec{5, 2}, 1u}, {FieldSpec{7, 2}, 1u}}) {
        const Field F(s);
        if (subspace_log_distribution(F, subfield_space(F, r), 2).cells[1] != 0) ++sharp_bad;
    }
    return {bad == 0 && sharp_bad == 0, std::to_string(spaces) + " affine spaces, " + std::to_string(cells) +
                                            " cells, " + std::to_string(bad) + " over p^(n/2); subfield odd-class counts nonzero: " +
                                            std::to_string(sharp_bad)};
}

Outcome ac9_consecutive_squares() {
    const Field F({3, 6});
    const auto r = consecutive_square_search(F, poly_x(F));
    if (!r.u) return {false, "no u found"};
    bool ok = r.guaranteed;
    for (std::uint32_t i = 0; i < 3; ++i) {
        const Elem v = F.add(*r.u, F.from_int(i));
        ok = ok && v.index != 0 && F.log_unchecked(v) % 2 == 0;
    }
    return {ok, "u = " + format_element(F, *r.u) + " (index " + std::to_string(r.u->index) + "), guaranteed = " +
                    (r.guaranteed ? "true" : "false")};
}

Outcome ac10_digit_sums() {
    std::mt19937_64 rng(99);
    std::uint64_t rows = 0, bad = 0;
    for (auto s : {FieldSpec{3, 2}, FieldSpec{5, 2}, FieldSpec{3, 3}, FieldSpec{7, 2}, FieldSpec{2, 6}}) {
        const Field F(s);
        const std::vector<DigitBasis> bases{DigitBasis::power_basis(F), DigitBasis(F, random_space(F, s.n, rng).basis)};
        for (const auto& B : bases)
            for (auto d : proper_divisors(F, F.group_order()))
                for (const auto& r : digit_power_table(B, d)) {
                    ++rows;
                    if (!r.pass) ++bad;
                }
    }
    return {bad == 0, std::to_string(rows) + " (basis, d, c) rows, " + std::to_string(bad) + " over p^(n/2)"};
}

Outcome ac11_extension_trend() {
    std::string detail;
    bool ok = true;
    double prev = 1e9;
    for (std::uint32_t t = 1; t <= 5; ++t) {
        const Field F({3, t});
        const auto dist = full_distribution(F, TupleSpec{{poly_x(F), poly_from_ints(F, {1, 1})}, {2, 2}});
        double dev = 0.0;
        for (const auto& c : dist.cells) dev = std::max(dev, std::abs(4.0 * c.N / F.q() - 1.0));
        const double envelope = 8.0 * std::pow(3.0, -static_cast<double>(t) / 2.0);
        ok = ok && dev <= envelope && dev < prev;
        prev = dev;
        detail += (t > 1 ? ", " : "") + std::string("t=") + std::to_string(t) + ": " + format_double(dev);
    }
    ok = ok && prev < 0.15;
    return {ok, "max |4N/3^t - 1| " + detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 character expansion equals direct count", ac1_character_identity},
        {"AC2 |H| < Z sqrt(q) for independent tuples", ac2_count_bound},
        {"AC3 dependent pair (x, x) with d = (2, 2)", ac3_dependent_pair},
        {"AC4 character sums within (z - 1) sqrt(q)", ac4_weil},
        {"AC5 quadratic residue quadrants of (x^3 + x + 1, x)", ac5_quadrant_trend},
        {"AC6 primitive roots among polynomial values", ac6_primitive_roots},
        {"AC7 subspace polynomials", ac7_subspace_polynomials},
        {"AC8 discrete logs on affine subspaces", ac8_subspace_distribution},
        {"AC9 three consecutive squares in F_729", ac9_consecutive_squares},
        {"AC10 digit sums of d-th powers", ac10_digit_sums},
        {"AC11 trend over F_3, ..., F_243", ac11_extension_trend},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
