// Command-line driver: one subcommand per experiment, CSV or JSON on stdout (or --out).
// Exit status: 0 when every asserted bound holds, 1 on a usage error, 2 when a bound fails.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "dlogdist/dlogdist.hpp"

namespace {

using namespace dlogdist;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "csv";
    std::string out;
    unsigned threads = 1;
    std::uint64_t max_q = kDefaultMaxQ;
    std::uint64_t max_cells = kDefaultMaxCells;
};

struct FieldArgs {
    std::uint32_t p = 0;
    std::uint32_t n = 1;
};

// Runs `f`, turning library argument errors into usage errors that name the flag.
template <class Fn>
auto with_flag(const std::string& flag, Fn&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    } catch (const std::domain_error& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Field make_field(const FieldArgs& fa, const Common& c) {
    return with_flag("--p/--n", [&] { return Field(FieldSpec{fa.p, fa.n}, c.max_q); });
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", c.out, "Write output to this file instead of stdout");
    sub->add_option("--threads", c.threads, "Worker threads for exhaustive sweeps")->check(CLI::Range(1u, 256u));
    sub->add_option("--max-q", c.max_q, "Largest field size accepted")->envname("DLOGDIST_MAX_Q");
    sub->add_option("--max-cells", c.max_cells, "Largest residue grid accepted")->envname("DLOGDIST_MAX_CELLS");
}

void add_field(CLI::App* sub, FieldArgs& fa) {
    sub->add_option("--p", fa.p, "Characteristic")->required();
    sub->add_option("--n", fa.n, "Extension degree")->check(CLI::PositiveNumber);
}

int emit(const Experiment& ex, const Common& c) {
    const std::string text = c.format == "json" ? to_json(ex.table).dump(2) + "\n" : to_csv(ex.table);
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) throw UsageError("--out: cannot open '" + c.out + "'");
        f << text;
    }
    return ex.assertions_pass ? 0 : 2;
}

std::vector<std::uint32_t> prime_list(std::uint64_t lo, std::uint64_t hi, std::uint64_t every) {
    if (lo > hi) throw UsageError("--pmin: must not exceed --pmax");
    if (every == 0) throw UsageError("--every: must be positive");
    return primes_in_range(lo, hi, every);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distribution of discrete logarithms of polynomial values over finite fields"};
    app.require_subcommand(1);

    Common common;
    FieldArgs fa;
    std::string polys, divisors, poly, f_text, basis, offset;
    std::uint64_t order = 2, d = 2, pmin = 3, pmax = 1000, every = 1;
    std::optional<std::uint64_t> seed;
    unsigned random_t = 0;

    auto* count = app.add_subcommand("count", "Exhaustive counts N(P, a(d), q) for every residue vector");
    add_field(count, fa);
    count->add_option("--polys", polys, "Polynomials, ';'-separated, coefficients lowest first")->required();
    count->add_option("--divisors", divisors, "Divisors d_i of q - 1, ','-separated")->required();

    auto* indep = app.add_subcommand("indep", "Multiplicative independence check with witness");
    add_field(indep, fa);
    indep->add_option("--polys", polys, "Polynomials, ';'-separated")->required();
    indep->add_option("--divisors", divisors, "Divisors of q - 1, ','-separated")->required();

    auto* weil = app.add_subcommand("weil", "Character sums against (z - 1) sqrt(q)");
    add_field(weil, fa);
    weil->add_option("--poly", poly, "Polynomial, coefficients lowest first")->required();
    weil->add_option("--order", order, "Exact character order")->check(CLI::PositiveNumber);

    auto* squares = app.add_subcommand("squares", "Quadratic residue quadrants of (f(y), y) over primes");
    squares->add_option("--f", f_text, "Integer polynomial, coefficients lowest first")->required();
    squares->add_option("--pmin", pmin, "Smallest prime");
    squares->add_option("--pmax", pmax, "Largest prime");
    squares->add_option("--every", every, "Keep every k-th prime");

    auto* primroots = app.add_subcommand("primroots", "Primitive roots among polynomial values mod p");
    primroots->add_option("--f", f_text, "Integer polynomial, coefficients lowest first")->required();
    primroots->add_option("--pmin", pmin, "Smallest prime");
    primroots->add_option("--pmax", pmax, "Largest prime");
    primroots->add_option("--every", every, "Keep every k-th prime");

    auto* subspace = app.add_subcommand("subspace", "Discrete-log classes on an F_p-affine subspace");
    add_field(subspace, fa);
    subspace->add_option("--basis", basis, "Basis elements, ';'-separated, coordinates ':'-separated");
    subspace->add_option("--offset", offset, "Affine offset element");
    subspace->add_option("--random-t", random_t, "Use a random subspace of this dimension instead of --basis");
    subspace->add_option("--seed", seed, "Seed for --random-t");
    subspace->add_option("--d", d, "Divisor of q - 1")->check(CLI::PositiveNumber);

    auto* digits = app.add_subcommand("digits", "Digit sums of d-th powers");
    add_field(digits, fa);
    digits->add_option("--basis", basis, "Digit basis, ';'-separated (default: power basis)");
    digits->add_option("--d", d, "Divisor of q - 1")->check(CLI::PositiveNumber);

    for (auto* sub : {count, indep, weil, squares, primroots, subspace, digits}) add_common(sub, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*count || *indep) {
            const Field F = make_field(fa, common);
            TupleSpec spec;
            spec.polys = with_flag("--polys", [&] { return parse_poly_list(F, polys); });
            spec.divisors = with_flag("--divisors", [&] { return parse_divisors(divisors); });
            with_flag("--polys/--divisors", [&] { spec.validate(F); });
            with_flag("--max-cells", [&] { require_cell_cap(spec, common.max_cells); });
            if (*count) return emit(count_experiment(F, spec, common.threads, common.max_cells), common);
            return emit(indep_experiment(F, spec, common.max_cells), common);
        }
        if (*weil) {
            const Field F = make_field(fa, common);
            const Poly f = with_flag("--poly", [&] { return parse_poly(F, poly); });
            if ((F.group_order()) % order != 0) throw UsageError("--order: must divide q - 1");
            return emit(weil_experiment(F, f, order), common);
        }
        if (*squares || *primroots) {
            const ZPoly f = with_flag("--f", [&] { return parse_zpoly(f_text); });
            if (f.is_zero()) throw UsageError("--f: the zero polynomial is not allowed");
            const auto primes = prime_list(pmin, pmax, every);
            if (*squares) return emit(squares_experiment(f, primes), common);
            return emit(primroots_experiment(f, primes), common);
        }
        if (*subspace) {
            const Field F = make_field(fa, common);
            AffineSpace V;
            if (random_t > 0) {
                if (!basis.empty()) throw UsageError("--random-t: cannot be combined with --basis");
                std::mt19937_64 rng(seed.value_or(1));
                V = with_flag("--random-t", [&] { return random_space(F, random_t, rng, false); });
            } else {
                if (basis.empty()) throw UsageError("--basis: required unless --random-t is given");
                V.basis = with_flag("--basis", [&] { return parse_element_list(F, basis); });
            }
            if (!offset.empty()) V.offset = with_flag("--offset", [&] { return parse_element(F, offset); });
            with_flag("--basis", [&] { validate_space(F, V); });
            with_flag("--d", [&] { require_divisor(F, d); });
            return emit(subspace_experiment(F, V, d), common);
        }
        if (*digits) {
            const Field F = make_field(fa, common);
            const DigitBasis B = basis.empty() ? DigitBasis::power_basis(F)
                                               : with_flag("--basis", [&] { return DigitBasis(F, parse_element_list(F, basis)); });
            with_flag("--d", [&] { require_divisor(F, d); });
            return emit(digits_experiment(B, d), common);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
