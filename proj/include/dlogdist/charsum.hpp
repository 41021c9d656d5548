#ifndef DLOGDIST_CHARSUM_HPP
#define DLOGDIST_CHARSUM_HPP

// Multiplicative characters eta_k(theta^a) = exp(2 pi i k a / (q - 1)), extended by eta_k(0) = 0,
// the coset indicator built from them, and exhaustive character sums of polynomial values.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include "dlog.hpp"
#include "poly.hpp"

namespace dlogdist {

using Complex = std::complex<double>;

/// Tolerance used when rounding character sums back to integers.
inline constexpr double kCharTolerance = 1e-6;

struct MultChar {
    std::uint64_t k = 0;  // index in [0, q - 2]
};

inline std::uint64_t char_order(const Field& F, MultChar chi) {
    const std::uint64_t m = F.group_order();
    return m / std::gcd(chi.k % m, m);
}

/// eta_{(q-1) ell / d}, the characters whose average detects the d-th power classes.
inline MultChar coset_char(const Field& F, std::uint64_t ell, std::uint64_t d) {
    require_divisor(F, d);
    return MultChar{F.group_order() / d * (ell % d)};
}

/// Every character of exact order r (empty when r does not divide q - 1).
inline std::vector<MultChar> characters_of_order(const Field& F, std::uint64_t r) {
    std::vector<MultChar> out;
    for (std::uint64_t k = 0; k < F.group_order(); ++k)
        if (char_order(F, MultChar{k}) == r) out.push_back(MultChar{k});
    return out;
}

/// Table of the (q-1)-th roots of unity bound to a field.
class CharacterTable {
public:
    explicit CharacterTable(const Field& F) : field_(&F), roots_(F.group_order()) {
        const double m = F.group_order();
        for (std::size_t i = 0; i < roots_.size(); ++i) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / m;
            roots_[i] = Complex(std::cos(angle), std::sin(angle));
        }
    }

    const Field& field() const { return *field_; }

    /// exp(2 pi i * e / (q - 1)).
    Complex root(std::uint64_t e) const { return roots_[e % roots_.size()]; }

    Complex eval(MultChar chi, Elem x) const {
        if (x.index == 0) return Complex(0.0, 0.0);
        const std::uint64_t m = roots_.size();
        return roots_[(chi.k % m) * field_->log_unchecked(x) % m];
    }

private:
    const Field* field_;
    std::vector<Complex> roots_;
};

inline Complex char_eval(const CharacterTable& T, MultChar chi, Elem x) { return T.eval(chi, x); }

/// (1/d) sum_{j<d} eta_{j(d)}(y theta^{-a}): approximately 1 when log(y) = a (mod d), else 0.
inline double coset_indicator(const CharacterTable& T, std::uint64_t a, std::uint64_t d, Elem y) {
    const Field& F = T.field();
    require_divisor(F, d);
    const Elem shifted = y.index == 0 ? y : F.mul(y, F.inv(F.exp(a % d)));
    Complex s(0.0, 0.0);
    for (std::uint64_t j = 0; j < d; ++j) s += T.eval(coset_char(F, j, d), shifted);
    return s.real() / static_cast<double>(d);
}

/// sum_{c in F_q} chi(f(c)), in enumeration order.
inline Complex weil_sum(const CharacterTable& T, MultChar chi, const Poly& f) {
    const Field& F = T.field();
    Complex s(0.0, 0.0);
    for (Elem c : F.elements()) s += T.eval(chi, poly_eval(F, f, c));
    return s;
}

struct WeilReport {
    Complex sum;
    std::uint64_t order = 1;
    std::uint64_t z = 0;  // distinct roots of f in a splitting field
    double bound = 0.0;   // (z - 1) sqrt(q)
    bool applicable = false;
    bool pass = true;
};

/// The estimate |sum| <= (z - 1) sqrt(q) is checked only for characters of order r > 1 and
/// polynomials of positive degree that are not a constant times an r-th power.
inline WeilReport weil_bound_check(const CharacterTable& T, MultChar chi, const Poly& f) {
    const Field& F = T.field();
    WeilReport rep;
    rep.order = char_order(F, chi);
    rep.sum = weil_sum(T, chi, f);
    if (f.degree() < 1) return rep;
    rep.z = distinct_root_count(F, f);
    rep.bound = (static_cast<double>(rep.z) - 1.0) * std::sqrt(static_cast<double>(F.q()));
    rep.applicable = rep.order > 1 && !is_power_form(F, f, rep.order).has_value();
    if (rep.applicable) rep.pass = std::abs(rep.sum) <= rep.bound + kCharTolerance;
    return rep;
}

}  // namespace dlogdist

#endif
