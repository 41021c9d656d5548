#ifndef DLOGDIST_FIELD_HPP
#define DLOGDIST_FIELD_HPP

// Finite fields F_{p^n} with a fixed primitive element and a full discrete-log table.
//
// An element is stored as a packed base-p integer: the element
//     c_0 + c_1 x + ... + c_{n-1} x^{n-1}   (mod the field modulus)
// has index c_0 + c_1 p + ... + c_{n-1} p^{n-1}. Enumeration order is increasing index, so
// the prime subfield F_p occupies indices 0..p-1 and integer literals map onto it directly.

#include <cstdint>
#include <limits>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "detail/arith.hpp"

namespace dlogdist {

inline constexpr std::uint64_t kDefaultMaxQ = std::uint64_t{1} << 20;

struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t n = 1;

    /// p^n, or 0 when the value does not fit in 64 bits.
    std::uint64_t q() const {
        std::uint64_t r = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (r > std::numeric_limits<std::uint64_t>::max() / p) return 0;
            r *= p;
        }
        return r;
    }
};

struct Elem {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(Elem, Elem) = default;
};

namespace detail {

// Dense polynomials over Z/p with u64 coefficients; only used while constructing a field.
using ZpVec = std::vector<u64>;

inline void zp_trim(ZpVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline u64 zp_inv(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

inline ZpVec zp_rem(ZpVec a, const ZpVec& m, u64 p) {
    zp_trim(a);
    const std::size_t dm = m.size() - 1;
    const u64 inv_lead = zp_inv(m.back(), p);
    while (a.size() > dm) {
        const u64 c = mul_mod(a.back(), inv_lead, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + p - mul_mod(c, m[i], p)) % p;
        zp_trim(a);
    }
    return a;
}

inline ZpVec zp_mulmod(const ZpVec& a, const ZpVec& b, const ZpVec& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    ZpVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    return zp_rem(std::move(r), m, p);
}

inline ZpVec zp_powmod(ZpVec base, u64 e, const ZpVec& m, u64 p) {
    ZpVec r = zp_rem(ZpVec{1}, m, p);
    base = zp_rem(std::move(base), m, p);
    while (e) {
        if (e & 1) r = zp_mulmod(r, base, m, p);
        base = zp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline ZpVec zp_gcd(ZpVec a, ZpVec b, u64 p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        a = zp_rem(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin's test for a monic polynomial of degree n >= 1.
inline bool zp_is_irreducible(const ZpVec& f, u64 p) {
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    // frob[k] = x^{p^k} mod f
    std::vector<ZpVec> frob{zp_rem(ZpVec{0, 1}, f, p)};
    for (std::size_t k = 1; k <= n; ++k) frob.push_back(zp_powmod(frob.back(), p, f, p));
    if (frob[n] != zp_rem(ZpVec{0, 1}, f, p)) return false;
    for (u64 r : prime_divisors(n)) {
        ZpVec h = frob[n / r];
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        const ZpVec g = zp_gcd(h, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

/// Immutable description of F_{p^n}: modulus, primitive element theta and log/antilog tables.
class Field {
public:
    explicit Field(FieldSpec spec, std::uint64_t max_q = kDefaultMaxQ) : spec_(spec) {
        if (spec.n < 1) throw std::invalid_argument("extension degree n must be >= 1");
        if (!detail::is_prime(spec.p)) throw std::invalid_argument("p not prime: " + std::to_string(spec.p));
        const std::uint64_t q = spec.q();
        if (q == 0 || q > max_q)
            throw std::invalid_argument("q = " + std::to_string(spec.p) + "^" + std::to_string(spec.n) +
                                        " exceeds the field size cap " + std::to_string(max_q));
        q_ = static_cast<std::uint32_t>(q);
        for (std::uint32_t i = 0, v = 1; i < spec.n; ++i, v *= spec.p) pow_p_.push_back(v);
        choose_modulus();
        order_primes_ = detail::prime_divisors(q_ - 1);
        choose_generator();
        build_tables();
    }

    std::uint32_t p() const { return spec_.p; }
    std::uint32_t n() const { return spec_.n; }
    std::uint32_t q() const { return q_; }
    /// q - 1, the order of the multiplicative group.
    std::uint32_t group_order() const { return q_ - 1; }
    const FieldSpec& spec() const { return spec_; }
    /// Monic modulus over F_p, lowest coefficient first (length n + 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    const std::vector<std::uint64_t>& group_order_primes() const { return order_primes_; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    Elem theta() const { return theta_; }
    /// The class of x in F_p[x]/(modulus); equals the prime-field element 0 when n = 1.
    Elem generator_of_basis() const { return Elem{spec_.n > 1 ? spec_.p : 0}; }

    bool contains(Elem x) const { return x.index < q_; }

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const {
        const std::int64_t p = spec_.p;
        return Elem{static_cast<std::uint32_t>(((v % p) + p) % p)};
    }

    Elem from_coords(std::span<const std::uint32_t> c) const {
        if (c.size() != spec_.n) throw std::invalid_argument("coordinate vector must have length n");
        std::uint32_t v = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= spec_.p) throw std::invalid_argument("coordinate out of range [0, p-1]");
            v += c[i] * pow_p_[i];
        }
        return Elem{v};
    }

    std::vector<std::uint32_t> coords(Elem x) const {
        std::vector<std::uint32_t> c(spec_.n);
        std::uint32_t v = x.index;
        for (auto& ci : c) {
            ci = v % spec_.p;
            v /= spec_.p;
        }
        return c;
    }

    std::uint32_t coord(Elem x, std::uint32_t i) const { return x.index / pow_p_[i] % spec_.p; }

    Elem add(Elem x, Elem y) const {
        if (spec_.n == 1) {
            const std::uint32_t s = x.index + y.index;
            return Elem{s >= spec_.p ? s - spec_.p : s};
        }
        if (spec_.p == 2) return Elem{x.index ^ y.index};
        std::uint32_t a = x.index, b = y.index, r = 0;
        for (std::uint32_t i = 0; i < spec_.n; ++i) {
            std::uint32_t s = a % spec_.p + b % spec_.p;
            if (s >= spec_.p) s -= spec_.p;
            r += s * pow_p_[i];
            a /= spec_.p;
            b /= spec_.p;
        }
        return Elem{r};
    }

    Elem neg(Elem x) const {
        if (spec_.n == 1) return Elem{x.index == 0 ? 0 : spec_.p - x.index};
        if (spec_.p == 2) return x;
        std::uint32_t a = x.index, r = 0;
        for (std::uint32_t i = 0; i < spec_.n; ++i) {
            const std::uint32_t d = a % spec_.p;
            r += (d == 0 ? 0 : spec_.p - d) * pow_p_[i];
            a /= spec_.p;
        }
        return Elem{r};
    }

    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

    Elem mul(Elem x, Elem y) const {
        if (x.index == 0 || y.index == 0) return zero();
        if (spec_.n == 1)
            return Elem{static_cast<std::uint32_t>(std::uint64_t{x.index} * y.index % spec_.p)};
        return exp_[log_[x.index] + log_[y.index]];
    }

    Elem inv(Elem x) const {
        if (x.index == 0) throw std::domain_error("division by zero in F_q");
        const std::uint32_t l = log_[x.index];
        return exp_[l == 0 ? 0 : group_order() - l];
    }

    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

    /// Square-and-multiply. Follows the convention 0^0 = 0, so pow(0, e) = 0 for every e.
    Elem pow(Elem x, std::uint64_t e) const {
        if (x.index == 0) return zero();
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    /// Raw table lookups; the caller guarantees x != 0. See dlog.hpp for the checked interface.
    std::uint32_t log_unchecked(Elem x) const { return log_[x.index]; }
    Elem exp(std::uint64_t i) const { return exp_[i % group_order()]; }

    /// All q elements in increasing index order.
    auto elements() const {
        return std::views::iota(std::uint32_t{0}, q_) |
               std::views::transform([](std::uint32_t i) { return Elem{i}; });
    }

private:
    FieldSpec spec_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> pow_p_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> order_primes_;
    Elem theta_{};
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;  // length 2(q-1) so that log(x) + log(y) needs no reduction

    // Schoolbook multiplication against the modulus; used before the tables exist.
    Elem mul_slow(Elem x, Elem y) const {
        const std::uint64_t p = spec_.p;
        if (spec_.n == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t{x.index} * y.index % p)};
        const auto a = coords(x), b = coords(y);
        detail::ZpVec prod(2 * spec_.n - 1, 0);
        for (std::uint32_t i = 0; i < spec_.n; ++i)
            for (std::uint32_t j = 0; j < spec_.n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
        const detail::ZpVec m(modulus_.begin(), modulus_.end());
        const auto r = detail::zp_rem(std::move(prod), m, p);
        std::uint32_t v = 0;
        for (std::size_t i = 0; i < r.size(); ++i) v += static_cast<std::uint32_t>(r[i]) * pow_p_[i];
        return Elem{v};
    }

    Elem pow_slow(Elem x, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul_slow(r, x);
            x = mul_slow(x, x);
            e >>= 1;
        }
        return r;
    }

    // Smallest monic irreducible of degree n; candidates x^n + m(x) scanned by the packed index of m.
    void choose_modulus() {
        const std::uint32_t p = spec_.p, n = spec_.n;
        if (n == 1) {
            modulus_ = {0, 1};
            return;
        }
        for (std::uint32_t m = 0; m < q_; ++m) {
            detail::ZpVec f(n + 1, 0);
            for (std::uint32_t i = 0, v = m; i < n; ++i, v /= p) f[i] = v % p;
            f[n] = 1;
            if (f[0] == 0) continue;
            if (detail::zp_is_irreducible(f, p)) {
                modulus_.assign(f.begin(), f.end());
                return;
            }
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    void choose_generator() {
        const std::uint32_t order = q_ - 1;
        for (std::uint32_t v = 1; v < q_; ++v) {
            bool primitive = true;
            for (auto r : order_primes_)
                if (pow_slow(Elem{v}, order / r) == one()) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                theta_ = Elem{v};
                return;
            }
        }
        throw std::logic_error("no primitive element found");
    }

    void build_tables() {
        const std::uint32_t order = q_ - 1;
        log_.assign(q_, 0);
        exp_.assign(2 * std::size_t{order}, Elem{});
        Elem e = one();
        for (std::uint32_t i = 0; i < order; ++i) {
            exp_[i] = exp_[i + order] = e;
            log_[e.index] = i;
            e = mul_slow(e, theta_);
        }
        if (e != one()) throw std::logic_error("theta does not have order q - 1");
    }
};

inline Field build_field(FieldSpec spec, std::uint64_t max_q = kDefaultMaxQ) { return Field(spec, max_q); }

}  // namespace dlogdist

#endif
