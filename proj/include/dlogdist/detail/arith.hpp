#ifndef DLOGDIST_DETAIL_ARITH_HPP
#define DLOGDIST_DETAIL_ARITH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dlogdist::detail {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

// Trial division; every modulus handled here is far below 2^32.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (u64 i = 5; i * i <= n; i += 6)
        if (n % i == 0 || n % (i + 2) == 0) return false;
    return true;
}

/// Prime factorization of n as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<u64, unsigned>> factorize_u64(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 r = 2; r * r <= n; r += (r == 2 ? 1 : 2)) {
        if (n % r) continue;
        unsigned e = 0;
        while (n % r == 0) {
            n /= r;
            ++e;
        }
        out.emplace_back(r, e);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

inline std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (auto [r, e] : factorize_u64(n)) out.push_back(r);
    return out;
}

/// All positive divisors of n in increasing order.
inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (auto [r, e] : factorize_u64(n)) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= r;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline u64 ipow(u64 b, unsigned e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

/// Integer square root: largest s with s*s <= n.
inline u64 isqrt(u64 n) {
    u64 s = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

}  // namespace dlogdist::detail

#endif
