#ifndef DLOGDIST_DLOG_HPP
#define DLOGDIST_DLOG_HPP

// Discrete logarithms with respect to the field's primitive element theta.
//
// Representatives are taken in [0, q-2] rather than [1, q-1]. The two conventions only differ at
// x = 1 (0 versus q-1), and every modulus d used here divides q-1, so residues mod d agree.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "field.hpp"

namespace dlogdist {

struct LogValue {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(LogValue, LogValue) = default;
};

inline void require_divisor(const Field& F, std::uint64_t d) {
    if (d < 2 || F.group_order() % d != 0)
        throw std::invalid_argument("d = " + std::to_string(d) + " must be > 1 and divide q - 1 = " +
                                    std::to_string(F.group_order()));
}

inline LogValue discrete_log(const Field& F, Elem x) {
    if (x.index == 0) throw std::domain_error("discrete logarithm of 0 is undefined");
    if (!F.contains(x)) throw std::invalid_argument("element does not belong to the field");
    return LogValue{F.log_unchecked(x)};
}

/// log_theta(x) mod d, for d > 1 dividing q - 1.
inline std::uint32_t discrete_log_mod(const Field& F, Elem x, std::uint64_t d) {
    require_divisor(F, d);
    return static_cast<std::uint32_t>(discrete_log(F, x).value % d);
}

}  // namespace dlogdist

#endif
