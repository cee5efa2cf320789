#ifndef DETFSING_KERNEL_MONOMIAL_HPP
#define DETFSING_KERNEL_MONOMIAL_HPP

// Helpers on packed monomials (slot 0 = total degree, then exponents).

#include <cstdint>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "detfsing/kernel/ring.hpp"

namespace detfsing::mono {

inline constexpr unsigned kMaxExp = std::numeric_limits<Exp>::max();

[[noreturn]] inline void overflow() { throw std::overflow_error("monomial exponent overflow"); }

inline bool equal(const Exp* a, const Exp* b, std::size_t stride) noexcept {
    return std::memcmp(a, b, stride * sizeof(Exp)) == 0;
}

inline void multiply(Exp* out, const Exp* a, const Exp* b, std::size_t stride) {
    if (unsigned(a[0]) + b[0] > kMaxExp) overflow();
    for (std::size_t i = 0; i < stride; ++i) out[i] = static_cast<Exp>(a[i] + b[i]);
}

/// True when a divides b.
inline bool divides(const Exp* a, const Exp* b, std::size_t stride) noexcept {
    if (a[0] > b[0]) return false;
    for (std::size_t i = 1; i < stride; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// out = b / a; requires divides(a, b).
inline void quotient(Exp* out, const Exp* b, const Exp* a, std::size_t stride) noexcept {
    for (std::size_t i = 0; i < stride; ++i) out[i] = static_cast<Exp>(b[i] - a[i]);
}

inline void lcm(Exp* out, const Exp* a, const Exp* b, std::size_t stride) noexcept {
    unsigned deg = 0;
    for (std::size_t i = 1; i < stride; ++i) {
        out[i] = a[i] > b[i] ? a[i] : b[i];
        deg += out[i];
    }
    out[0] = static_cast<Exp>(deg);
}

inline bool coprime(const Exp* a, const Exp* b, std::size_t stride) noexcept {
    for (std::size_t i = 1; i < stride; ++i)
        if (a[i] && b[i]) return false;
    return true;
}

/// Support bitmask used to reject divisibility quickly.
inline std::uint64_t support_mask(const Exp* a, std::size_t stride) noexcept {
    std::uint64_t m = 0;
    for (std::size_t i = 1; i < stride; ++i)
        if (a[i]) m |= std::uint64_t{1} << ((i - 1) & 63);
    return m;
}

}  // namespace detfsing::mono

#endif  // DETFSING_KERNEL_MONOMIAL_HPP
