#ifndef DETFSING_KERNEL_FIELD_HPP
#define DETFSING_KERNEL_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace detfsing {

/// Residues of F_p, always kept in [0, p).
using Coeff = std::uint32_t;

/// Largest admissible modulus: (p-1)^2 fits in 32 bits.
inline constexpr std::uint32_t kMaxPrime = 46337;

inline bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Arithmetic in the prime field F_p.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p > kMaxPrime || !is_prime(p))
            throw std::invalid_argument("modulus must be a prime in [2, " + std::to_string(kMaxPrime) +
                                        "], got " + std::to_string(p));
    }

    std::uint32_t characteristic() const noexcept { return p_; }

    Coeff reduce(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<Coeff>(r < 0 ? r + p_ : r);
    }
    Coeff add(Coeff a, Coeff b) const noexcept {
        Coeff s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept { return (a * b) % p_; }

    /// Extended Euclid; a must be nonzero.
    Coeff inv(Coeff a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_p");
        std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t t = r0 - q * r1;
            r0 = r1;
            r1 = t;
            t = s0 - q * s1;
            s0 = s1;
            s1 = t;
        }
        return reduce(s0);
    }

    Coeff pow(Coeff a, std::uint64_t k) const noexcept {
        Coeff result = 1 % p_;
        while (k) {
            if (k & 1) result = mul(result, a);
            a = mul(a, a);
            k >>= 1;
        }
        return result;
    }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

}  // namespace detfsing

#endif  // DETFSING_KERNEL_FIELD_HPP
