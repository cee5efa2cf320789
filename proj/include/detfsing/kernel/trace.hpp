#ifndef DETFSING_KERNEL_TRACE_HPP
#define DETFSING_KERNEL_TRACE_HPP

#include <stdexcept>

#include "detfsing/kernel/polynomial.hpp"

namespace detfsing {

/// q = p^e, guarded against exponent overflow.
inline unsigned frobenius_power(std::uint32_t p, unsigned e) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > mono::kMaxExp) throw std::overflow_error("p^e exceeds the exponent range");
    }
    return static_cast<unsigned>(q);
}

/// The e-th iterate of the Frobenius trace on the polynomial ring.
///
/// x^a maps to x^((a - (q-1)) / q) when every a_i is congruent to q-1 mod q,
/// and to 0 otherwise. Coefficients in F_p are fixed by Frobenius, so they
/// pass through unchanged.
inline Polynomial trace_apply(const Polynomial& f, unsigned e) {
    if (e == 0) throw std::invalid_argument("trace_apply: iterate must be positive");
    const unsigned q = frobenius_power(f.ring()->p(), e);
    const std::size_t s = f.stride();
    Polynomial out(f.ring());
    std::vector<Exp> m(s);
    for (std::size_t t = 0; t < f.size(); ++t) {
        const Exp* a = f.mono(t);
        bool survives = true;
        unsigned deg = 0;
        for (std::size_t i = 1; i < s && survives; ++i) {
            if (a[i] % q != q - 1) survives = false;
            m[i] = static_cast<Exp>((a[i] - (q - 1)) / q);
            deg += m[i];
        }
        if (!survives) continue;
        m[0] = static_cast<Exp>(deg);
        // x^a -> x^m is strictly monotone for every monomial order, so
        // the surviving terms stay sorted.
        out.push_back_unchecked(m.data(), f.coeff(t));
    }
    return out;
}

}  // namespace detfsing

#endif  // DETFSING_KERNEL_TRACE_HPP
