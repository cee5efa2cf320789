#ifndef DETFSING_TESTS_TEST_SUPPORT_HPP
#define DETFSING_TESTS_TEST_SUPPORT_HPP

// Shared fixtures: small rings and seeded random polynomial generators.

#include <random>
#include <string>
#include <vector>

#include "detfsing/ideals.hpp"
#include "detfsing/kernel.hpp"

namespace detfsing::testing {

/// Ring on x[1,1..n] (a single row of variables).
inline Ring row_ring(std::size_t n, std::uint32_t p, TermOrder order = TermOrder::grevlex()) {
    std::vector<Variable> vars;
    for (std::size_t j = 1; j <= n; ++j) vars.push_back({Block::x, 1, static_cast<int>(j)});
    return RingContext::make(std::move(vars), p, order);
}

inline Polynomial var(const Ring& R, std::size_t i) { return Polynomial::variable(R, i); }

inline Polynomial parse(const Ring& R, const std::string& text) { return parse_polynomial(text, R); }

/// Random polynomial with up to `terms` terms, each of total degree <= max_deg.
inline Polynomial random_poly(std::mt19937_64& rng, const Ring& R, std::size_t terms, unsigned max_deg) {
    std::uniform_int_distribution<std::size_t> pick_var(0, R->nvars() - 1);
    std::uniform_int_distribution<unsigned> pick_deg(0, max_deg);
    std::uniform_int_distribution<std::uint32_t> pick_c(1, R->p() - 1);
    Polynomial f(R);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<Exp> e(R->nvars(), 0);
        unsigned d = pick_deg(rng);
        for (unsigned k = 0; k < d; ++k) ++e[pick_var(rng)];
        f = f + Polynomial::term(R, e, pick_c(rng));
    }
    return f;
}

/// Random homogeneous polynomial of degree d.
inline Polynomial random_homogeneous(std::mt19937_64& rng, const Ring& R, std::size_t terms, unsigned d) {
    std::uniform_int_distribution<std::size_t> pick_var(0, R->nvars() - 1);
    std::uniform_int_distribution<std::uint32_t> pick_c(1, R->p() - 1);
    Polynomial f(R);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<Exp> e(R->nvars(), 0);
        for (unsigned k = 0; k < d; ++k) ++e[pick_var(rng)];
        f = f + Polynomial::term(R, e, pick_c(rng));
    }
    return f;
}

/// Random monomial ideal generators.
inline std::vector<Polynomial> random_monomials(std::mt19937_64& rng, const Ring& R, std::size_t count,
                                                unsigned max_deg) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto f = random_poly(rng, R, 1, max_deg);
        if (!f.is_zero() && !f.is_constant()) out.push_back(f.monic());
    }
    return out;
}

}  // namespace detfsing::testing

#endif  // DETFSING_TESTS_TEST_SUPPORT_HPP
