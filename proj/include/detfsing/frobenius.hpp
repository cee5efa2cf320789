#ifndef DETFSING_FROBENIUS_HPP
#define DETFSING_FROBENIUS_HPP

// Bracket powers, principal Cartier maps, and the Fedder/Glassbrenner tests.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "detfsing/ideals.hpp"
#include "detfsing/kernel.hpp"

namespace detfsing {

/// phi = Phi^e . a, acting as f -> trace(a f, e).
class PhiMap {
public:
    PhiMap(Polynomial a, unsigned e) : a_(std::move(a)), e_(e) {
        if (a_.is_zero()) throw std::invalid_argument("PhiMap: premultiplier must be nonzero");
        if (e_ == 0) throw std::invalid_argument("PhiMap: iterate must be positive");
        q_ = frobenius_power(a_.ring()->p(), e_);
    }

    const Polynomial& a() const noexcept { return a_; }
    unsigned e() const noexcept { return e_; }
    unsigned q() const noexcept { return q_; }
    const Ring& ring() const noexcept { return a_.ring(); }

private:
    Polynomial a_;
    unsigned e_;
    unsigned q_;
};

inline Polynomial phi_apply(const PhiMap& phi, const Polynomial& f) {
    if (!same_ring(phi.ring(), f.ring())) throw std::invalid_argument("phi_apply: ring mismatch");
    return trace_apply(phi.a() * f, phi.e());
}

inline bool is_split(const PhiMap& phi) {
    return phi_apply(phi, Polynomial::constant(phi.ring(), 1)).is_one();
}

/// I^[q] from the generators of I.
inline Ideal bracket_power(const Ideal& I, unsigned e) {
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.frobenius(e));
    return Ideal(I.ring(), std::move(gens));
}

/// I^[q] seeded with its reduced basis: q-th powers of a reduced basis stay
/// reduced, monic and in the same order, since Frobenius is additive and
/// x^a | x^b iff x^qa | x^qb.
inline Ideal bracket_power_basis(const Ideal& I, unsigned e, Context& ctx) {
    std::vector<Polynomial> basis;
    for (const auto& g : I.groebner(ctx)) basis.push_back(g.frobenius(e));
    return Ideal::from_basis(I.ring(), std::move(basis));
}

/// True when f has a term with every exponent below q, i.e. f is not in
/// the monomial ideal m^[q] generated by the q-th powers of the variables.
inline bool escapes_bracket_maximal(const Polynomial& f, unsigned q) {
    const std::size_t s = f.stride();
    for (std::size_t t = 0; t < f.size(); ++t) {
        const Exp* m = f.mono(t);
        bool small = true;
        for (std::size_t i = 1; i < s && small; ++i) small = m[i] < q;
        if (small) return true;
    }
    return false;
}

/// The normal form of a g modulo I^[q] for the first generator g of I with
/// a g outside I^[q]; empty when phi is compatible with I.
inline std::optional<Polynomial> compatibility_witness(const PhiMap& phi, const Ideal& I, Context& ctx) {
    if (!same_ring(phi.ring(), I.ring())) throw std::invalid_argument("is_compatible: ring mismatch");
    if (I.is_zero()) return std::nullopt;
    Ideal B = bracket_power_basis(I, phi.e(), ctx);
    Reducer r(I.ring());
    for (const auto& g : B.groebner(ctx)) r.add(g);
    for (const auto& g : I.gens()) {
        Polynomial rem = r.reduce(phi.a() * g, ctx);
        if (!rem.is_zero()) return rem;
    }
    return std::nullopt;
}

/// phi(F^e_* I) ⊆ I, decided by a I ⊆ I^[q].
inline bool is_compatible(const PhiMap& phi, const Ideal& I, Context& ctx) {
    return !compatibility_witness(phi, I, ctx).has_value();
}

/// The same question answered from the definition: phi(g x^b) ∈ I for every
/// generator g and every exponent vector b < q. Exponential in the number of
/// variables; meant for cross-checking on small rings.
inline bool is_compatible_direct(const PhiMap& phi, const Ideal& I, Context& ctx) {
    const Ring& R = I.ring();
    const std::size_t n = R->nvars();
    const unsigned q = phi.q();
    std::vector<Exp> b(n, 0);
    for (const auto& g : I.gens()) {
        std::fill(b.begin(), b.end(), 0);
        while (true) {
            if (!member(phi_apply(phi, g * Polynomial::term(R, b, 1)), I, ctx)) return false;
            std::size_t i = 0;
            while (i < n && ++b[i] == q) b[i++] = 0;
            if (i == n) break;
        }
    }
    return true;
}

/// (I^[q] : I); the whole ring when I = (0).
inline Ideal frobenius_colon(const Ideal& I, unsigned e, Context& ctx) {
    if (I.is_zero()) return Ideal::unit(I.ring());
    return colon(bracket_power_basis(I, e, ctx), I, ctx);
}

/// A generator of (I^[p] : I) outside m^[p], if one exists.
inline std::optional<Polynomial> fedder_witness(const Ideal& I, Context& ctx) {
    const unsigned p = I.ring()->p();
    Ideal C = frobenius_colon(I, 1, ctx);
    for (const auto& g : C.groebner(ctx))
        if (escapes_bracket_maximal(g, p)) return g;
    return std::nullopt;
}

/// Fedder's criterion at the origin: S/I is F-pure iff (I^[p] : I) ⊄ m^[p].
inline bool fedder_is_f_pure(const Ideal& I, Context& ctx) { return fedder_witness(I, ctx).has_value(); }

/// One step of an e-sweep.
struct SweepStep {
    unsigned e = 0;
    bool confirmed = false;
    std::optional<Polynomial> witness;  // c g escaping m^[q]
};

struct SweepOutcome {
    std::optional<unsigned> confirmed_e;
    std::vector<SweepStep> trace;
    std::string note;

    bool confirmed() const noexcept { return confirmed_e.has_value(); }
};

namespace detail {

inline SweepOutcome sweep(const Ring& R, const Polynomial& c, unsigned e_max,
                          const std::function<Ideal(unsigned)>& lifted_maps, Context& ctx) {
    if (e_max == 0) throw std::invalid_argument("e_max must be positive");
    SweepOutcome out;
    for (unsigned e = 1; e <= e_max; ++e) {
        const unsigned q = frobenius_power(R->p(), e);
        SweepStep step{e, false, std::nullopt};
        Ideal lifted = lifted_maps(e);
        for (const auto& g : lifted.groebner(ctx)) {
            Polynomial cg = c * g;
            if (escapes_bracket_maximal(cg, q)) {
                step.confirmed = true;
                step.witness = std::move(cg);
                break;
            }
        }
        out.trace.push_back(step);
        if (step.confirmed) {
            out.confirmed_e = e;
            break;
        }
    }
    return out;
}

}  // namespace detail

/// Glassbrenner: S/I is strongly F-regular when c (I^[q] : I) ⊄ m^[q] for
/// some e and some c outside every minimal prime of I. A confirmation is a
/// proof; running out of e is not a refutation.
///
/// c is tested against the radical of I as a proxy for the minimal primes.
/// When c lies in √I no confirmation is reported.
inline SweepOutcome glassbrenner_f_regular(const Ideal& I, const Polynomial& c, unsigned e_max, Context& ctx) {
    if (!same_ring(I.ring(), c.ring())) throw std::invalid_argument("glassbrenner: ring mismatch");
    if (c.is_zero() || radical_member(c, I, ctx)) {
        SweepOutcome out;
        out.note = "c lies in the radical of I";
        return out;
    }
    return detail::sweep(I.ring(), c, e_max, [&](unsigned e) { return frobenius_colon(I, e, ctx); }, ctx);
}

/// The pair version: maps compatible with both I and ptilde lift to
/// (I^[q] : I) ∩ (ptilde^[q] : ptilde).
inline SweepOutcome glassbrenner_purely_f_regular(const Ideal& I, const Ideal& ptilde, const Polynomial& c,
                                                  unsigned e_max, Context& ctx) {
    require_shared_ring(I, ptilde);
    if (!same_ring(I.ring(), c.ring())) throw std::invalid_argument("glassbrenner: ring mismatch");
    if (!contains(ptilde, I, ctx)) throw PreconditionViolated("I is not contained in ptilde");
    if (member(c, ptilde, ctx)) throw PreconditionViolated("c lies in ptilde: " + to_string(c));
    return detail::sweep(I.ring(), c, e_max, [&](unsigned e) {
        return intersect(frobenius_colon(I, e, ctx), frobenius_colon(ptilde, e, ctx), ctx);
    }, ctx);
}

}  // namespace detfsing

#endif  // DETFSING_FROBENIUS_HPP
