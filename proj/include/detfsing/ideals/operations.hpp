#ifndef DETFSING_IDEALS_OPERATIONS_HPP
#define DETFSING_IDEALS_OPERATIONS_HPP

// Ideal algebra on top of the Groebner engine.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "detfsing/ideals/ideal.hpp"

namespace detfsing {

inline void require_shared_ring(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring())) throw std::invalid_argument("ideals live in different rings");
}

inline Polynomial normal_form(const Polynomial& f, const Ideal& I, Context& ctx) {
    if (!same_ring(f.ring(), I.ring())) throw std::invalid_argument("polynomial and ideal live in different rings");
    Reducer r(I.ring());
    for (const auto& g : I.groebner(ctx)) r.add(g);
    return r.reduce(f, ctx);
}

inline bool member(const Polynomial& f, const Ideal& I, Context& ctx) { return normal_form(f, I, ctx).is_zero(); }

inline bool is_unit_ideal(const Ideal& I, Context& ctx) {
    const auto& gb = I.groebner(ctx);
    return gb.size() == 1 && gb.front().is_one();
}

/// J contained in I.
inline bool contains(const Ideal& I, const Ideal& J, Context& ctx) {
    require_shared_ring(I, J);
    Reducer r(I.ring());
    for (const auto& g : I.groebner(ctx)) r.add(g);
    for (const auto& f : J.gens())
        if (!r.reduce(f, ctx).is_zero()) return false;
    return true;
}

/// Equality of reduced Groebner bases.
inline bool ideal_equal(const Ideal& I, const Ideal& J, Context& ctx) {
    require_shared_ring(I, J);
    return I.groebner(ctx) == J.groebner(ctx);
}

inline Ideal sum(const Ideal& I, const Ideal& J) {
    require_shared_ring(I, J);
    auto gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return Ideal(I.ring(), std::move(gens));
}

inline Ideal product(const Ideal& I, const Ideal& J) {
    require_shared_ring(I, J);
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens())
        for (const auto& g : J.gens()) gens.push_back(f * g);
    return Ideal(I.ring(), std::move(gens));
}

inline Ideal principal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

namespace detail {

/// Embeds `ring` behind `aux` leading variables; returns the ring and the
/// images of the original variables.
inline std::pair<Ring, std::vector<std::ptrdiff_t>> extend_with_aux(const Ring& ring, std::size_t aux) {
    Ring big = ring->with_leading_aux(aux);
    std::vector<std::ptrdiff_t> map(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) map[i] = static_cast<std::ptrdiff_t>(i + aux);
    return {big, map};
}

/// Keeps the basis elements free of the first `aux` variables and moves
/// them back into `base`.
inline Ideal eliminate_aux(const Ring& big, const std::vector<Polynomial>& basis, std::size_t aux, const Ring& base) {
    std::vector<std::ptrdiff_t> back(big->nvars(), -1);
    for (std::size_t i = aux; i < big->nvars(); ++i) back[i] = static_cast<std::ptrdiff_t>(i - aux);
    std::vector<Polynomial> kept;
    for (const auto& g : basis) {
        bool free = true;
        for (std::size_t i = 0; i < aux && free; ++i) free = !g.involves(i);
        if (free) kept.push_back(rename(g, base, back));
    }
    // The restriction of a reduced basis of an elimination order is the
    // reduced basis of the elimination ideal for the grevlex tail order.
    if (base->order().kind == TermOrder::Kind::grevlex) {
        const RingContext& R = *base;
        std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
            return R.compare(a.leading_mono(), b.leading_mono()) < 0;
        });
        return Ideal::from_basis(base, std::move(kept));
    }
    return Ideal(base, std::move(kept));
}

}  // namespace detail

namespace detail {

/// I ∩ J = (t I + (1 - t) J) ∩ S with one auxiliary variable t.
inline Ideal intersect_pair(const Ideal& I, const Ideal& J, Context& ctx) {
    const Ring& base = I.ring();
    auto [big, map] = extend_with_aux(base, 1);
    Polynomial t = Polynomial::variable(big, 0);
    Polynomial u = Polynomial::constant(big, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.groebner(ctx)) gens.push_back(t * rename(f, big, map));
    for (const auto& f : J.groebner(ctx)) gens.push_back(u * rename(f, big, map));
    auto basis = groebner_basis(big, std::move(gens), ctx);
    return eliminate_aux(big, basis, 1, base);
}

}  // namespace detail

/// Intersection of several ideals, folded pairwise. One elimination with r
/// auxiliary variables is far slower in practice than r-1 eliminations with
/// one each.
inline Ideal intersect_all(const std::vector<Ideal>& ideals, Context& ctx) {
    if (ideals.empty()) throw std::invalid_argument("intersect_all: no ideals");
    const Ring& base = ideals.front().ring();
    for (const auto& I : ideals) require_shared_ring(ideals.front(), I);
    std::vector<const Ideal*> proper;
    for (const auto& I : ideals) {
        if (I.is_zero()) return Ideal::zero(base);
        if (!is_unit_ideal(I, ctx)) proper.push_back(&I);
    }
    if (proper.empty()) return Ideal::unit(base);
    Ideal acc = *proper.front();
    for (std::size_t k = 1; k < proper.size(); ++k) acc = detail::intersect_pair(acc, *proper[k], ctx);
    return acc;
}

inline Ideal intersect(const Ideal& I, const Ideal& J, Context& ctx) {
    require_shared_ring(I, J);
    return intersect_all({I, J}, ctx);
}

/// (I : f) = (I ∩ (f)) / f.
inline Ideal colon(const Ideal& I, const Polynomial& f, Context& ctx) {
    if (f.is_zero()) throw PreconditionViolated("colon by the zero polynomial");
    if (f.is_constant()) return I;
    if (member(f, I, ctx)) return Ideal::unit(I.ring());
    Ideal K = intersect(I, principal(f), ctx);
    std::vector<Polynomial> gens;
    for (const auto& g : K.groebner(ctx)) gens.push_back(divide_exact(g, f));
    return Ideal(I.ring(), std::move(gens));
}

/// (I : J) = ∩_j (I : f_j) over the generators of J.
inline Ideal colon(const Ideal& I, const Ideal& J, Context& ctx) {
    require_shared_ring(I, J);
    if (J.is_zero()) throw PreconditionViolated("colon by the zero ideal");
    std::vector<Ideal> parts;
    for (const auto& f : J.gens()) parts.push_back(colon(I, f, ctx));
    return intersect_all(parts, ctx);
}

/// (I : f^∞), iterating single colons until the ideal stabilizes.
inline Ideal saturate(const Ideal& I, const Polynomial& f, Context& ctx, unsigned cap = 32) {
    if (f.is_zero()) throw PreconditionViolated("saturation by the zero polynomial");
    Ideal current = I;
    for (unsigned k = 0; k < cap; ++k) {
        Ideal next = colon(current, f, ctx);
        if (ideal_equal(next, current, ctx)) return current;
        current = std::move(next);
    }
    throw IterationCapExceeded(cap);
}

/// Rabinowitsch: f ∈ √I iff 1 ∈ I + (1 - u f) with a fresh variable u.
inline bool radical_member(const Polynomial& f, const Ideal& I, Context& ctx) {
    if (!same_ring(f.ring(), I.ring())) throw std::invalid_argument("polynomial and ideal live in different rings");
    if (f.is_zero()) return true;
    if (member(f, I, ctx)) return true;
    auto [big, map] = detail::extend_with_aux(I.ring(), 1);
    big = big->with_order(TermOrder::grevlex());
    std::vector<Polynomial> gens;
    for (const auto& g : I.groebner(ctx)) gens.push_back(rename(g, big, map));
    gens.push_back(Polynomial::constant(big, 1) - Polynomial::variable(big, 0) * rename(f, big, map));
    auto basis = groebner_basis(big, std::move(gens), ctx);
    return basis.size() == 1 && basis.front().is_one();
}

/// Krull dimension of ring/I: the largest set of variables containing the
/// support of no leading monomial of the reduced basis.
inline unsigned krull_dim(const Ideal& I, Context& ctx) {
    const auto& gb = I.groebner(ctx);
    const std::size_t n = I.ring()->nvars();
    if (n > 64) throw std::invalid_argument("krull_dim supports at most 64 variables");
    if (gb.size() == 1 && gb.front().is_constant()) throw ImproperIdeal();
    std::vector<std::uint64_t> supports;
    for (const auto& g : gb) supports.push_back(mono::support_mask(g.leading_mono(), g.stride()));
    // Keep only inclusion-minimal supports.
    std::sort(supports.begin(), supports.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
    std::vector<std::uint64_t> minimal;
    for (auto m : supports)
        if (std::none_of(minimal.begin(), minimal.end(), [&](auto k) { return (k & m) == k; })) minimal.push_back(m);

    unsigned best = 0;
    // Branch on variables in roster order; a chosen set is admissible when
    // no minimal support lies inside it.
    auto admissible = [&](std::uint64_t set) {
        return std::none_of(minimal.begin(), minimal.end(), [&](auto k) { return (k & set) == k; });
    };
    auto search = [&](auto&& self, std::size_t i, std::uint64_t set, unsigned size) -> void {
        if (size + (n - i) <= best) return;
        if (i == n) {
            best = size;
            return;
        }
        std::uint64_t with = set | (std::uint64_t{1} << i);
        if (admissible(with)) self(self, i + 1, with, size + 1);
        self(self, i + 1, set, size);
    };
    search(search, 0, 0, 0);
    return best;
}

}  // namespace detfsing

#endif  // DETFSING_IDEALS_OPERATIONS_HPP
