#ifndef DETFSING_IDEALS_GROEBNER_HPP
#define DETFSING_IDEALS_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "detfsing/ideals/budget.hpp"
#include "detfsing/kernel/polynomial.hpp"

namespace detfsing {

/// Multivariate division against a set of monic divisors.
///
/// The dividend and every scaled divisor tail are merged lazily through a
/// heap of term streams, so one reduction step costs O(log #steps) per term
/// emitted instead of a full pass over the working polynomial.
class Reducer {
public:
    explicit Reducer(Ring ring) : ring_(std::move(ring)) {}

    /// Adds a monic divisor; returns its slot.
    std::size_t add(Polynomial g) {
        masks_.push_back(mono::support_mask(g.leading_mono(), g.stride()));
        active_.push_back(true);
        divisors_.push_back(std::move(g));
        return divisors_.size() - 1;
    }

    void deactivate(std::size_t slot) { active_.at(slot) = false; }
    bool active(std::size_t slot) const { return active_.at(slot); }
    const Polynomial& divisor(std::size_t slot) const { return divisors_.at(slot); }
    std::size_t size() const noexcept { return divisors_.size(); }

    std::optional<std::size_t> find_divisor(const Exp* m, std::ptrdiff_t skip = -1) const {
        const std::size_t s = ring_->stride();
        const std::uint64_t mask = mono::support_mask(m, s);
        for (std::size_t i = 0; i < divisors_.size(); ++i) {
            if (!active_[i] || static_cast<std::ptrdiff_t>(i) == skip) continue;
            if (masks_[i] & ~mask) continue;
            if (mono::divides(divisors_[i].leading_mono(), m, s)) return i;
        }
        return std::nullopt;
    }

    /// Normal form of f. With `full == false` only leading terms are reduced.
    Polynomial reduce(const Polynomial& f, Context& ctx, bool full = true, std::ptrdiff_t skip = -1) const {
        if (f.is_zero()) return f;
        Streams st(*this, f);
        const std::size_t s = ring_->stride();
        const PrimeField& F = ring_->field();
        Polynomial rem(ring_);
        std::vector<Exp> m(s);
        bool reducing = true;
        while (!st.empty()) {
            const Exp* top = st.top_mono();
            std::copy(top, top + s, m.begin());
            Coeff acc = 0;
            while (!st.empty() && mono::equal(st.top_mono(), m.data(), s)) acc = F.add(acc, st.pop_advance());
            if (acc == 0) continue;
            if (reducing) {
                if (auto d = find_divisor(m.data(), skip)) {
                    ctx.count_reduction();
                    const Polynomial& g = divisors_[*d];
                    if (g.size() > 1) st.open(*d, m.data(), F.neg(acc));
                    continue;
                }
                if (!full) reducing = false;
            }
            rem.push_back_unchecked(m.data(), acc);
        }
        return rem;
    }

private:
    // Lazily merged sum of c_k * x^{m_k} * (tail of divisor k) plus f itself.
    class Streams {
    public:
        Streams(const Reducer& r, const Polynomial& f) : r_(r), f_(f), s_(r.ring_->stride()) {
            open_at(-1, nullptr, 1, 0);
        }

        bool empty() const noexcept { return heap_.empty(); }
        const Exp* top_mono() const noexcept { return &cur_[heap_.front() * s_]; }

        // Pops the top stream, returns its current coefficient and re-queues
        // it at its next term.
        Coeff pop_advance() {
            std::pop_heap(heap_.begin(), heap_.end(), cmp());
            const std::uint32_t k = heap_.back();
            heap_.pop_back();
            Stream& st = streams_[k];
            const Polynomial& src = source(st);
            Coeff c = r_.ring_->field().mul(st.mult_c, src.coeff(st.pos));
            if (++st.pos < src.size()) {
                load(k);
                heap_.push_back(k);
                std::push_heap(heap_.begin(), heap_.end(), cmp());
            }
            return c;
        }

        void open(std::size_t divisor, const Exp* m, Coeff c) {
            const Exp* lead = r_.divisors_[divisor].leading_mono();
            std::vector<Exp> mult(s_);
            mono::quotient(mult.data(), m, lead, s_);
            open_at(static_cast<std::ptrdiff_t>(divisor), mult.data(), c, 1);
        }

    private:
        struct Stream {
            std::ptrdiff_t src;  // -1 = the dividend
            std::size_t pos;
            Coeff mult_c;
        };

        struct Cmp {
            const RingContext* ring;
            const std::vector<Exp>* cur;
            std::size_t s;
            bool operator()(std::uint32_t a, std::uint32_t b) const noexcept {
                return ring->compare(&(*cur)[a * s], &(*cur)[b * s]) < 0;
            }
        };
        Cmp cmp() const noexcept { return Cmp{r_.ring_.get(), &cur_, s_}; }

        const Polynomial& source(const Stream& st) const {
            return st.src < 0 ? f_ : r_.divisors_[static_cast<std::size_t>(st.src)];
        }

        void open_at(std::ptrdiff_t src, const Exp* mult, Coeff c, std::size_t pos) {
            const std::uint32_t k = static_cast<std::uint32_t>(streams_.size());
            streams_.push_back({src, pos, c});
            mults_.resize((k + 1) * s_, 0);
            cur_.resize((k + 1) * s_, 0);
            if (mult) std::copy(mult, mult + s_, mults_.begin() + static_cast<std::ptrdiff_t>(k * s_));
            if (pos < source(streams_[k]).size()) {
                load(k);
                heap_.push_back(k);
                std::push_heap(heap_.begin(), heap_.end(), cmp());
            }
        }

        void load(std::uint32_t k) {
            const Stream& st = streams_[k];
            mono::multiply(&cur_[k * s_], source(st).mono(st.pos), &mults_[k * s_], s_);
        }

        const Reducer& r_;
        const Polynomial& f_;
        std::size_t s_;
        std::vector<Stream> streams_;
        std::vector<Exp> mults_;
        std::vector<Exp> cur_;
        std::vector<std::uint32_t> heap_;
    };

    Ring ring_;
    std::vector<Polynomial> divisors_;
    std::vector<std::uint64_t> masks_;
    std::vector<bool> active_;
};

namespace detail {

struct CriticalPair {
    std::size_t i, j;
    std::vector<Exp> lcm;
};

inline Polynomial s_polynomial(const Polynomial& a, const Polynomial& b, const Exp* lcm) {
    const std::size_t s = a.stride();
    std::vector<Exp> ma(s), mb(s);
    mono::quotient(ma.data(), lcm, a.leading_mono(), s);
    mono::quotient(mb.data(), lcm, b.leading_mono(), s);
    return a.times_term(ma.data(), 1) - b.times_term(mb.data(), 1);
}

}  // namespace detail

/// Reduced Groebner basis: Buchberger with the normal selection strategy
/// and the Gebauer-Moeller installation of both Buchberger criteria.
/// The result is monic, auto-reduced and sorted by ascending leading monomial.
inline std::vector<Polynomial> groebner_basis(const Ring& ring, std::vector<Polynomial> gens, Context& ctx) {
    const std::size_t s = ring->stride();
    const RingContext& R = *ring;
    std::erase_if(gens, [](const Polynomial& f) { return f.is_zero(); });
    for (const auto& g : gens) {
        if (!same_ring(g.ring(), ring)) throw std::invalid_argument("groebner: generator in a foreign ring");
        if (g.is_constant()) return {Polynomial::constant(ring, 1)};
    }
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        return R.compare(a.leading_mono(), b.leading_mono()) < 0;
    });

    Reducer basis(ring);
    std::vector<detail::CriticalPair> pairs;
    std::vector<Exp> tmp(s);

    auto lcm_of = [&](std::size_t i, std::size_t j) {
        std::vector<Exp> l(s);
        mono::lcm(l.data(), basis.divisor(i).leading_mono(), basis.divisor(j).leading_mono(), s);
        return l;
    };

    // Gebauer-Moeller update with the new element at slot h.
    auto update = [&](std::size_t h) {
        const Exp* lh = basis.divisor(h).leading_mono();
        std::vector<detail::CriticalPair> fresh;
        for (std::size_t g = 0; g < h; ++g)
            if (basis.active(g)) fresh.push_back({g, h, lcm_of(g, h)});
        auto coprime = [&](const detail::CriticalPair& cp) {
            return mono::coprime(basis.divisor(cp.i).leading_mono(), lh, s);
        };
        std::vector<detail::CriticalPair> kept;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            bool keep = coprime(fresh[a]);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
                    if (mono::divides(fresh[b].lcm.data(), fresh[a].lcm.data(), s)) keep = false;
                for (std::size_t b = 0; b < kept.size() && keep; ++b)
                    if (mono::divides(kept[b].lcm.data(), fresh[a].lcm.data(), s)) keep = false;
            }
            if (keep) kept.push_back(std::move(fresh[a]));
        }
        std::erase_if(kept, coprime);
        std::erase_if(pairs, [&](const detail::CriticalPair& cp) {
            if (!mono::divides(lh, cp.lcm.data(), s)) return false;
            mono::lcm(tmp.data(), basis.divisor(cp.i).leading_mono(), lh, s);
            if (mono::equal(tmp.data(), cp.lcm.data(), s)) return false;
            mono::lcm(tmp.data(), basis.divisor(cp.j).leading_mono(), lh, s);
            if (mono::equal(tmp.data(), cp.lcm.data(), s)) return false;
            return true;
        });
        for (auto& cp : kept) pairs.push_back(std::move(cp));
        for (std::size_t g = 0; g < h; ++g)
            if (basis.active(g) && mono::divides(lh, basis.divisor(g).leading_mono(), s)) basis.deactivate(g);
    };

    auto install = [&](Polynomial h) {
        ctx.see_degree(h.leading_mono()[0]);
        update(basis.add(h.monic()));
    };

    for (const auto& g : gens) {
        Polynomial h = basis.reduce(g, ctx);
        if (h.is_zero()) continue;
        if (h.is_constant()) return {Polynomial::constant(ring, 1)};
        install(std::move(h));
    }

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
            return R.compare(a.lcm.data(), b.lcm.data()) < 0;
        });
        detail::CriticalPair cp = std::move(*best);
        *best = std::move(pairs.back());
        pairs.pop_back();
        ctx.count_spair(cp.lcm[0]);
        Polynomial sp = detail::s_polynomial(basis.divisor(cp.i), basis.divisor(cp.j), cp.lcm.data());
        Polynomial h = basis.reduce(sp, ctx);
        if (h.is_zero()) continue;
        if (h.is_constant()) return {Polynomial::constant(ring, 1)};
        install(std::move(h));
    }

    // Minimal basis is the active set; inter-reduce tails.
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis.active(i)) out.push_back(basis.reduce(basis.divisor(i), ctx, true, static_cast<std::ptrdiff_t>(i)).monic());
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return R.compare(a.leading_mono(), b.leading_mono()) < 0;
    });
    return out;
}

/// Exact quotient a / f; throws when f does not divide a.
inline Polynomial divide_exact(const Polynomial& a, const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("division by the zero polynomial");
    const std::size_t s = f.stride();
    const PrimeField& F = f.field();
    const Coeff inv_lc = F.inv(f.leading_coeff());
    std::vector<Exp> qm(s);
    Polynomial r = a;
    std::vector<Exp> q_mons;
    std::vector<Coeff> q_coeffs;
    while (!r.is_zero()) {
        if (!mono::divides(f.leading_mono(), r.leading_mono(), s))
            throw std::domain_error("divide_exact: divisor does not divide dividend");
        mono::quotient(qm.data(), r.leading_mono(), f.leading_mono(), s);
        Coeff c = F.mul(r.leading_coeff(), inv_lc);
        q_mons.insert(q_mons.end(), qm.begin(), qm.end());
        q_coeffs.push_back(c);
        r = r - f.times_term(qm.data(), c);
    }
    return Polynomial::from_packed(f.ring(), std::move(q_mons), std::move(q_coeffs));
}

}  // namespace detfsing

#endif  // DETFSING_IDEALS_GROEBNER_HPP
