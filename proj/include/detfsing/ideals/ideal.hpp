#ifndef DETFSING_IDEALS_IDEAL_HPP
#define DETFSING_IDEALS_IDEAL_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "detfsing/ideals/groebner.hpp"

namespace detfsing {

/// An ideal given by generators, with a lazily computed reduced Groebner
/// basis as its canonical form. Copies share the cache; the value itself
/// never changes.
class Ideal {
public:
    Ideal() = default;
    Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
        for (const auto& g : gens_)
            if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("ideal generator in a foreign ring");
        std::erase_if(gens_, [](const Polynomial& f) { return f.is_zero(); });
    }

    static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(Ring ring) {
        auto one = Polynomial::constant(ring, 1);
        return Ideal(std::move(ring), {one});
    }

    /// Wraps a known reduced Groebner basis (trusted, not re-checked).
    static Ideal from_basis(Ring ring, std::vector<Polynomial> basis) {
        Ideal I(ring, basis);
        std::call_once(I.cache_->once, [&] { I.cache_->basis = std::move(basis); });
        return I;
    }

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& gens() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }

    const std::vector<Polynomial>& groebner(Context& ctx) const {
        std::call_once(cache_->once, [&] { cache_->basis = groebner_basis(ring_, gens_, ctx); });
        return cache_->basis;
    }

private:
    struct Cache {
        std::once_flag once;
        std::vector<Polynomial> basis;
    };

    Ring ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace detfsing

#endif  // DETFSING_IDEALS_IDEAL_HPP
