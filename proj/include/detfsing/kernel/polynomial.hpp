#ifndef DETFSING_KERNEL_POLYNOMIAL_HPP
#define DETFSING_KERNEL_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "detfsing/kernel/monomial.hpp"
#include "detfsing/kernel/ring.hpp"

namespace detfsing {

/// Sparse polynomial over F_p in canonical form: terms strictly descending
/// in the ring's order, no zero coefficients. Structural equality is
/// mathematical equality.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial constant(Ring ring, std::int64_t c) {
        Polynomial f(std::move(ring));
        Coeff r = f.field().reduce(c);
        if (r != 0) {
            f.mons_.assign(f.stride(), 0);
            f.coeffs_.push_back(r);
        }
        return f;
    }

    static Polynomial variable(Ring ring, std::size_t index, Exp power = 1) {
        if (index >= ring->nvars()) throw std::out_of_range("variable index out of range");
        Polynomial f(std::move(ring));
        f.mons_.assign(f.stride(), 0);
        f.mons_[0] = power;
        f.mons_[index + 1] = power;
        f.coeffs_.push_back(1);
        return f;
    }

    static Polynomial variable(const Ring& ring, const Variable& v, Exp power = 1) {
        return variable(ring, ring->index_of(v), power);
    }

    /// Single term c * x^exps (exps unpacked, one entry per variable).
    static Polynomial term(Ring ring, std::span<const Exp> exps, std::int64_t c) {
        Polynomial f(std::move(ring));
        if (exps.size() != f.ring_->nvars()) throw std::invalid_argument("exponent vector has wrong length");
        Coeff r = f.field().reduce(c);
        if (r == 0) return f;
        f.mons_.resize(f.stride());
        unsigned deg = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            f.mons_[i + 1] = exps[i];
            deg += exps[i];
        }
        if (deg > mono::kMaxExp) mono::overflow();
        f.mons_[0] = static_cast<Exp>(deg);
        f.coeffs_.push_back(r);
        return f;
    }

    /// Canonicalizes an arbitrary packed term list (any order, duplicates allowed).
    static Polynomial from_packed(Ring ring, std::vector<Exp> mons, std::vector<Coeff> coeffs) {
        Polynomial f(std::move(ring));
        const std::size_t s = f.stride();
        std::vector<std::size_t> idx(coeffs.size());
        std::iota(idx.begin(), idx.end(), 0);
        const RingContext& R = *f.ring_;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return R.compare(&mons[a * s], &mons[b * s]) > 0;
        });
        const PrimeField& F = f.field();
        for (std::size_t k = 0; k < idx.size();) {
            const Exp* m = &mons[idx[k] * s];
            Coeff c = 0;
            std::size_t j = k;
            while (j < idx.size() && mono::equal(&mons[idx[j] * s], m, s)) c = F.add(c, coeffs[idx[j++]]);
            if (c != 0) f.push_back_unchecked(m, c);
            k = j;
        }
        return f;
    }

    const Ring& ring() const noexcept { return ring_; }
    const PrimeField& field() const noexcept { return ring_->field(); }
    std::size_t stride() const noexcept { return ring_->stride(); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return is_zero() || (size() == 1 && mons_[0] == 0); }
    bool is_one() const noexcept { return size() == 1 && mons_[0] == 0 && coeffs_[0] == 1; }

    const Exp* mono(std::size_t i) const noexcept { return &mons_[i * stride()]; }
    Coeff coeff(std::size_t i) const noexcept { return coeffs_[i]; }
    const Exp* leading_mono() const noexcept { return mons_.data(); }
    Coeff leading_coeff() const noexcept { return coeffs_.front(); }

    /// Unpacked exponent vector of term i.
    std::vector<Exp> exponents(std::size_t i) const {
        const Exp* m = mono(i);
        return std::vector<Exp>(m + 1, m + stride());
    }

    unsigned degree() const noexcept {
        unsigned d = 0;
        for (std::size_t i = 0; i < size(); ++i) d = std::max<unsigned>(d, mono(i)[0]);
        return d;
    }

    bool is_homogeneous() const noexcept {
        for (std::size_t i = 1; i < size(); ++i)
            if (mono(i)[0] != mono(0)[0]) return false;
        return true;
    }

    /// True when variable `index` occurs in some term.
    bool involves(std::size_t index) const noexcept {
        for (std::size_t i = 0; i < size(); ++i)
            if (mono(i)[index + 1]) return true;
        return false;
    }

    Polynomial monic() const {
        if (is_zero() || leading_coeff() == 1) return *this;
        return scaled(field().inv(leading_coeff()));
    }

    Polynomial scaled(Coeff c) const {
        const PrimeField& F = field();
        c %= F.characteristic();
        if (c == 0) return Polynomial(ring_);
        Polynomial g = *this;
        for (auto& a : g.coeffs_) a = F.mul(a, c);
        return g;
    }

    /// c * x^m * this, where m is packed.
    Polynomial times_term(const Exp* m, Coeff c) const {
        Polynomial g(ring_);
        if (c == 0 || is_zero()) return g;
        const std::size_t s = stride();
        const PrimeField& F = field();
        g.mons_.resize(mons_.size());
        g.coeffs_.resize(size());
        for (std::size_t i = 0; i < size(); ++i) {
            mono::multiply(&g.mons_[i * s], mono(i), m, s);
            g.coeffs_[i] = F.mul(coeffs_[i], c);
        }
        return g;
    }

    Polynomial operator-() const { return scaled(field().neg(1)); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, 1); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return combine(a, b, a.field().neg(1));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return same_ring(a.ring_, b.ring_) && a.coeffs_ == b.coeffs_ && a.mons_ == b.mons_;
    }

    /// f^(p^e): in characteristic p this only raises every monomial.
    Polynomial frobenius(unsigned e) const {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) q *= field().characteristic();
        Polynomial g = *this;
        for (std::size_t i = 0; i < g.mons_.size(); ++i) {
            std::uint64_t v = std::uint64_t{g.mons_[i]} * q;
            if (v > mono::kMaxExp) mono::overflow();
            g.mons_[i] = static_cast<Exp>(v);
        }
        return g;  // coefficients are fixed by Frobenius on F_p
    }

    Polynomial pow(std::uint64_t k) const {
        const std::uint32_t p = field().characteristic();
        Polynomial result = constant(ring_, 1);
        Polynomial base = *this;
        // k = sum d_i p^i, f^k = prod (f^(p^i))^(d_i)
        while (k) {
            std::uint64_t digit = k % p;
            for (std::uint64_t j = 0; j < digit; ++j) result = result * base;
            k /= p;
            if (k) base = base.frobenius(1);
        }
        return result;
    }

    /// Appends a term known to be smaller than all current terms.
    void push_back_unchecked(const Exp* m, Coeff c) {
        mons_.insert(mons_.end(), m, m + stride());
        coeffs_.push_back(c);
    }

    /// Moves the canonical form into a different but compatible ring
    /// (same roster, possibly different order) and re-sorts.
    Polynomial reordered(const Ring& target) const {
        if (target->nvars() != ring_->nvars()) throw std::invalid_argument("roster size mismatch");
        return from_packed(target, mons_, coeffs_);
    }

private:
    static void require_same_ring(const Polynomial& a, const Polynomial& b) {
        if (!same_ring(a.ring_, b.ring_)) throw std::invalid_argument("polynomials live in different rings");
    }

    // a + scale * b, both canonical.
    static Polynomial combine(const Polynomial& a, const Polynomial& b, Coeff scale) {
        require_same_ring(a, b);
        Polynomial r(a.ring_);
        const RingContext& R = *a.ring_;
        const PrimeField& F = R.field();
        r.mons_.reserve(a.mons_.size() + b.mons_.size());
        r.coeffs_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            int c = R.compare(a.mono(i), b.mono(j));
            if (c > 0) {
                r.push_back_unchecked(a.mono(i), a.coeffs_[i]);
                ++i;
            } else if (c < 0) {
                r.push_back_unchecked(b.mono(j), F.mul(scale, b.coeffs_[j]));
                ++j;
            } else {
                Coeff v = F.add(a.coeffs_[i], F.mul(scale, b.coeffs_[j]));
                if (v) r.push_back_unchecked(a.mono(i), v);
                ++i;
                ++j;
            }
        }
        for (; i < a.size(); ++i) r.push_back_unchecked(a.mono(i), a.coeffs_[i]);
        for (; j < b.size(); ++j) r.push_back_unchecked(b.mono(j), F.mul(scale, b.coeffs_[j]));
        return r;
    }

    // Each term of the shorter factor shifts the longer one (order preserved);
    // the shifted copies are merged pairwise.
    static Polynomial multiply(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
        const Polynomial& small = a.size() <= b.size() ? a : b;
        const Polynomial& large = a.size() <= b.size() ? b : a;
        std::vector<Polynomial> parts;
        parts.reserve(small.size());
        for (std::size_t i = 0; i < small.size(); ++i) parts.push_back(large.times_term(small.mono(i), small.coeffs_[i]));
        while (parts.size() > 1) {
            std::vector<Polynomial> next;
            next.reserve((parts.size() + 1) / 2);
            for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
            if (parts.size() % 2) next.push_back(std::move(parts.back()));
            parts = std::move(next);
        }
        return std::move(parts.front());
    }

    Ring ring_;
    std::vector<Exp> mons_;
    std::vector<Coeff> coeffs_;
};

/// Ring homomorphism sending variable i of f's ring to images[i] (all in `target`).
inline Polynomial substitute(const Polynomial& f, const Ring& target, const std::vector<Polynomial>& images) {
    const std::size_t n = f.ring()->nvars();
    if (images.size() != n) throw std::invalid_argument("substitute: one image per variable required");
    std::vector<std::vector<Polynomial>> powers(n);  // powers[i][k] = images[i]^k
    auto power = [&](std::size_t i, Exp k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    Polynomial result(target);
    std::vector<Polynomial> terms;
    for (std::size_t t = 0; t < f.size(); ++t) {
        Polynomial term = Polynomial::constant(target, f.coeff(t));
        const Exp* m = f.mono(t);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
            if (m[i + 1]) term = term * power(i, m[i + 1]);
        terms.push_back(std::move(term));
    }
    while (terms.size() > 1) {
        std::vector<Polynomial> next;
        for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
        if (terms.size() % 2) next.push_back(std::move(terms.back()));
        terms = std::move(next);
    }
    return terms.empty() ? result : std::move(terms.front());
}

/// Renames variables: source variable i becomes target variable map[i].
/// Every variable occurring in f must be mapped.
inline Polynomial rename(const Polynomial& f, const Ring& target, const std::vector<std::ptrdiff_t>& map) {
    const std::size_t n = f.ring()->nvars();
    const std::size_t ts = target->stride();
    std::vector<Exp> mons(f.size() * ts, 0);
    std::vector<Coeff> coeffs(f.size());
    for (std::size_t t = 0; t < f.size(); ++t) {
        const Exp* m = f.mono(t);
        Exp* out = &mons[t * ts];
        out[0] = m[0];
        for (std::size_t i = 0; i < n; ++i) {
            if (!m[i + 1]) continue;
            if (map[i] < 0) throw std::invalid_argument("rename: variable " + f.ring()->var(i).name() + " unmapped");
            out[map[i] + 1] = static_cast<Exp>(out[map[i] + 1] + m[i + 1]);
        }
        coeffs[t] = target->field().reduce(f.coeff(t));
    }
    return Polynomial::from_packed(target, std::move(mons), std::move(coeffs));
}

/// Renaming map by variable name; unmatched variables map to -1.
inline std::vector<std::ptrdiff_t> name_map(const RingContext& source, const RingContext& target) {
    std::vector<std::ptrdiff_t> map(source.nvars(), -1);
    for (std::size_t i = 0; i < source.nvars(); ++i)
        if (auto j = target.find(source.var(i))) map[i] = static_cast<std::ptrdiff_t>(*j);
    return map;
}

}  // namespace detfsing

#endif  // DETFSING_KERNEL_POLYNOMIAL_HPP
