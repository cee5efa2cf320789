#ifndef DETFSING_KERNEL_RING_HPP
#define DETFSING_KERNEL_RING_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "detfsing/kernel/field.hpp"

namespace detfsing {

/// Exponent of a single variable.
using Exp = std::uint16_t;

/// Which matrix block a variable belongs to; also its printed name.
enum class Block : std::uint8_t { x, xprime, z, w, r, c, u, v, aux };

inline constexpr std::array<std::string_view, 9> kBlockNames = {"x", "xprime", "z", "w", "r",
                                                                "c", "u",      "v", "aux"};

inline std::string_view block_name(Block b) noexcept { return kBlockNames[static_cast<int>(b)]; }

inline std::optional<Block> block_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kBlockNames.size(); ++i)
        if (kBlockNames[i] == name) return static_cast<Block>(i);
    return std::nullopt;
}

/// A structured indeterminate such as x[2,3]. Indices are 1-based.
struct Variable {
    Block block = Block::x;
    int row = 1;
    int col = 1;

    std::string name() const {
        return std::string(block_name(block)) + "[" + std::to_string(row) + "," + std::to_string(col) + "]";
    }
    bool operator==(const Variable&) const = default;
};

/// Monomial order descriptor.
///
/// `diagonal` is graded lex over the variable roster. Generic matrices are
/// laid out row-major, so the leading term of every minor is the product of
/// its main diagonal. `elimination` compares the first `eliminated`
/// variables (by grevlex) before the rest (also by grevlex).
struct TermOrder {
    enum class Kind : std::uint8_t { grevlex, lex, diagonal, elimination };

    Kind kind = Kind::grevlex;
    std::size_t eliminated = 0;

    static TermOrder grevlex() { return {Kind::grevlex, 0}; }
    static TermOrder lex() { return {Kind::lex, 0}; }
    static TermOrder diagonal() { return {Kind::diagonal, 0}; }
    static TermOrder elimination(std::size_t k) { return {Kind::elimination, k}; }

    std::string describe() const {
        switch (kind) {
            case Kind::grevlex: return "grevlex";
            case Kind::lex: return "lex";
            case Kind::diagonal: return "diagonal";
            case Kind::elimination: return "elimination(" + std::to_string(eliminated) + ")";
        }
        return "?";
    }
    bool operator==(const TermOrder&) const = default;
};

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

/// The ambient polynomial ring F_p[vars] with a fixed term order.
///
/// Monomials are handled in packed form: a contiguous run of `stride()`
/// exponents whose slot 0 holds the total degree and slots 1..n hold the
/// variable exponents in roster order.
class RingContext {
public:
    RingContext(std::vector<Variable> vars, std::uint32_t p, TermOrder order)
        : vars_(std::move(vars)), field_(p), order_(order) {
        if (order_.kind == TermOrder::Kind::elimination && order_.eliminated > vars_.size())
            throw std::invalid_argument("elimination block larger than the variable roster");
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto [it, fresh] = index_.emplace(vars_[i].name(), i);
            if (!fresh) throw std::invalid_argument("duplicate variable " + vars_[i].name());
        }
    }

    static Ring make(std::vector<Variable> vars, std::uint32_t p, TermOrder order = TermOrder::grevlex()) {
        return std::make_shared<const RingContext>(std::move(vars), p, order);
    }

    std::size_t nvars() const noexcept { return vars_.size(); }
    std::size_t stride() const noexcept { return vars_.size() + 1; }
    std::uint32_t p() const noexcept { return field_.characteristic(); }
    const PrimeField& field() const noexcept { return field_; }
    const TermOrder& order() const noexcept { return order_; }
    const std::vector<Variable>& vars() const noexcept { return vars_; }
    const Variable& var(std::size_t i) const { return vars_.at(i); }

    std::optional<std::size_t> find(const Variable& v) const { return find(v.name()); }
    std::optional<std::size_t> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index_of(const Variable& v) const {
        auto i = find(v);
        if (!i) throw std::out_of_range("variable " + v.name() + " not in ring");
        return *i;
    }

    /// Three-way comparison of packed monomials: >0 when a is larger.
    int compare(const Exp* a, const Exp* b) const noexcept {
        const std::size_t n = vars_.size();
        switch (order_.kind) {
            case TermOrder::Kind::grevlex:
                if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
                return revlex_tail(a, b, 1, n + 1);
            case TermOrder::Kind::lex:
                for (std::size_t i = 1; i <= n; ++i)
                    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                return 0;
            case TermOrder::Kind::diagonal:
                if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
                for (std::size_t i = 1; i <= n; ++i)
                    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                return 0;
            case TermOrder::Kind::elimination: {
                const std::size_t k = order_.eliminated;
                unsigned da = 0, db = 0;
                for (std::size_t i = 1; i <= k; ++i) {
                    da += a[i];
                    db += b[i];
                }
                if (da != db) return da > db ? 1 : -1;
                if (int c = revlex_tail(a, b, 1, k + 1)) return c;
                if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
                return revlex_tail(a, b, k + 1, n + 1);
            }
        }
        return 0;
    }

    /// Structural identity: same roster, modulus and order.
    bool same_as(const RingContext& other) const noexcept {
        return this == &other || (vars_ == other.vars_ && p() == other.p() && order_ == other.order_);
    }

    /// A copy of this ring with a different term order.
    Ring with_order(TermOrder order) const { return make(vars_, p(), order); }

    /// A copy with `count` fresh aux variables in front, under an elimination
    /// order that eliminates exactly them.
    Ring with_leading_aux(std::size_t count) const {
        int next = 1;
        for (const auto& v : vars_)
            if (v.block == Block::aux) next = std::max(next, v.row + 1);
        std::vector<Variable> vars;
        vars.reserve(vars_.size() + count);
        for (std::size_t i = 0; i < count; ++i) vars.push_back({Block::aux, next + static_cast<int>(i), 1});
        vars.insert(vars.end(), vars_.begin(), vars_.end());
        return make(std::move(vars), p(), TermOrder::elimination(count));
    }

    /// A copy with one extra variable appended at the end of the roster.
    Ring with_appended(const Variable& v) const {
        auto vars = vars_;
        vars.push_back(v);
        return make(std::move(vars), p(), order_);
    }

    /// A copy with the variables at `drop` (sorted indices) removed.
    Ring without(const std::vector<std::size_t>& drop) const {
        std::vector<Variable> vars;
        std::size_t removed_in_block = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (std::binary_search(drop.begin(), drop.end(), i)) {
                if (i < order_.eliminated) ++removed_in_block;
                continue;
            }
            vars.push_back(vars_[i]);
        }
        TermOrder order = order_;
        if (order.kind == TermOrder::Kind::elimination) order.eliminated -= removed_in_block;
        return make(std::move(vars), p(), order);
    }

private:
    // Reverse-lexicographic tie break on slots [lo, hi): the monomial with
    // the smaller exponent in the last differing variable is larger.
    static int revlex_tail(const Exp* a, const Exp* b, std::size_t lo, std::size_t hi) noexcept {
        for (std::size_t i = hi; i-- > lo;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }

    std::vector<Variable> vars_;
    PrimeField field_;
    TermOrder order_;
    std::unordered_map<std::string, std::size_t> index_;
};

inline bool same_ring(const Ring& a, const Ring& b) noexcept {
    return a == b || (a && b && a->same_as(*b));
}

}  // namespace detfsing

#endif  // DETFSING_KERNEL_RING_HPP
