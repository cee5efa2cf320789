#ifndef DETFSING_LATTICE_HPP
#define DETFSING_LATTICE_HPP

// Closure of a seed set of phi-compatible ideals under sum, intersection
// and colon, with DOT/JSON export.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "detfsing/frobenius.hpp"

namespace detfsing {

struct LatticeNode {
    Ideal ideal;
    std::string key;     // canonical text of the reduced basis
    std::string origin;  // e.g. "seed 0", "sum(n2,n3)", "colon(n4,x[1,2])"
};

struct CompatibleLattice {
    PhiMap phi;
    std::vector<LatticeNode> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // covering relations, smaller -> larger
    bool complete = true;

    std::optional<std::size_t> find(const std::string& key) const {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].key == key) return i;
        return std::nullopt;
    }
    std::vector<Ideal> ideals() const {
        std::vector<Ideal> out;
        for (const auto& n : nodes) out.push_back(n.ideal);
        return out;
    }
};

class SeedIncompatible : public Error {
public:
    SeedIncompatible(std::size_t index, Polynomial witness)
        : Error("seed " + std::to_string(index) + " is not compatible: " + to_string(witness)),
          index_(index), witness_(std::move(witness)) {}
    std::size_t index() const noexcept { return index_; }
    const Polynomial& witness() const noexcept { return witness_; }

private:
    std::size_t index_;
    Polynomial witness_;
};

/// Thrown when the closure outgrows the node cap; carries the partial
/// lattice, flagged incomplete.
class NodeCapExceeded : public Error {
public:
    explicit NodeCapExceeded(std::shared_ptr<const CompatibleLattice> partial)
        : Error("lattice node cap of " + std::to_string(partial->nodes.size()) + " exceeded"),
          partial_(std::move(partial)) {}
    const CompatibleLattice& partial() const noexcept { return *partial_; }

private:
    std::shared_ptr<const CompatibleLattice> partial_;
};

/// "0", "1", or the reduced basis joined by ", ".
inline std::string canonical_key(const Ideal& I, Context& ctx) {
    const auto& gb = I.groebner(ctx);
    if (gb.empty()) return "0";
    std::string s;
    for (const auto& g : gb) {
        if (!s.empty()) s += ", ";
        s += to_string(g);
    }
    return s;
}

namespace detail {

inline void hasse_edges(CompatibleLattice& L, Context& ctx) {
    const std::size_t n = L.nodes.size();
    std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));  // below[i][j]: node i ⊊ node j
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && contains(L.nodes[j].ideal, L.nodes[i].ideal, ctx)) below[i][j] = 1;
    L.edges.clear();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!below[i][j]) continue;
            bool cover = true;
            for (std::size_t k = 0; k < n && cover; ++k) cover = !(below[i][k] && below[k][j]);
            if (cover) L.edges.emplace_back(i, j);
        }
}

}  // namespace detail

/// Closes seeds ∪ {(0), (1)} under sum, intersection, colon by nodes and
/// colon by single variables. phi must split Frobenius; seeds are checked.
inline CompatibleLattice compatible_closure(const PhiMap& phi, const std::vector<Ideal>& seeds, Context& ctx,
                                            std::size_t node_cap = 512) {
    if (!is_split(phi)) throw PreconditionViolated("compatible_closure: phi does not split Frobenius");
    const Ring& R = phi.ring();
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (!same_ring(seeds[i].ring(), R)) throw std::invalid_argument("compatible_closure: seed in a foreign ring");
        if (auto w = compatibility_witness(phi, seeds[i], ctx)) throw SeedIncompatible(i, *w);
    }

    CompatibleLattice L{phi, {}, {}, true};
    auto add = [&](const Ideal& I, std::string origin) {
        std::string key = canonical_key(I, ctx);
        if (L.find(key)) return;
        if (L.nodes.size() >= node_cap) {
            L.complete = false;
            detail::hasse_edges(L, ctx);
            throw NodeCapExceeded(std::make_shared<const CompatibleLattice>(L));
        }
        if (auto w = compatibility_witness(phi, I, ctx))
            throw std::logic_error("closure produced an incompatible ideal: " + to_string(*w));
        L.nodes.push_back({Ideal::from_basis(R, I.groebner(ctx)), std::move(key), std::move(origin)});
    };
    add(Ideal::zero(R), "zero");
    add(Ideal::unit(R), "unit");
    for (std::size_t i = 0; i < seeds.size(); ++i) add(seeds[i], "seed " + std::to_string(i));

    auto id = [](std::size_t i) { return "n" + std::to_string(i); };
    for (std::size_t i = 0; i < L.nodes.size(); ++i) {
        for (std::size_t v = 0; v < R->nvars(); ++v) {
            const Ideal N = L.nodes[i].ideal;
            add(colon(N, Polynomial::variable(R, v), ctx), "colon(" + id(i) + "," + R->var(v).name() + ")");
        }
        for (std::size_t j = 0; j <= i; ++j) {
            const Ideal A = L.nodes[i].ideal, B = L.nodes[j].ideal;
            add(sum(A, B), "sum(" + id(i) + "," + id(j) + ")");
            add(intersect(A, B, ctx), "intersect(" + id(i) + "," + id(j) + ")");
            if (!B.is_zero()) add(colon(A, B, ctx), "colon(" + id(i) + "," + id(j) + ")");
            if (!A.is_zero() && i != j) add(colon(B, A, ctx), "colon(" + id(j) + "," + id(i) + ")");
        }
    }
    detail::hasse_edges(L, ctx);
    return L;
}

/// A DOT digraph over the nodes, followed by a JSON node table on one line.
inline std::string lattice_export(const CompatibleLattice& L) {
    std::string dot = "digraph lattice {\n";
    for (std::size_t i = 0; i < L.nodes.size(); ++i) {
        std::string label = L.nodes[i].key == "0" ? "(0)" : "(" + L.nodes[i].key + ")";
        dot += "  n" + std::to_string(i) + " [label=" + nlohmann::json(label).dump() + "];\n";
    }
    for (auto [a, b] : L.edges) dot += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    dot += "}\n";
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < L.nodes.size(); ++i) {
        nlohmann::ordered_json gens = nlohmann::ordered_json::array();
        Context ctx;  // node bases are cached
        for (const auto& g : L.nodes[i].ideal.groebner(ctx)) gens.push_back(to_string(g));
        table.push_back({{"id", "n" + std::to_string(i)}, {"origin", L.nodes[i].origin}, {"generators", gens}});
    }
    nlohmann::ordered_json doc = {{"nodes", table}, {"edges", L.edges.size()}, {"complete", L.complete}};
    return dot + doc.dump() + "\n";
}

}  // namespace detfsing

#endif  // DETFSING_LATTICE_HPP
