#ifndef DETFSING_VERIFY_HPP
#define DETFSING_VERIFY_HPP

// Named checks with three-valued verdicts, and the suite runner.

#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "detfsing/determinantal.hpp"
#include "detfsing/frobenius.hpp"

namespace detfsing {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, inconclusive };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

inline std::optional<Verdict> verdict_from_name(const std::string& s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    if (s == "inconclusive") return Verdict::inconclusive;
    return std::nullopt;
}

/// fail dominates inconclusive, which dominates pass.
inline Verdict worst(Verdict a, Verdict b) {
    auto rank = [](Verdict v) { return v == Verdict::fail ? 2 : v == Verdict::inconclusive ? 1 : 0; };
    return rank(a) >= rank(b) ? a : b;
}

struct VerificationReport {
    std::string check;
    Json params = Json::object();
    Verdict verdict = Verdict::inconclusive;
    Json witness = Json::object();
    GBStats stats;

    bool operator==(const VerificationReport&) const = default;
};

/// Canonical text, abbreviated past `max_terms` terms.
inline std::string poly_text(const Polynomial& f, std::size_t max_terms = 24) {
    if (f.size() <= max_terms) return to_string(f);
    return "<" + std::to_string(f.size()) + " terms of degree " + std::to_string(f.degree()) + ">";
}

namespace detail {

/// Runs `body` under a fresh Context; budget exhaustion becomes an
/// inconclusive verdict that records the exhausted resource.
inline VerificationReport run_check(std::string check, Json params, const Budget& budget,
                                    const std::function<Verdict(Context&, Json&)>& body) {
    VerificationReport r{std::move(check), std::move(params), Verdict::inconclusive, Json::object(), {}};
    Context ctx(budget);
    try {
        r.verdict = body(ctx, r.witness);
    } catch (const BudgetExceeded& e) {
        r.verdict = Verdict::inconclusive;
        r.witness["budget_exhausted"] = e.resource();
        r.witness["at"] = {{"spairs", e.stats().spairs_processed},
                           {"reductions", e.stats().reductions},
                           {"max_degree", e.stats().max_degree_seen}};
    }
    r.stats = ctx.stats();
    return r;
}

inline Json spec_params(const DeterminantalSpec& s) { return {{"m", s.m}, {"n", s.n}, {"t", s.t}}; }

inline Json spec_params(const DeterminantalSpec& s, unsigned p) {
    Json j = spec_params(s);
    j["p"] = p;
    return j;
}

/// Mutual containment up to radical; returns the first offending generator.
struct RadicalComparison {
    std::optional<Polynomial> left_not_in_right;  // generator of A outside √B
    std::optional<Polynomial> right_not_in_left;
    bool equal() const { return !left_not_in_right && !right_not_in_left; }
};

inline RadicalComparison compare_radicals(const Ideal& A, const Ideal& B, Context& ctx) {
    RadicalComparison out;
    for (const auto& g : A.groebner(ctx))
        if (!radical_member(g, B, ctx)) {
            out.left_not_in_right = g;
            break;
        }
    for (const auto& g : B.groebner(ctx))
        if (!radical_member(g, A, ctx)) {
            out.right_not_in_left = g;
            break;
        }
    return out;
}

}  // namespace detail

/// Krull dimension of S/I_t against (t-1)(m+n-t+1), the height against
/// (m-t+1)(n-t+1), and for t >= 2 a drop of exactly one for the divisor.
inline VerificationReport verify_dimension(const DeterminantalSpec& spec, std::uint32_t p = 2,
                                           const Budget& budget = {}) {
    spec.validate();
    return detail::run_check("dim", detail::spec_params(spec), budget, [&](Context& ctx, Json& w) {
        auto D = determinantal(spec, p);
        const unsigned m = spec.m, n = spec.n, t = spec.t;
        const unsigned expected = (t - 1) * (m + n - t + 1);
        const unsigned d = krull_dim(D.presentation, ctx);
        w["dim"] = d;
        w["expected_dim"] = expected;
        w["height"] = m * n - d;
        w["expected_height"] = (m - t + 1) * (n - t + 1);
        bool ok = d == expected && m * n - d == (m - t + 1) * (n - t + 1);
        if (t >= 2) {
            const unsigned dd = krull_dim(D.divisor, ctx);
            w["divisor_dim"] = dd;
            ok = ok && dd + 1 == d;
        }
        return ok ? Verdict::pass : Verdict::fail;
    });
}

/// Phi . Delta^{p-1} splits Frobenius and is compatible with I_t and with
/// the divisor preimage.
inline VerificationReport verify_split_and_compat(const DeterminantalSpec& spec, std::uint32_t p,
                                                  const Budget& budget = {}) {
    spec.validate();
    return detail::run_check("split", detail::spec_params(spec, p), budget, [&](Context& ctx, Json& w) {
        auto D = determinantal(spec, p);
        PhiMap phi(splitting_delta(D.x).pow(p - 1), 1);
        Polynomial one = phi_apply(phi, Polynomial::constant(D.ring(), 1));
        w["phi_of_one"] = poly_text(one);
        if (!one.is_one()) return Verdict::fail;
        auto check = [&](const Ideal& I, const char* name) {
            if (auto rem = compatibility_witness(phi, I, ctx)) {
                w["incompatible"] = name;
                w["remainder"] = to_string(*rem);
                return false;
            }
            return true;
        };
        if (!check(D.presentation, "presentation")) return Verdict::fail;
        if (spec.t >= 2 && !check(D.divisor, "divisor")) return Verdict::fail;
        w["compatible"] = spec.t >= 2 ? Json::array({"presentation", "divisor"}) : Json::array({"presentation"});
        return Verdict::pass;
    });
}

/// I_t(y) + I_t(z) against I_t(x) ∩ I_{t-1}(w), with y, z the first and last
/// m-1 rows and w the m-2 rows in between. Exact equality is tried first;
/// mutual radical containment is the fallback, and the level is reported.
inline VerificationReport verify_row_decomposition(unsigned m, unsigned n, unsigned t, std::uint32_t p = 2,
                                                   const Budget& budget = {}) {
    if (m < 3) throw std::invalid_argument("row decomposition needs m >= 3");
    if (t < 2 || t > m - 1 || t > n) throw std::invalid_argument("row decomposition needs 2 <= t <= min(m-1, n)");
    Json params = {{"m", m}, {"n", n}, {"t", t}};
    return detail::run_check("rowdec", params, budget, [&](Context& ctx, Json& w) {
        PolyMatrix x = generic_matrix(m, n, p);
        Ideal lhs = sum(minors_ideal(x.block(0, m - 1, 0, n), t), minors_ideal(x.block(1, m - 1, 0, n), t));
        Ideal rhs = intersect(minors_ideal(x, t), minors_ideal(x.block(1, m - 2, 0, n), t - 1), ctx);
        if (ideal_equal(lhs, rhs, ctx)) {
            w["level"] = "exact";
            return Verdict::pass;
        }
        auto cmp = detail::compare_radicals(lhs, rhs, ctx);
        if (cmp.equal()) {
            w["level"] = "radical";
            return Verdict::pass;
        }
        w["level"] = "none";
        if (cmp.left_not_in_right) w["sum_generator_outside"] = to_string(*cmp.left_not_in_right);
        if (cmp.right_not_in_left) w["intersection_generator_outside"] = to_string(*cmp.right_not_in_left);
        return Verdict::fail;
    });
}

/// √(gamma_1..gamma_h) = I_r(x) ∩ I_{r-1}(last r-1 columns) for an r x n
/// matrix.
inline VerificationReport verify_gamma_decomposition(unsigned r, unsigned n, std::uint32_t p = 2,
                                                     const Budget& budget = {}) {
    if (r < 2 || r > n) throw std::invalid_argument("gamma decomposition needs 2 <= r <= n");
    Json params = {{"r", r}, {"n", n}};
    return detail::run_check("gammadec", params, budget, [&](Context& ctx, Json& w) {
        PolyMatrix x = generic_matrix(r, n, p);
        auto gammas = gamma_minors(x);
        Ideal G(x.ring(), gammas);
        Ideal A = minors_ideal(x, r);
        Ideal B = minors_ideal(x.block(0, r, n - r + 1, r - 1), r - 1);
        for (std::size_t i = 0; i < gammas.size(); ++i) {
            if (!member(gammas[i], A, ctx) || !member(gammas[i], B, ctx)) {
                w["gamma_outside_factor"] = i + 1;
                w["gamma"] = to_string(gammas[i]);
                return Verdict::fail;
            }
        }
        Ideal K = intersect(A, B, ctx);
        for (const auto& g : K.groebner(ctx)) {
            if (!radical_member(g, G, ctx)) {
                w["generator_outside_radical"] = to_string(g);
                return Verdict::fail;
            }
        }
        w["h"] = gammas.size();
        w["intersection_generators"] = K.groebner(ctx).size();
        return Verdict::pass;
    });
}

/// For each i, (gamma_1^p, ..., gamma_h^p) : Delta^{p-1} gamma_i has a
/// generator outside I_{t-1}(x'), the gammas taken from the first t-1 rows.
inline VerificationReport verify_local_membership(const DeterminantalSpec& spec, std::uint32_t p,
                                                  const Budget& budget = {}) {
    spec.validate();
    if (spec.t < 2) throw std::invalid_argument("local membership needs t >= 2");
    return detail::run_check("local", detail::spec_params(spec, p), budget, [&](Context& ctx, Json& w) {
        PolyMatrix x = generic_matrix(spec.m, spec.n, p);
        PolyMatrix xp = x.block(0, spec.t - 1, 0, spec.n);
        auto gammas = gamma_minors(xp);
        std::vector<Polynomial> powers;
        for (const auto& g : gammas) powers.push_back(g.frobenius(1));
        Ideal J(x.ring(), powers);
        Ideal prime = minors_ideal(xp, spec.t - 1);
        Polynomial base = splitting_delta(x).pow(p - 1);
        w["h"] = gammas.size();
        Json found = Json::array();
        for (std::size_t i = 0; i < gammas.size(); ++i) {
            Ideal Q = colon(J, base * gammas[i], ctx);
            std::optional<Polynomial> escape;
            for (const auto& g : Q.groebner(ctx))
                if (!member(g, prime, ctx)) {
                    escape = g;
                    break;
                }
            if (!escape) {
                w["failed_index"] = i + 1;
                w["colon_generators"] = Json::array();
                for (const auto& g : Q.groebner(ctx)) w["colon_generators"].push_back(to_string(g));
                return Verdict::fail;
            }
            found.push_back({{"i", i + 1}, {"multiplier", poly_text(*escape)}});
        }
        w["escaping"] = std::move(found);
        return Verdict::pass;
    });
}

/// beta_{t-2}^k beta_{t+k-1} = ± det Gamma_k, as exact polynomials.
inline VerificationReport verify_sylvester(const DeterminantalSpec& spec, unsigned k, std::uint32_t p = 2,
                                           const Budget& budget = {}) {
    spec.validate();
    Json params = detail::spec_params(spec);
    params["k"] = k;
    PolyMatrix x = generic_matrix(spec.m, spec.n, p);
    sylvester_instance(x, spec.t, k);  // parameter validation up front
    return detail::run_check("sylvester", params, budget, [&](Context&, Json& w) {
        auto inst = sylvester_instance(x, spec.t, k);
        w["sign"] = inst.sign;
        w["lhs_terms"] = inst.lhs.size();
        if (inst.sign == 0) {
            w["lhs"] = to_string(inst.lhs);
            w["rhs"] = to_string(inst.rhs);
            return Verdict::fail;
        }
        return Verdict::pass;
    });
}

/// Extends the m x n matrix by `added` columns and compares, up to radical
/// and modulo I_t of the wide matrix, the extended divisor ideal with the
/// intersection of the wide divisor ideal and I_{t-1} of the original
/// columns.
inline VerificationReport verify_extension_decomposition(unsigned m, unsigned n, unsigned t, unsigned added,
                                                         std::uint32_t p = 2, const Budget& budget = {}) {
    if (!(m >= n && n >= t && t >= 2)) throw std::invalid_argument("extension needs m >= n >= t >= 2");
    if (added < 1) throw std::invalid_argument("extension needs at least one added column");
    Json params = {{"m", m}, {"n", n}, {"t", t}, {"cols_added", added}};
    return detail::run_check("extension", params, budget, [&](Context& ctx, Json& w) {
        PolyMatrix x = generic_matrix(m, n + added, p);
        Ideal It = minors_ideal(x, t);
        Ideal extended = sum(minors_ideal(x.block(0, t - 1, 0, n), t - 1), It);
        Ideal wide = sum(minors_ideal(x.block(0, t - 1, 0, n + added), t - 1), It);
        Ideal original = sum(minors_ideal(x.block(0, m, 0, n), t - 1), It);
        Ideal rhs = intersect(wide, original, ctx);
        auto cmp = detail::compare_radicals(extended, rhs, ctx);
        if (cmp.equal()) {
            w["level"] = ideal_equal(extended, rhs, ctx) ? "exact" : "radical";
            return Verdict::pass;
        }
        if (cmp.left_not_in_right) w["extended_generator_outside"] = to_string(*cmp.left_not_in_right);
        if (cmp.right_not_in_left) w["intersection_generator_outside"] = to_string(*cmp.right_not_in_left);
        return Verdict::fail;
    });
}

namespace detail {

inline Json sweep_json(const Polynomial& c, const SweepOutcome& s) {
    Json j = {{"c", poly_text(c)}};
    if (s.confirmed()) {
        j["confirmed_e"] = *s.confirmed_e;
        j["witness"] = poly_text(*s.trace.back().witness);
    } else {
        j["confirmed_e"] = nullptr;
        j["tried_e"] = s.trace.size();
    }
    if (!s.note.empty()) j["note"] = s.note;
    return j;
}

/// A Glassbrenner sweep that reports budget exhaustion instead of raising.
inline Json attached_sweep(const Ideal& I, const Polynomial& c, unsigned e_max, const Budget& budget) {
    Context ctx(budget);
    try {
        return sweep_json(c, glassbrenner_f_regular(I, c, e_max, ctx));
    } catch (const BudgetExceeded& e) {
        return {{"c", poly_text(c)}, {"confirmed_e", nullptr}, {"budget_exhausted", e.resource()}};
    }
}

}  // namespace detail

/// Fedder's criterion for I_t and for the divisor preimage; Glassbrenner
/// sweeps for both are attached as evidence but do not decide the verdict.
/// The sweeps run on a tenth of the check's budget.
inline VerificationReport verify_fedder_purity(const DeterminantalSpec& spec, std::uint32_t p, unsigned e_max = 3,
                                               const Budget& budget = {}) {
    spec.validate();
    Json params = detail::spec_params(spec, p);
    params["e_max"] = e_max;
    return detail::run_check("fedder", params, budget, [&](Context& ctx, Json& w) {
        auto D = determinantal(spec, p);
        auto check = [&](const Ideal& I, const char* name) {
            auto g = fedder_witness(I, ctx);
            if (g) w[name] = {{"f_pure", true}, {"colon_generator", poly_text(*g)}};
            else w[name] = {{"f_pure", false}};
            return g.has_value();
        };
        bool ok = check(D.presentation, "presentation");
        if (spec.t >= 2) ok = check(D.divisor, "divisor") && ok;
        if (!ok) return Verdict::fail;
        Budget sub = budget;
        sub.max_reductions = budget.max_reductions / 10;
        sub.max_seconds = budget.max_seconds / 10;
        const std::size_t n = spec.n, m = spec.m;
        Json sweeps = Json::object();
        sweeps["presentation"] = detail::attached_sweep(D.presentation, D.x(0, 0), e_max, sub);
        if (spec.t >= 2) sweeps["divisor"] = detail::attached_sweep(D.divisor, D.x(m - 1, n - 1), e_max, sub);
        w["glassbrenner"] = std::move(sweeps);
        return Verdict::pass;
    });
}

/// The candidate test elements for a pair: variables outside ptilde, Delta
/// and beta_{t-2}, minus anything that lies in ptilde.
struct TestElementPool {
    std::vector<std::pair<std::string, Polynomial>> members;
    std::vector<std::string> excluded;
};

inline TestElementPool default_pool(const Ring& R, const Ideal& ptilde, const Polynomial& delta,
                                    const Polynomial& beta, Context& ctx) {
    TestElementPool pool;
    auto offer = [&](std::string name, const Polynomial& c) {
        if (member(c, ptilde, ctx)) pool.excluded.push_back(std::move(name));
        else pool.members.emplace_back(std::move(name), c);
    };
    for (std::size_t i = 0; i < R->nvars(); ++i) {
        Polynomial v = Polynomial::variable(R, i);
        if (!member(v, ptilde, ctx)) pool.members.emplace_back(R->var(i).name(), v);
    }
    offer("Delta", delta);
    offer("beta_t-2", beta);
    return pool;
}

/// Every c in the pool confirms c ((I^[q]:I) ∩ (ptilde^[q]:ptilde)) ⊄ m^[q]
/// for some e <= e_max. Running out of e is inconclusive, never a failure.
inline VerificationReport verify_pure_f_regularity(const DeterminantalSpec& spec, std::uint32_t p, unsigned e_max = 2,
                                                   const Budget& budget = {}) {
    spec.validate();
    if (spec.t < 2) throw std::invalid_argument("pure F-regularity needs t >= 2");
    Json params = detail::spec_params(spec, p);
    params["e_max"] = e_max;
    return detail::run_check("pure-freg", params, budget, [&](Context& ctx, Json& w) {
        auto D = determinantal(spec, p);
        auto pool = default_pool(D.ring(), D.divisor, splitting_delta(D.x), beta_minor(D.x, spec.t - 2), ctx);
        Verdict v = Verdict::pass;
        Json results = Json::array();
        for (const auto& [name, c] : pool.members) {
            auto s = glassbrenner_purely_f_regular(D.presentation, D.divisor, c, e_max, ctx);
            Json j = detail::sweep_json(c, s);
            j["name"] = name;
            results.push_back(std::move(j));
            if (!s.confirmed()) v = Verdict::inconclusive;
        }
        w["pool"] = std::move(results);
        w["excluded"] = pool.excluded;
        return v;
    });
}

/// The same sweep for an auxiliary pair, with the divisor preimage as
/// ptilde and its outside variables as the pool.
inline VerificationReport verify_pure_f_regularity(const AuxiliaryPair& P, unsigned e_max = 2,
                                                   const Budget& budget = {}) {
    Json params = {{"m", P.m}, {"t", P.t}, {"s", P.s}, {"p", P.ring->p()}, {"e_max", e_max}};
    return detail::run_check("pure-freg", params, budget, [&](Context& ctx, Json& w) {
        Ideal ptilde = P.divisor_preimage();
        Verdict v = Verdict::pass;
        Json results = Json::array();
        for (std::size_t i = 0; i < P.ring->nvars(); ++i) {
            Polynomial c = Polynomial::variable(P.ring, i);
            if (member(c, ptilde, ctx)) continue;
            auto s = glassbrenner_purely_f_regular(P.presentation, ptilde, c, e_max, ctx);
            results.push_back(detail::sweep_json(c, s));
            if (!s.confirmed()) v = Verdict::inconclusive;
        }
        w["pool"] = std::move(results);
        return v;
    });
}

inline std::optional<ReductionCase> reduction_case_from_name(const std::string& s) {
    if (s == "w") return ReductionCase::w_entry;
    if (s == "z") return ReductionCase::z_entry;
    if (s == "xprime") return ReductionCase::xprime_entry;
    return std::nullopt;
}

/// With the pivot set to 1, the source presentation and divisor equal the
/// target's ideals pushed through the rank-one update.
inline VerificationReport verify_reduction_identities(unsigned m, unsigned t, unsigned s, ReductionCase kind,
                                                      std::size_t row, std::size_t col, std::uint32_t p = 2,
                                                      const Budget& budget = {}) {
    AuxiliaryPair P = auxiliary_pair(m, t, s, p);
    ReductionCertificate C = reduce_at_entry(P, kind, row, col);  // validates up front
    Json params = {{"m", m}, {"t", t}, {"s", s}, {"block", case_name(kind)}, {"row", row}, {"col", col}};
    return detail::run_check("reduction", params, budget, [&](Context& ctx, Json& w) {
        w["target"] = {{"m", C.target.m}, {"t", C.target.t}, {"s", C.target.s}};
        w["updates"] = C.updates;
        bool pres = ideal_equal(C.specialize(P.presentation), C.transport(C.target.presentation), ctx);
        bool div = ideal_equal(C.specialize(P.divisor), C.transport(C.target.divisor), ctx);
        w["presentation_equal"] = pres;
        w["divisor_equal"] = div;
        if (!pres || !div) {
            const Ideal& src = pres ? P.divisor : P.presentation;
            const Ideal& tgt = pres ? C.target.divisor : C.target.presentation;
            Ideal a = C.specialize(src), b = C.transport(tgt);
            for (const auto& g : b.gens())
                if (!member(g, a, ctx)) {
                    w["target_generator_outside"] = to_string(g);
                    break;
                }
            for (const auto& g : a.gens())
                if (!member(g, b, ctx)) {
                    w["source_generator_outside"] = to_string(g);
                    break;
                }
            return Verdict::fail;
        }
        return Verdict::pass;
    });
}

/// One entry of a suite grid.
struct CheckRequest {
    std::string check;
    unsigned m = 0, n = 0, t = 0, s = 0, p = 2, k = 0, e_max = 0, r = 0, cols_added = 0;
    std::string block;
    std::size_t row = 0, col = 0;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {"dim",      "split",     "compat",    "fedder",    "freg",
                                                   "pure-freg", "rowdec",   "gammadec",  "local",     "sylvester",
                                                   "extension", "reduction"};
    return names;
}

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
}

inline void validate_spec(const CheckRequest& q) {
    require(q.m >= 1 && q.n >= 1, q.check + ": m and n must be positive");
    require(q.t >= 1 && q.t <= std::min(q.m, q.n), q.check + ": t must satisfy 1 <= t <= min(m, n)");
    require(q.m <= 6 && q.n <= 6, q.check + ": m and n are limited to 6");
}

inline void validate_prime(const CheckRequest& q) {
    require(q.p >= 2 && q.p <= kMaxPrime && is_prime(q.p), q.check + ": p must be a prime <= 46337");
}

}  // namespace detail

/// Throws UsageError when the request cannot be run.
inline void validate_request(const CheckRequest& q) {
    using detail::require;
    const std::string& c = q.check;
    require(std::find(check_names().begin(), check_names().end(), c) != check_names().end(),
            "unknown check '" + c + "'");
    detail::validate_prime(q);
    if (c == "dim" || c == "split" || c == "compat" || c == "fedder" || c == "freg") {
        detail::validate_spec(q);
    } else if (c == "pure-freg") {
        detail::validate_spec(q);
        require(q.t >= 2, "pure-freg: t must be at least 2");
    } else if (c == "rowdec") {
        require(q.m >= 3 && q.n >= 1 && q.t >= 2 && q.t <= q.m - 1 && q.t <= q.n,
                "rowdec: needs m >= 3 and 2 <= t <= min(m-1, n)");
        require(q.m <= 6 && q.n <= 6, "rowdec: m and n are limited to 6");
    } else if (c == "gammadec") {
        require(q.r >= 2 && q.r <= q.n && q.n <= 6, "gammadec: needs 2 <= r <= n <= 6");
    } else if (c == "local") {
        detail::validate_spec(q);
        require(q.t >= 2, "local: t must be at least 2");
    } else if (c == "sylvester") {
        detail::validate_spec(q);
        require(q.t >= 2 && q.t + q.k - 1 <= std::min(q.m, q.n), "sylvester: needs t >= 2 and t+k-1 <= min(m, n)");
    } else if (c == "extension") {
        require(q.m >= q.n && q.n >= q.t && q.t >= 2, "extension: needs m >= n >= t >= 2");
        require(q.cols_added >= 1 && q.m <= 5 && q.n + q.cols_added <= 6, "extension: needs 1 <= cols_added, small sizes");
    } else if (c == "reduction") {
        require(reduction_case_from_name(q.block).has_value(), "reduction: block must be w, z or xprime");
        try {
            auto P = auxiliary_pair(q.m, q.t, q.s, q.p);
            reduce_at_entry(P, *reduction_case_from_name(q.block), q.row, q.col);
        } catch (const std::exception& e) {
            throw UsageError(std::string("reduction: ") + e.what());
        }
    }
}

inline VerificationReport run_request(const CheckRequest& q, const Budget& budget = {}) {
    validate_request(q);
    const DeterminantalSpec spec{q.m, q.n, q.t};
    const std::string& c = q.check;
    const unsigned e_max = q.e_max ? q.e_max : (c == "pure-freg" ? 2 : 3);
    if (c == "dim") return verify_dimension(spec, q.p, budget);
    if (c == "split" || c == "compat") {
        auto r = verify_split_and_compat(spec, q.p, budget);
        r.check = c;
        return r;
    }
    if (c == "fedder") return verify_fedder_purity(spec, q.p, e_max, budget);
    if (c == "freg") {
        Json params = detail::spec_params(spec, q.p);
        params["e_max"] = e_max;
        return detail::run_check("freg", params, budget, [&](Context& ctx, Json& w) {
            auto D = determinantal(spec, q.p);
            auto s = glassbrenner_f_regular(D.presentation, D.x(0, 0), e_max, ctx);
            w = detail::sweep_json(D.x(0, 0), s);
            return s.confirmed() ? Verdict::pass : Verdict::inconclusive;
        });
    }
    if (c == "pure-freg") return verify_pure_f_regularity(spec, q.p, e_max, budget);
    if (c == "rowdec") return verify_row_decomposition(q.m, q.n, q.t, q.p, budget);
    if (c == "gammadec") return verify_gamma_decomposition(q.r, q.n, q.p, budget);
    if (c == "local") return verify_local_membership(spec, q.p, budget);
    if (c == "sylvester") return verify_sylvester(spec, q.k, q.p, budget);
    if (c == "extension") return verify_extension_decomposition(q.m, q.n, q.t, q.cols_added, q.p, budget);
    return verify_reduction_identities(q.m, q.t, q.s, *reduction_case_from_name(q.block), q.row, q.col, q.p, budget);
}

struct SuiteOptions {
    Budget budget;
    unsigned workers = 1;
};

/// Validates every request, then runs them (in parallel up to `workers`).
/// Reports come back in request order.
inline std::vector<VerificationReport> run_suite(const std::vector<CheckRequest>& grid, const SuiteOptions& opt = {}) {
    for (const auto& q : grid) validate_request(q);
    std::vector<VerificationReport> out(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) out[i] = run_request(grid[i], opt.budget);
    };
    const unsigned n = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(grid.size())));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

inline Verdict overall(const std::vector<VerificationReport>& reports) {
    Verdict v = Verdict::pass;
    for (const auto& r : reports) v = worst(v, r.verdict);
    return v;
}

/// The specs and primes the default suite runs over.
inline const std::vector<DeterminantalSpec>& default_specs() {
    static const std::vector<DeterminantalSpec> specs = {{2, 2, 2}, {2, 3, 2}, {3, 3, 2}, {3, 3, 3}, {3, 4, 3}};
    return specs;
}

inline std::vector<CheckRequest> default_grid() {
    std::vector<CheckRequest> g;
    auto req = [](std::string check, const DeterminantalSpec& s, unsigned p) {
        CheckRequest q;
        q.check = std::move(check);
        q.m = s.m, q.n = s.n, q.t = s.t, q.p = p;
        return q;
    };
    for (const auto& s : default_specs()) {
        g.push_back(req("dim", s, 2));
        for (unsigned p : {2u, 3u}) {
            g.push_back(req("split", s, p));
            g.push_back(req("fedder", s, p));
            g.push_back(req("local", s, p));
        }
        for (unsigned k = 0; s.t + k - 1 <= std::min(s.m, s.n) && k <= 1; ++k) {
            auto q = req("sylvester", s, 2);
            q.k = k;
            g.push_back(q);
        }
        if (s.m >= 3 && s.t <= s.m - 1) g.push_back(req("rowdec", s, 2));
        if (s.m >= s.n) {
            auto q = req("extension", s, 2);
            q.cols_added = 1;
            g.push_back(q);
        }
        if ((s == DeterminantalSpec{2, 2, 2}) || (s == DeterminantalSpec{2, 3, 2})) {
            auto q = req("pure-freg", s, 2);
            q.e_max = 2;
            g.push_back(q);
        }
    }
    for (auto [r, n] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 4u}}) {
        CheckRequest q;
        q.check = "gammadec", q.r = r, q.n = n;
        g.push_back(q);
    }
    auto reduction = [&](unsigned m, unsigned t, unsigned s, const char* block, std::size_t row, std::size_t col) {
        CheckRequest q;
        q.check = "reduction", q.m = m, q.t = t, q.s = s, q.block = block, q.row = row, q.col = col;
        g.push_back(q);
    };
    reduction(2, 2, 1, "w", 1, 1);
    reduction(2, 2, 2, "z", 1, 1);
    reduction(3, 2, 2, "xprime", 1, 1);
    return g;
}

}  // namespace detfsing

#endif  // DETFSING_VERIFY_HPP
