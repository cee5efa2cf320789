// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any fails. Optional argv[1] is the path of the detfsing executable; when
// given, the determinism criterion runs it as two separate processes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "detfsing/cli.hpp"
#include "test_support.hpp"

using namespace detfsing;
using namespace detfsing::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) note << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

using Criterion = std::function<void(Outcome&)>;

std::string label(const DeterminantalSpec& s) {
    return "(" + std::to_string(s.m) + "," + std::to_string(s.n) + "," + std::to_string(s.t) + ")";
}

void require_report(Outcome& o, const VerificationReport& r, const std::string& where) {
    o.require(r.verdict == Verdict::pass, r.check + " " + where + " -> " + verdict_name(r.verdict) + " " + r.witness.dump());
}

const std::vector<DeterminantalSpec> grid = {{2, 2, 2}, {2, 3, 2}, {3, 3, 2}, {3, 3, 3}, {3, 4, 3}};

// ---- independent oracles for the invariant suites

// Schoolbook division using only the public Polynomial API.
Polynomial naive_remainder(Polynomial f, const std::vector<Polynomial>& G) {
    const Ring& R = f.ring();
    const std::size_t s = R->stride();
    Polynomial rem(R);
    std::vector<Exp> q(s);
    while (!f.is_zero()) {
        const Exp* lm = f.leading_mono();
        bool divided = false;
        for (const auto& g : G) {
            if (!mono::divides(g.leading_mono(), lm, s)) continue;
            mono::quotient(q.data(), lm, g.leading_mono(), s);
            Coeff c = R->field().mul(f.leading_coeff(), R->field().inv(g.leading_coeff()));
            f = f - g.times_term(q.data(), c);
            divided = true;
            break;
        }
        if (!divided) {
            Polynomial lead = Polynomial::term(R, f.exponents(0), f.leading_coeff());
            rem = rem + lead;
            f = f - lead;
        }
    }
    return rem;
}

// S-polynomial from scratch: lcm/lt(f) * f / lc(f) - lcm/lt(g) * g / lc(g).
Polynomial s_pair(const Polynomial& f, const Polynomial& g) {
    const Ring& R = f.ring();
    const std::size_t s = R->stride();
    std::vector<Exp> l(s), a(s), b(s);
    mono::lcm(l.data(), f.leading_mono(), g.leading_mono(), s);
    mono::quotient(a.data(), l.data(), f.leading_mono(), s);
    mono::quotient(b.data(), l.data(), g.leading_mono(), s);
    const auto& F = R->field();
    return f.times_term(a.data(), F.inv(f.leading_coeff())) - g.times_term(b.data(), F.inv(g.leading_coeff()));
}

// Frobenius trace from its definition on monomials: x^a maps to x^((a-(q-1))/q)
// when every a_i is congruent to q-1 mod q, else to 0.
Polynomial trace_oracle(const Polynomial& f, unsigned e) {
    const Ring& R = f.ring();
    Exp q = 1;
    for (unsigned i = 0; i < e; ++i) q *= R->p();
    Polynomial out(R);
    for (std::size_t k = 0; k < f.size(); ++k) {
        auto ex = f.exponents(k);
        bool keep = true;
        for (auto& v : ex) {
            if (v % q != q - 1) keep = false;
            v /= q;
        }
        if (keep) out = out + Polynomial::term(R, ex, f.coeff(k));
    }
    return out;
}

Ideal map_ideal(const Ideal& I, const Ring& target, const std::vector<Polynomial>& images) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(substitute(g, target, images));
    return Ideal(target, std::move(gens));
}

std::string strip_elapsed(const std::string& text) {
    std::istringstream is(text);
    std::string out;
    for (std::string line; std::getline(is, line);) {
        if (line.empty()) continue;
        auto j = Json::parse(line);
        j["stats"].erase("elapsed_ms");
        out += j.dump() + "\n";
    }
    return out;
}

std::string run_binary(const std::string& exe, const std::string& args) {
    std::string out;
    FILE* pipe = ::popen(("\"" + exe + "\" " + args).c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot run " + exe);
    char buf[4096];
    for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, got);
    if (::pclose(pipe) != 0) throw std::runtime_error(exe + " " + args + " did not pass");
    return out;
}

// ---- criteria

void split_and_compat(Outcome& o) {
    double slowest = 0;
    for (const auto& s : grid)
        for (std::uint32_t p : {2u, 3u}) {
            auto r = verify_split_and_compat(s, p);
            require_report(o, r, label(s) + " p=" + std::to_string(p));
            o.require(r.stats.elapsed_ms <= 120000, "wall clock over 120 s at " + label(s));
            slowest = std::max(slowest, r.stats.elapsed_ms);
        }
    o.note << "10 checks, slowest " << slowest << " ms";
}

void dimension(Outcome& o) {
    int n_checked = 0;
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 1; n <= 4; ++n)
            for (unsigned t = 1; t <= std::min(m, n); ++t) {
                DeterminantalSpec s{m, n, t};
                auto r = verify_dimension(s);
                require_report(o, r, label(s));
                const auto& w = r.witness;
                o.require(w.at("dim") == (t - 1) * (m + n - t + 1), "dim formula at " + label(s));
                if (t >= 2) o.require(w.at("divisor_dim").get<unsigned>() + 1 == w.at("dim").get<unsigned>(),
                                      "divisor height drop at " + label(s));
                ++n_checked;
            }
    o.note << n_checked << " specs";
}

void row_decomposition(Outcome& o) {
    for (auto [m, n] : {std::pair{3u, 3u}, {3u, 4u}}) {
        auto r = verify_row_decomposition(m, n, 2);
        require_report(o, r, label({m, n, 2}));
        o.require(r.witness.value("level", "") == "exact", "exact equality at " + label({m, n, 2}));
    }
    auto r = verify_row_decomposition(4, 4, 3);
    require_report(o, r, "(4,4,3)");
    std::string level = r.witness.value("level", "");
    o.require(level == "exact" || level == "radical", "(4,4,3) level recorded");
    o.note << "(4,4,3) level " << level;
}

void gamma_decomposition(Outcome& o) {
    for (auto [r, n] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 4u}})
        require_report(o, verify_gamma_decomposition(r, n), "r=" + std::to_string(r) + " n=" + std::to_string(n));
    o.note << "3 instances";
}

void local_membership(Outcome& o) {
    require_report(o, verify_local_membership({2, 3, 2}, 2), "(2,3,2) p=2");
    require_report(o, verify_local_membership({2, 3, 2}, 3), "(2,3,2) p=3");
    require_report(o, verify_local_membership({3, 4, 3}, 2), "(3,4,3) p=2");
    o.note << "3 instances";
}

void sylvester(Outcome& o) {
    int count = 0;
    for (unsigned m = 2; m <= 4; ++m)
        for (unsigned n = 2; n <= 4; ++n)
            for (unsigned t = 2; t <= std::min(m, n); ++t) {
                require_report(o, verify_sylvester({m, n, t}, 0), label({m, n, t}) + " k=0");
                ++count;
            }
    require_report(o, verify_sylvester({2, 3, 2}, 1), "(2,3,2) k=1");
    require_report(o, verify_sylvester({3, 4, 3}, 1), "(3,4,3) k=1");
    o.note << count << " instances at k=0, 2 at k=1";
}

void extension(Outcome& o) {
    for (const auto& s : {DeterminantalSpec{2, 2, 2}, {3, 3, 2}, {3, 3, 3}}) {
        auto r = verify_extension_decomposition(s.m, s.n, s.t, 1);
        require_report(o, r, label(s));
    }
    o.note << "3 instances";
}

void pure_f_regularity(Outcome& o) {
    std::size_t confirmed = 0;
    for (const auto& s : {DeterminantalSpec{2, 2, 2}, {2, 3, 2}}) {
        auto r = verify_pure_f_regularity(s, 2, 2);
        require_report(o, r, label(s));
        const auto& pool = r.witness.at("pool");
        o.require(!pool.empty(), "nonempty pool at " + label(s));
        for (const auto& c : pool) {
            o.require(!c.at("confirmed_e").is_null(), c.dump());
            confirmed += !c.at("confirmed_e").is_null();
        }
    }
    o.note << confirmed << " test elements confirmed";
}

void fedder(Outcome& o) {
    int count = 0;
    for (const auto& s : grid) {
        if (s.m > 3 || s.n > 3) continue;
        for (std::uint32_t p : {2u, 3u}) {
            require_report(o, verify_fedder_purity(s, p), label(s) + " p=" + std::to_string(p));
            ++count;
        }
    }
    o.note << count << " checks";
}

void reductions(Outcome& o) {
    require_report(o, verify_reduction_identities(2, 2, 1, ReductionCase::w_entry, 1, 1), "w (2,2,1)");
    require_report(o, verify_reduction_identities(2, 2, 2, ReductionCase::z_entry, 1, 1), "z (2,2,2)");
    require_report(o, verify_reduction_identities(3, 2, 2, ReductionCase::xprime_entry, 1, 1), "xprime (3,2,2)");
    o.note << "w, z and xprime";
}

void invariant_suites(Outcome& o) {
    std::mt19937_64 rng(20260101);
    const std::uint32_t primes[] = {2, 3, 5};

    // Groebner soundness: generators and all S-pairs reduce to zero by naive division.
    int ideals = 0;
    for (int k = 0; k < 120; ++k) {
        auto R = row_ring(2 + k % 4, primes[k % 3]);
        std::vector<Polynomial> gens;
        for (int g = 0; g <= k % 3; ++g) gens.push_back(random_poly(rng, R, 3, 4));
        Context ctx;
        auto G = groebner_basis(R, gens, ctx);
        bool sound = true;
        for (const auto& f : gens) sound = sound && naive_remainder(f, G).is_zero();
        for (std::size_t i = 0; i < G.size(); ++i)
            for (std::size_t j = i + 1; j < G.size(); ++j) sound = sound && naive_remainder(s_pair(G[i], G[j]), G).is_zero();
        o.require(sound, "Groebner soundness on ideal " + std::to_string(k));
        ++ideals;
    }

    // projection formula and trace composition
    int polys = 0;
    for (int k = 0; k < 120; ++k) {
        auto R = row_ring(3, primes[k % 2]);
        unsigned e = 1 + k % 2;
        auto f = random_poly(rng, R, 3, 2), g = random_poly(rng, R, 10, 4 * R->p() * R->p());
        o.require(trace_apply(g, e) == trace_oracle(g, e), "trace matches its definition");
        o.require(trace_apply(f.frobenius(e) * g, e) == f * trace_apply(g, e), "projection formula");
        o.require(trace_apply(trace_apply(g, 1), 1) == trace_apply(g, 2), "trace composition");
        Polynomial a = random_poly(rng, R, 2, 3);
        if (!a.is_zero()) {
            PhiMap phi(a, 1);
            o.require(phi_apply(phi, f.frobenius(1) * g) == f * phi_apply(phi, g), "projection formula for Phi . a");
        }
        ++polys;
    }

    // bracket powers: independent of generators, and composing
    for (int k = 0; k < 30; ++k) {
        auto R = row_ring(3, primes[k % 2]);
        Context ctx;
        Ideal I(R, {random_poly(rng, R, 3, 2), random_poly(rng, R, 2, 2)});
        Ideal other(R, I.groebner(ctx));
        o.require(ideal_equal(bracket_power(I, 1), bracket_power(other, 1), ctx), "bracket power generator independence");
        o.require(ideal_equal(bracket_power(bracket_power(I, 1), 1), bracket_power(I, 2), ctx), "bracket composition");
    }

    // closure of the determinantal seeds
    for (std::uint32_t p : {2u, 3u})
        for (const auto& s : {DeterminantalSpec{2, 2, 2}, {2, 3, 2}, {3, 3, 2}}) {
            auto D = determinantal(s, p);
            Context ctx;
            PhiMap phi(splitting_delta(D.x).pow(p - 1), 1);
            std::vector<Ideal> seeds{D.presentation, D.divisor};
            for (const auto& a : seeds)
                for (const auto& b : seeds) {
                    o.require(is_compatible(phi, sum(a, b), ctx), "sum closure at " + label(s));
                    o.require(is_compatible(phi, intersect(a, b, ctx), ctx), "intersection closure at " + label(s));
                    o.require(is_compatible(phi, colon(a, b, ctx), ctx), "colon closure at " + label(s));
                }
        }

    // an unused extra variable changes no verdict on (2,2,2)
    for (std::uint32_t p : {2u, 3u}) {
        auto D = determinantal({2, 2, 2}, p);
        auto vars = block_variables(Block::x, 2, 2);
        vars.push_back({Block::r, 1, 1});
        Ring big = RingContext::make(vars, p);
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < 4; ++i) images.push_back(Polynomial::variable(big, i));
        auto lift = [&](const Polynomial& f) { return substitute(f, big, images); };
        Polynomial delta = splitting_delta(D.x).pow(p - 1);
        Context ctx;
        for (const auto& J : {D.presentation, D.divisor, Ideal(D.ring(), {D.x(0, 0)})}) {
            Ideal Jb = map_ideal(J, big, images);
            o.require(is_compatible(PhiMap(delta, 1), J, ctx) == is_compatible(PhiMap(lift(delta), 1), Jb, ctx),
                      "compatibility invariant under an extra variable");
            o.require(fedder_is_f_pure(J, ctx) == fedder_is_f_pure(Jb, ctx), "Fedder invariant under an extra variable");
        }
        auto a = glassbrenner_purely_f_regular(D.presentation, D.divisor, D.x(1, 0), 2, ctx);
        auto b = glassbrenner_purely_f_regular(map_ideal(D.presentation, big, images),
                                               map_ideal(D.divisor, big, images), lift(D.x(1, 0)), 2, ctx);
        o.require(a.confirmed_e == b.confirmed_e, "pure sweep invariant under an extra variable");
    }
    o.note << ideals << " random ideals, " << polys << " random polynomials";
}

void lattice(Outcome& o) {
    auto D = determinantal({2, 2, 2}, 2);
    Context ctx;
    PhiMap phi(splitting_delta(D.x), 1);
    auto L = compatible_closure(phi, {D.presentation, D.divisor}, ctx);
    o.require(L.complete, "terminates under the node cap");
    for (const auto& want : {std::string("0"), std::string("1"), canonical_key(D.presentation, ctx),
                             canonical_key(D.divisor, ctx)})
        o.require(L.find(want).has_value(), "contains " + want);
    auto again = compatible_closure(phi, L.ideals(), ctx);
    std::set<std::string> k1, k2;
    for (const auto& n : L.nodes) k1.insert(n.key);
    for (const auto& n : again.nodes) k2.insert(n.key);
    o.require(k1 == k2, "closure idempotent");
    std::mt19937_64 rng(7);
    const Ring& R = D.ring();
    for (const auto& n : L.nodes) {
        o.require(is_compatible(phi, n.ideal, ctx), "node compatible: " + n.key);
        for (int k = 0; k < 16; ++k) {
            Polynomial f = k < 4 ? var(R, k) : random_homogeneous(rng, R, 2, 1 + k % 2);
            if (member(f * f, n.ideal, ctx)) o.require(member(f, n.ideal, ctx), "node radical: " + n.key);
        }
    }
    o.note << L.nodes.size() << " nodes, " << L.edges.size() << " edges";
}

void round_trip_and_determinism(Outcome& o, const std::string& exe) {
    std::mt19937_64 rng(1000);
    int trips = 0;
    for (std::uint32_t p : {2u, 3u, 5u, 32003u}) {
        auto R = generic_matrix(3, 3, p).ring();
        for (int k = 0; k < 300; ++k) {
            auto f = random_poly(rng, R, 1 + k % 8, 6);
            auto text = to_string(f);
            o.require(parse_polynomial(text, R) == f && to_string(parse_polynomial(text, R)) == text, "round trip " + text);
            ++trips;
        }
    }
    std::string a, b;
    if (!exe.empty()) {
        a = run_binary(exe, "--json verify suite");
        b = run_binary(exe, "--json verify suite --workers 2");
    } else {
        std::ostringstream sa, sb, err;
        o.require(run_command({"--json", "verify", "suite"}, sa, err) == 0, "suite passes");
        o.require(run_command({"--json", "verify", "suite", "--workers", "2"}, sb, err) == 0, "suite passes");
        a = sa.str(), b = sb.str();
    }
    o.require(!a.empty() && strip_elapsed(a) == strip_elapsed(b), "suite JSON identical across runs");
    o.note << trips << " round trips, suite of " << strip_elapsed(a).size() << " bytes identical across two "
           << (exe.empty() ? "in-process" : "process") << " runs";
}

}  // namespace

int main(int argc, char** argv) {
    std::string exe = argc > 1 ? argv[1] : "";
    std::vector<std::pair<std::string, Criterion>> criteria = {
        {"splitting and compatibility", split_and_compat},
        {"dimension formula", dimension},
        {"row decomposition", row_decomposition},
        {"gamma decomposition", gamma_decomposition},
        {"local membership", local_membership},
        {"Sylvester identity", sylvester},
        {"extension decomposition", extension},
        {"pure F-regularity", pure_f_regularity},
        {"Fedder F-purity", fedder},
        {"reduction identities", reductions},
        {"invariant suites", invariant_suites},
        {"compatible lattice", lattice},
        {"round trip and determinism", [&](Outcome& o) { round_trip_and_determinism(o, exe); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.note << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.ok;
        std::printf("criterion %2zu %-28s %s  (%.2fs) %s\n", i + 1, criteria[i].first.c_str(), o.ok ? "PASS" : "FAIL",
                    secs, o.note.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed ? 1 : 0;
}
