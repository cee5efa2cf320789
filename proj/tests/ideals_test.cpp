#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace detfsing;
using namespace detfsing::testing;

namespace {

// Naive full division written against the public Polynomial API only, so it
// shares no code with the engine's heap reducer.
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

void expect_reduced_groebner(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& G) {
    for (const auto& f : gens) EXPECT_TRUE(naive_remainder(f, G).is_zero()) << to_string(f);
    const std::size_t s = G.empty() ? 0 : G.front().stride();
    std::vector<Exp> l(s);
    for (std::size_t i = 0; i < G.size(); ++i) {
        EXPECT_EQ(G[i].leading_coeff(), 1u);
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            mono::lcm(l.data(), G[i].leading_mono(), G[j].leading_mono(), s);
            EXPECT_TRUE(naive_remainder(detail::s_polynomial(G[i], G[j], l.data()), G).is_zero());
        }
        // auto-reduced: no term of G[i] is divisible by another leading monomial
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            for (std::size_t k = 0; k < G[i].size(); ++k)
                EXPECT_FALSE(mono::divides(G[j].leading_mono(), G[i].mono(k), s));
        }
    }
}

Ring abc(std::uint32_t p) { return row_ring(3, p); }

}  // namespace

TEST(Groebner, MonomialIdealAlreadyReduced) {
    auto R = row_ring(2, 5);
    Context ctx;
    auto x = var(R, 0), y = var(R, 1);
    Ideal I(R, {x * x, x * y});
    auto G = I.groebner(ctx);
    ASSERT_EQ(G.size(), 2u);
    EXPECT_TRUE(ideal_equal(I, Ideal(R, {x * y, x * x}), ctx));
    expect_reduced_groebner(I.gens(), G);
}

TEST(Groebner, PrincipalIsMonic) {
    auto R = abc(7);
    Context ctx;
    auto f = parse(R, "x[1,1]^2*x[1,2] + 4*x[1,3] + 2");
    Ideal I(R, {f.scaled(3)});
    ASSERT_EQ(I.groebner(ctx).size(), 1u);
    EXPECT_EQ(I.groebner(ctx).front(), f.monic());
}

TEST(Groebner, TwoByThreeMinorsUnderDiagonalOrder) {
    // u v w / x y z laid out as x[1,1..3], x[2,1..3]
    std::vector<Variable> vars;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j) vars.push_back({Block::x, i, j});
    auto R = RingContext::make(vars, 5, TermOrder::diagonal());
    std::vector<Polynomial> minors = {parse(R, "x[1,2]*x[2,3] - x[1,3]*x[2,2]"),
                                      parse(R, "x[1,1]*x[2,3] - x[1,3]*x[2,1]"),
                                      parse(R, "x[1,1]*x[2,2] - x[1,2]*x[2,1]")};
    Context ctx;
    auto G = groebner_basis(R, minors, ctx);
    ASSERT_EQ(G.size(), 3u);
    for (const auto& m : minors) EXPECT_NE(std::find(G.begin(), G.end(), m.monic()), G.end());
    expect_reduced_groebner(minors, G);
    EXPECT_TRUE(member(parse(R, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"), Ideal(R, minors), ctx));
}

TEST(Groebner, SoundOnRandomIdeals) {
    std::mt19937_64 rng(101);
    const std::uint32_t primes[] = {2, 3, 5};
    for (int k = 0; k < 120; ++k) {
        std::uint32_t p = primes[k % 3];
        std::size_t n = 2 + k % 4;
        auto R = row_ring(n, p);
        std::vector<Polynomial> gens;
        std::size_t count = 1 + (k / 3) % 3;
        for (std::size_t g = 0; g < count; ++g) gens.push_back(random_poly(rng, R, 3, 4));
        Context ctx;
        auto G = groebner_basis(R, gens, ctx);
        expect_reduced_groebner(gens, G);
        // The reduced basis is canonical: recomputing from it returns it.
        EXPECT_EQ(groebner_basis(R, G, ctx), G);
    }
}

TEST(Groebner, BudgetExceededCarriesStats) {
    auto R = row_ring(5, 3);
    std::mt19937_64 rng(9);
    std::vector<Polynomial> gens;
    for (int g = 0; g < 4; ++g) gens.push_back(random_poly(rng, R, 4, 4));
    Context ctx(Budget{.max_reductions = 10});
    try {
        groebner_basis(R, gens, ctx);
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded& e) {
        EXPECT_GT(e.stats().reductions, 10u);
    }
}

TEST(Member, Examples) {
    auto R = row_ring(2, 5);
    Context ctx;
    Ideal I(R, {var(R, 0), var(R, 1)});
    EXPECT_TRUE(member(var(R, 1), I, ctx));
    EXPECT_FALSE(member(Polynomial::constant(R, 1), I, ctx));
}

TEST(Equal, Examples) {
    auto R = row_ring(3, 3);
    Context ctx;
    auto x = var(R, 0), y = var(R, 1), z = var(R, 2);
    EXPECT_TRUE(ideal_equal(Ideal(R, {x, y, z}), Ideal(R, {z, x, y}), ctx));
    EXPECT_FALSE(ideal_equal(Ideal(R, {x}), Ideal(R, {x * x}), ctx));
    EXPECT_TRUE(ideal_equal(Ideal(R, {x + y, x - y}), Ideal(R, {x, y}), ctx));
}

TEST(Colon, Examples) {
    auto R = row_ring(2, 5);
    Context ctx;
    auto x = var(R, 0), y = var(R, 1);
    Ideal I(R, {x * x * y});
    EXPECT_TRUE(ideal_equal(colon(I, Ideal::unit(R), ctx), I, ctx));
    EXPECT_TRUE(ideal_equal(colon(I, Ideal(R, {x}), ctx), Ideal(R, {x * y}), ctx));
    EXPECT_TRUE(is_unit_ideal(colon(I, Ideal(R, {x * x * y * y}), ctx), ctx));
    EXPECT_THROW(colon(I, Ideal::zero(R), ctx), PreconditionViolated);
}

TEST(Colon, DefiningPropertyOnSamples) {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 25; ++k) {
        auto R = row_ring(3, k % 2 ? 3 : 2);
        Context ctx;
        std::vector<Polynomial> ig;
        for (int g = 0; g < 2; ++g) ig.push_back(random_homogeneous(rng, R, 2, 2 + k % 2));
        Ideal I(R, ig);
        Ideal J(R, {random_homogeneous(rng, R, 2, 1), random_homogeneous(rng, R, 1, 1)});
        Ideal Q = colon(I, J, ctx);
        for (const auto& g : Q.groebner(ctx))
            for (const auto& f : J.gens()) EXPECT_TRUE(member(g * f, I, ctx));
        // Multiples of I trivially satisfy gJ ⊆ I.
        for (const auto& f : ig) {
            auto h = random_poly(rng, R, 2, 2);
            EXPECT_TRUE(member(h * f, Q, ctx));
        }
        EXPECT_TRUE(contains(Q, I, ctx));
    }
}

TEST(Colon, ConstructedMultipliersLandInColon) {
    // With I = f·K and J = (f), the colon is K; g ∈ K satisfies gJ ⊆ I.
    std::mt19937_64 rng(43);
    for (int k = 0; k < 15; ++k) {
        auto R = row_ring(3, 3);
        Context ctx;
        auto f = random_homogeneous(rng, R, 2, 1);
        if (f.is_zero()) continue;
        Ideal K(R, {random_homogeneous(rng, R, 2, 2), random_homogeneous(rng, R, 2, 2)});
        std::vector<Polynomial> ig;
        for (const auto& g : K.gens()) ig.push_back(f * g);
        Ideal Q = colon(Ideal(R, ig), principal(f), ctx);
        EXPECT_TRUE(ideal_equal(Q, K, ctx));
    }
}

TEST(Intersect, Examples) {
    auto R = row_ring(2, 5);
    Context ctx;
    auto x = var(R, 0), y = var(R, 1);
    Ideal X(R, {x}), Y(R, {y});
    EXPECT_TRUE(ideal_equal(intersect(X, X, ctx), X, ctx));
    EXPECT_TRUE(ideal_equal(intersect(X, Y, ctx), Ideal(R, {x * y}), ctx));
}

TEST(Intersect, ContainmentProperties) {
    std::mt19937_64 rng(47);
    for (int k = 0; k < 25; ++k) {
        auto R = row_ring(3, k % 2 ? 5 : 2);
        Context ctx;
        Ideal I(R, {random_homogeneous(rng, R, 2, 2), random_homogeneous(rng, R, 2, 1)});
        Ideal J(R, {random_homogeneous(rng, R, 3, 2)});
        Ideal K = intersect(I, J, ctx);
        EXPECT_TRUE(contains(I, K, ctx));
        EXPECT_TRUE(contains(J, K, ctx));
        EXPECT_TRUE(contains(K, product(I, J), ctx));
        Ideal all = intersect_all({I, J, Ideal::unit(R)}, ctx);
        EXPECT_TRUE(ideal_equal(all, K, ctx));
    }
}

TEST(Radical, Examples) {
    auto R = row_ring(2, 3);
    Context ctx;
    auto x = var(R, 0), y = var(R, 1);
    EXPECT_TRUE(radical_member(x, Ideal(R, {x * x}), ctx));
    EXPECT_FALSE(radical_member(Polynomial::constant(R, 1), Ideal(R, {x}), ctx));
    EXPECT_TRUE(radical_member(x + y, Ideal(R, {x * x * x, y * y}), ctx));
    EXPECT_FALSE(radical_member(x + y, Ideal(R, {x * y}), ctx));
}

TEST(KrullDim, Examples) {
    Context ctx;
    auto R4 = row_ring(4, 5);
    EXPECT_EQ(krull_dim(Ideal::zero(R4), ctx), 4u);
    EXPECT_THROW(krull_dim(Ideal::unit(R4), ctx), ImproperIdeal);
    std::vector<Variable> vars;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) vars.push_back({Block::x, i, j});
    auto R = RingContext::make(vars, 5);
    EXPECT_EQ(krull_dim(Ideal(R, {parse(R, "x[1,1]*x[2,2] - x[1,2]*x[2,1]")}), ctx), 3u);
    EXPECT_EQ(krull_dim(Ideal(R, {var(R, 0), var(R, 1) * var(R, 2)}), ctx), 2u);
}

TEST(Saturate, Examples) {
    auto R = row_ring(2, 5);
    Context ctx;
    auto x = var(R, 0), y = var(R, 1);
    EXPECT_TRUE(ideal_equal(saturate(Ideal(R, {x * y}), x, ctx), Ideal(R, {y}), ctx));
    Ideal I(R, {x * x, x * y});
    EXPECT_TRUE(ideal_equal(saturate(I, Polynomial::constant(R, 1), ctx), I, ctx));
    EXPECT_TRUE(ideal_equal(saturate(I, x, ctx), Ideal::unit(R), ctx));
    EXPECT_TRUE(ideal_equal(colon(I, x, ctx), Ideal(R, {x, y}), ctx));
    EXPECT_THROW(saturate(I, Polynomial(R), ctx), PreconditionViolated);
}

TEST(Ideal, CacheIsSharedAndStable) {
    auto R = row_ring(3, 2);
    Context ctx;
    Ideal I(R, {parse(R, "x[1,1]^2 + x[1,2]"), parse(R, "x[1,2]*x[1,3] + 1")});
    Ideal copy = I;
    const auto& a = I.groebner(ctx);
    const auto& b = copy.groebner(ctx);
    EXPECT_EQ(&a, &b);
}
