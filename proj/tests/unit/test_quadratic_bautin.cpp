#include "centerkit/quadratic_bautin.hpp"

#include <gtest/gtest.h>

using namespace centerkit;

namespace {

QuadraticParams q(long A, long B, long C, long Ap, long Bp, long Cp) {
    return {Rational(A), Rational(B), Rational(C), Rational(Ap), Rational(Bp), Rational(Cp)};
}

TEST(Generators, HandValues) {
    // (1,1,1,0,1,0): g2 = 1, g3 = (2+1)(1-2)*1*1 = -3, g4 = (1-0)(3*1*1) = 3
    const auto g = bautin_generators(q(1, 1, 1, 0, 1, 0));
    EXPECT_EQ(g.g2, 1);
    EXPECT_EQ(g.g3, -3);
    EXPECT_EQ(g.g4, 3);
    const auto w = bautin_generators(q(1, 1, 1, 0, 0, 0));
    EXPECT_EQ(w.g2, 1);
    EXPECT_FALSE(w.all_zero());
}

TEST(Generators, LotkaVolterraAndHamiltonianPoints) {
    EXPECT_TRUE(bautin_generators(q(3, 0, -2, 5, 0, 7)).all_zero());
    // 2A + B' = 0, 2A' + B = 0
    EXPECT_TRUE(bautin_generators(q(1, -4, 3, 2, -2, 5)).all_zero());
}

TEST(Generators, SymbolicFormsMatchEvaluation) {
    const auto polys = bautin_polynomials();
    Rng rng(17);
    for (int s = 0; s < 50; ++s) {
        std::array<Rational, 6> v;
        for (auto& x : v) x = rng.rational(20, 9);
        const auto g = bautin_generators(QuadraticParams::from(v));
        const std::vector<Rational> point(v.begin(), v.end());
        EXPECT_EQ(polys[0].evaluate(point), g.g2);
        EXPECT_EQ(polys[1].evaluate(point), g.g3);
        EXPECT_EQ(polys[2].evaluate(point), g.g4);
    }
}

TEST(Generators, DegreesAreTwoFourSix) {
    const auto polys = bautin_polynomials();
    EXPECT_EQ(polys[0].total_degree(), 2);
    EXPECT_EQ(polys[1].total_degree(), 4);
    EXPECT_EQ(polys[2].total_degree(), 6);
    for (const auto& p : polys) EXPECT_TRUE(p.is_homogeneous());
}

TEST(Generators, GaussianRationalPoints) {
    using G = GaussianRational;
    const G i = G::root();
    // B = B' = 0 over the Gaussian rationals
    const QuadraticParamsT<G> lv{G(1) + i, G(0), i, G(2), G(0), G(3) - i};
    EXPECT_TRUE(bautin_generators(lv).all_zero());
    const QuadraticParamsT<G> generic{i, G(1), G(1), G(0), G(0), G(0)};
    const auto g = bautin_generators(generic);
    EXPECT_EQ(g.g2, i);
    EXPECT_TRUE(component_membership(lv).lotka_volterra);
}

TEST(Membership, Examples) {
    const auto sym = component_membership(q(2, -3, 5, 2, -3, 5));
    EXPECT_TRUE(sym.reversible);
    EXPECT_FALSE(sym.lotka_volterra);
    const auto sing = component_membership(q(0, 0, 1, 0, 0, 1));
    EXPECT_TRUE(sing.reversible);
    EXPECT_TRUE(sing.singular_locus);
    EXPECT_TRUE(sing.lotka_volterra);
    EXPECT_TRUE(sing.hamiltonian);
    const auto origin = component_membership(q(0, 0, 0, 0, 0, 0));
    EXPECT_TRUE(origin.lotka_volterra && origin.hamiltonian && origin.reversible && origin.exceptional);
    // B = 1, B' = 1, C = 1: (2, 1, 1, 2, 1, 1)
    const auto ex = component_membership(q(2, 1, 1, 2, 1, 1));
    EXPECT_TRUE(ex.exceptional);
    EXPECT_TRUE(bautin_generators(q(2, 1, 1, 2, 1, 1)).all_zero());
    const auto witness = component_membership(q(1, 1, 1, 0, 0, 0));
    EXPECT_FALSE(witness.lotka_volterra || witness.hamiltonian || witness.reversible || witness.exceptional);
}

TEST(Membership, LiteralExceptionalReadingIsNotInTheVariety) {
    // B = 1, B' = 2, C = 1 under A = 2B', A' = 2B', CC' = BB': (4, 1, 1, 4, 2, 2)
    const auto p = q(4, 1, 1, 4, 2, 2);
    EXPECT_TRUE(component_membership(p).exceptional_literal);
    EXPECT_FALSE(component_membership(p).exceptional);
    EXPECT_EQ(bautin_generators(p).g2, -4);
}

TEST(Containments, EveryComponentIsInTheVariety) {
    const auto report = verify_component_containments(2024, 100);
    ASSERT_EQ(report.components.size(), 4u);
    for (const auto& c : report.components) {
        EXPECT_EQ(c.samples, 100u) << to_string(c.component);
        EXPECT_EQ(c.vanishing, c.samples) << to_string(c.component);
        EXPECT_EQ(c.satisfying, c.samples) << to_string(c.component);
        EXPECT_TRUE(c.symbolic_zero) << to_string(c.component);
    }
    EXPECT_TRUE(report.degrees_ok);
    EXPECT_TRUE(report.witness_nonzero);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.literal_samples, 100u);
    EXPECT_GT(report.literal_nonvanishing, 0u);
}

TEST(Containments, SamplesSatisfyTheirEquations) {
    Rng rng(99);
    for (Component c : kComponents)
        for (int s = 0; s < 20; ++s) {
            const auto p = sample_component(c, rng);
            EXPECT_TRUE(satisfies(component_equations(c), p)) << to_string(c);
            EXPECT_TRUE(bautin_generators(p).all_zero()) << to_string(c);
        }
}

TEST(SingularLocus, AllChecksPass) {
    const auto r = singular_locus_checks();
    EXPECT_TRUE(r.reversible_identically);
    EXPECT_TRUE(r.hamiltonian_identically);
    EXPECT_TRUE(r.lotka_volterra_identically);
    EXPECT_TRUE(r.tau_collision);
    EXPECT_TRUE(r.fixture_factors);
    EXPECT_TRUE(r.fixture_proportional);
    EXPECT_TRUE(r.ok());
}

TEST(SingularLocus, CollisionFixtureHasDistinctLines) {
    const auto [p1, p2] = tau_collision_fixture();
    EXPECT_FALSE(p1.lines == p2.lines);
    EXPECT_TRUE(tau_collision_check(p1, p2));
}

}  // namespace
