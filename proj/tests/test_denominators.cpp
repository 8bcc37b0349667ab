#include <gtest/gtest.h>

#include "hypersum/denominators.hpp"
#include "hypersum/gcd_convergence.hpp"
#include "support/oracles.hpp"

using namespace hypersum;

namespace {

Poly lin(const Rational& c0, const Rational& c1 = 1) { return Poly{c0, c1}; }

bool identity_holds(const GosperRep& rep) {
    return rep.ratio_num * rep.bden * rep.c == rep.ratio_den * rep.anum * shift(rep.c, 1L);
}

}  // namespace

TEST(Abramov, FirstOrderExample) {
    const AbramovTrace t = abramov_reduce(lin(1) * lin(2), lin(3), 1);
    EXPECT_EQ(t.N, 1);
    EXPECT_EQ(t.d_list, (std::vector<Poly>{lin(2), Poly::constant(1)}));
    EXPECT_EQ(t.A0, Poly::constant(1));
    EXPECT_EQ(t.B0, lin(2));
    EXPECT_EQ(t.denominator, lin(1) * lin(2));
}

TEST(Abramov, NoSharedShiftGivesTrivialDenominator) {
    const AbramovTrace t = abramov_reduce(lin(1), lin(1), 2);
    EXPECT_EQ(t.N, -1);
    EXPECT_TRUE(t.d_list.empty());
    EXPECT_EQ(t.denominator, Poly::constant(1));
}

TEST(Abramov, OrderThreeExample) {
    const Poly p0 = Poly::constant(-1) * lin(-1) * lin(-1, 2) * lin(1);
    const Poly pd = lin(4) * lin(1, 2) * lin(2);
    const AbramovTrace t = abramov_reduce(p0, pd, 3);
    EXPECT_EQ(t.N, 2);
    EXPECT_EQ(t.denominator, Poly::variable() * lin(-1) * lin(1));
}

TEST(GP, Examples) {
    {
        const GPTrace t = gp_reduce(lin(3), Poly::constant(-1) * lin(1) * lin(2));
        EXPECT_EQ(t.N, 1);
        EXPECT_EQ(t.delta_list, (std::vector<Poly>{lin(3), Poly::constant(1)}));
        EXPECT_EQ(t.u, lin(2));
        EXPECT_EQ(t.a_final, Poly::constant(1));
        EXPECT_EQ(t.b_final, Poly::constant(-1) * lin(1));
    }
    {
        const GPTrace t = gp_reduce(lin(1), Poly::variable());
        EXPECT_EQ(t.N, 0);
        EXPECT_EQ(t.u, Poly::variable());
        EXPECT_EQ(t.a_final, Poly::constant(1));
        EXPECT_EQ(t.b_final, Poly::constant(1));
    }
    EXPECT_THROW(gp_reduce(lin(1), lin(1) * lin(2)), std::invalid_argument);
    EXPECT_THROW(gp_reduce(Poly(), lin(1)), std::invalid_argument);
}

TEST(GPRep, SummandRatioExample) {
    const Poly a = lin(5, 4);
    const Poly b = Poly::constant(2) * lin(1, 4) * lin(3, 2);
    const GosperRep rep = gp_rep_from_trace(a, b);
    EXPECT_EQ(rep.anum, Poly::constant(make_rational(1, 4)));
    EXPECT_EQ(rep.bden, Poly({make_rational(3, 2), 1}));
    EXPECT_EQ(rep.c, Poly({make_rational(1, 4), 1}));
    EXPECT_TRUE(check_gp_rep(rep));
    EXPECT_TRUE(check_gosper_rep(gosper_rep_from_abramov(a, b)));
}

TEST(RepCheck, ReportsFailingShift) {
    GosperRep rep{Poly::variable(), lin(-3), Poly::constant(1), Poly::variable(), lin(-3)};
    const RepCheck c = check_gosper_rep(rep);
    EXPECT_FALSE(c);
    EXPECT_EQ(c.failed_condition, "gcd(a(n),b(n+h))");
    ASSERT_TRUE(c.failing_shift.has_value());
    EXPECT_EQ(*c.failing_shift, 3);
    EXPECT_EQ(c.witness, Poly::variable());

    // Identity broken.
    GosperRep bad{Poly::variable(), lin(-3), lin(1), Poly::variable(), lin(-3)};
    const RepCheck c2 = check_gosper_rep(bad);
    EXPECT_FALSE(c2);
    EXPECT_NE(c2.failed_condition.find("identity"), std::string::npos);

    // Valid Gosper form whose c shares a factor with a: GP conditions reject it.
    // r = n(n+1)/n written with a = n, b = 1, c = n.
    GosperRep gp_bad{Poly::variable() * lin(1), Poly::variable(), Poly::variable(), Poly::variable(), Poly::constant(1)};
    ASSERT_TRUE(identity_holds(gp_bad));
    EXPECT_TRUE(check_gosper_rep(gp_bad));
    const RepCheck c3 = check_gp_rep(gp_bad);
    EXPECT_FALSE(c3);
    EXPECT_EQ(c3.failed_condition, "gcd(c(n),a(n))");
}

class PlantedReps : public ::testing::Test {
protected:
    oracle::Rng rng{41};
};

TEST_F(PlantedReps, AbramovDenominatorEqualsClosedForm) {
    for (int it = 0; it < 200; ++it) {
        const oracle::PlantedPair pp = oracle::planted_pair(rng);
        const AbramovTrace t = abramov_reduce(pp.p0, pp.pd, pp.order);
        EXPECT_EQ(t.denominator, universal_denominator(pp.p0, pp.pd, pp.order));
        EXPECT_EQ(t.N, shift_dispersion(pp.p0, pp.pd, pp.order));
        for (const auto& d : t.d_list) EXPECT_TRUE(d.is_monic());
        // After the loop nothing is left to cancel at any shift 0..N.
        for (long h = 0; h <= t.N; ++h) EXPECT_EQ(gcd(t.A0, shift(t.B0, h)).degree(), 0);
    }
}

TEST_F(PlantedReps, BothRepresentationsHold) {
    for (int it = 0; it < 200; ++it) {
        const auto [a, b] = oracle::planted_coprime_ratio(rng);
        const GosperRep ab = gosper_rep_from_abramov(a, b);
        const GosperRep gp = gp_rep_from_trace(a, b);
        EXPECT_TRUE(identity_holds(ab));
        EXPECT_TRUE(identity_holds(gp));
        EXPECT_TRUE(check_gosper_rep(ab)) << check_gosper_rep(ab).failed_condition;
        const RepCheck c = check_gp_rep(gp);
        EXPECT_TRUE(c) << c.failed_condition;
        EXPECT_TRUE(ab.c.is_monic() && ab.bden.is_monic());
        EXPECT_TRUE(gp.c.is_monic() && gp.bden.is_monic());
        // The GP factor divides the limit of the gcd sequence.
        EXPECT_TRUE(divides(gp.c, universal_denominator(b, a, 1)));
        EXPECT_EQ(ab.c, universal_denominator(b, a, 1));
    }
}

TEST(AbramovRep, IsGosperButNotGP) {
    const Poly a = lin(3);
    const Poly b = lin(1) * lin(2);
    const GosperRep rep = gosper_rep_from_abramov(a, b);
    EXPECT_EQ(rep.c, lin(1) * lin(2));
    EXPECT_EQ(rep.anum, Poly::constant(1));
    EXPECT_EQ(rep.bden, lin(2));
    EXPECT_EQ(gcd(shift(rep.c, 1L), rep.bden), lin(2));
    EXPECT_TRUE(check_gosper_rep(rep));
    const RepCheck c = check_gp_rep(rep);
    EXPECT_FALSE(c);
    EXPECT_EQ(c.failed_condition, "gcd(c(n+1),b(n))");
    EXPECT_EQ(c.witness, lin(2));
}
