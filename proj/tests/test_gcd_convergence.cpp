#include <gtest/gtest.h>

#include <algorithm>

#include "hypersum/gcd_convergence.hpp"
#include "support/oracles.hpp"

using namespace hypersum;

namespace {

Poly lin(const Rational& c0, const Rational& c1 = 1) { return Poly{c0, c1}; }

// Order-3 example with end coefficients -(n-1)(2n-1)(n+1) and (n+4)(2n+1)(n+2).
const Poly kP0 = Poly::constant(-1) * lin(-1) * lin(-1, 2) * lin(1);
const Poly kPd = lin(4) * lin(1, 2) * lin(2);
const Poly kCubic = Poly::variable() * lin(-1) * lin(1);

}  // namespace

TEST(GcdTerm, Examples) {
    // Order 1: a = 4n+5 plays pd, b = 2(4n+1)(2n+3) plays p0.
    const Poly b = Poly::constant(2) * lin(1, 4) * lin(3, 2);
    EXPECT_EQ(gcd_term(b, lin(5, 4), 1, 1), Poly({make_rational(1, 4), 1}));
    EXPECT_EQ(gcd_term(kP0, kPd, 3, 3), kCubic);
    EXPECT_THROW(gcd_term(kP0, kPd, 3, 0), std::invalid_argument);
    EXPECT_THROW(gcd_term(Poly(), kPd, 3, 1), std::domain_error);
}

TEST(GcdLimit, Examples) {
    const Poly b = Poly::constant(2) * lin(1, 4) * lin(3, 2);
    const GcdLimit first = gcd_limit(b, lin(5, 4), 1);
    EXPECT_EQ(first.k0, 0);
    EXPECT_EQ(first.limit, Poly({make_rational(1, 4), 1}));
    ASSERT_EQ(first.trace.size(), 1u);

    const GcdLimit cubic = gcd_limit(kP0, kPd, 3);
    EXPECT_EQ(cubic.k0, 2);
    EXPECT_EQ(cubic.limit, kCubic);
    ASSERT_EQ(cubic.trace.size(), 3u);
    EXPECT_EQ(cubic.trace.back(), cubic.limit);

    // pd(n-2) = n-1 never meets p0(n+k) = n+k+1 for k >= 0.
    const GcdLimit none = gcd_limit(lin(1), lin(1), 2);
    EXPECT_EQ(none.k0, -1);
    EXPECT_EQ(oracle::brute_dispersion(shift(lin(1), -2L), lin(1), 30), -1);
    EXPECT_EQ(none.limit, Poly::constant(1));
    EXPECT_TRUE(none.trace.empty());
}

TEST(UniversalDenominator, Examples) {
    EXPECT_EQ(universal_denominator(lin(1) * lin(2), lin(3), 1), lin(1) * lin(2));
    EXPECT_EQ(universal_denominator(kP0, kPd, 3), kCubic);
    EXPECT_EQ(universal_denominator(lin(1), lin(1), 2), Poly::constant(1));
    EXPECT_THROW(universal_denominator(kP0, kPd, 0), std::invalid_argument);
}

class PlantedGcd : public ::testing::Test {
protected:
    oracle::Rng rng{31};
};

TEST_F(PlantedGcd, TermsMatchFactorMultiplicityOracle) {
    int proper_at_n = 0;
    for (int it = 0; it < 200; ++it) {
        const oracle::PlantedPair pp = oracle::planted_pair(rng);
        const long n_disp = shift_dispersion(pp.p0, pp.pd, pp.order);
        ASSERT_EQ(n_disp, oracle::dispersion_by_factors(pp, 40));
        // N = -1 happens when no planted factor fit; every G_k is then 1.
        for (int k = 1; k <= std::max<long>(n_disp, 0) + 3; ++k) {
            ASSERT_EQ(gcd_term(pp.p0, pp.pd, pp.order, k), oracle::gcd_term_by_factors(pp, k)) << "k = " << k;
        }
        if (n_disp >= 1) {
            const Poly gn = gcd_term(pp.p0, pp.pd, pp.order, static_cast<int>(n_disp));
            const Poly gn1 = gcd_term(pp.p0, pp.pd, pp.order, static_cast<int>(n_disp) + 1);
            EXPECT_TRUE(divides(gn, gn1));
            if (gn != gn1) ++proper_at_n;
        }
    }
    // The corpus must exercise growth at the final step.
    EXPECT_GT(proper_at_n, 20);
}

TEST_F(PlantedGcd, StabilizesAfterDispersion) {
    for (int it = 0; it < 200; ++it) {
        const oracle::PlantedPair pp = oracle::planted_pair(rng);
        const GcdLimit lim = gcd_limit(pp.p0, pp.pd, pp.order);
        const int n1 = static_cast<int>(std::max<long>(lim.k0, 0)) + 1;
        const Poly g1 = gcd_term(pp.p0, pp.pd, pp.order, n1);
        EXPECT_EQ(g1, lim.limit);
        EXPECT_EQ(gcd_term(pp.p0, pp.pd, pp.order, n1 + 1), g1);
        EXPECT_EQ(gcd_term(pp.p0, pp.pd, pp.order, n1 + 2), g1);
        EXPECT_TRUE(lim.limit.is_monic());
        for (std::size_t i = 0; i + 1 < lim.trace.size(); ++i) EXPECT_TRUE(divides(lim.trace[i], lim.trace[i + 1]));
    }
}

TEST_F(PlantedGcd, ClosedFormEqualsLimit) {
    for (int it = 0; it < 200; ++it) {
        const oracle::PlantedPair pp = oracle::planted_pair(rng);
        const Poly g = universal_denominator(pp.p0, pp.pd, pp.order);
        EXPECT_EQ(g, gcd_limit(pp.p0, pp.pd, pp.order).limit);
        EXPECT_TRUE(g.is_monic());
    }
}
