#include "qschur/checks.hpp"
#include "qschur/exact_poly.hpp"
#include "printers.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qschur;

namespace {

MultiPoly x(const DimVector& amb, int node, int pos) { return MultiPoly::variable(amb, {node, pos}); }

}  // namespace

TEST(Laurent, ArithmeticAndText) {
    const LaurentInt q = LaurentInt::monomial(1);
    const LaurentInt p = q * q + 3;
    EXPECT_EQ(p.to_string(), "3+1*q^2");
    EXPECT_EQ(LaurentInt::parse(p.to_string()), p);
    EXPECT_EQ(LaurentInt::parse("-q^-1"), -LaurentInt::monomial(-1));
    EXPECT_EQ(LaurentInt::parse("q"), q);
    EXPECT_EQ(LaurentInt().to_string(), "0");
    EXPECT_EQ((q - q).is_zero(), true);
    EXPECT_EQ(p.at_one(), 4);
}

TEST(Laurent, BarExamples) {
    const LaurentInt q = LaurentInt::monomial(1);
    EXPECT_EQ(bar_q(q * q + 3), LaurentInt::monomial(-2) + 3);
    EXPECT_TRUE(bar_q(LaurentInt()).is_zero());
    const LaurentInt sym = q + LaurentInt::monomial(-1);
    EXPECT_EQ(bar_q(sym), sym);
}

TEST(Laurent, BarIsAnInvolutiveRingMap) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> e(-4, 4), c(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentInt a, b;
        for (int i = 0; i < 4; ++i) {
            a.add_term(e(rng), c(rng));
            b.add_term(e(rng), c(rng));
        }
        EXPECT_EQ(bar_q(bar_q(a)), a);
        EXPECT_EQ(bar_q(a * b), bar_q(a) * bar_q(b));
        EXPECT_EQ(bar_q(a + b), bar_q(a) + bar_q(b));
    }
}

TEST(Perms, WordsRoundTrip) {
    for (int n = 1; n <= 5; ++n)
        for (const Perm& p : all_perms(n)) {
            const auto w = reduced_word(p);
            EXPECT_EQ(static_cast<int>(w.size()), length(p));
            EXPECT_EQ(perm_from_word(n, w), p);
            EXPECT_EQ(compose(p, inverse(p)), identity_perm(n));
        }
    EXPECT_EQ(all_perms(4).size(), 24u);
}

TEST(Permutation, Examples) {
    const DimVector amb{2};
    const MultiPoly f = x(amb, 1, 1) * x(amb, 1, 1) + x(amb, 1, 2);
    EXPECT_EQ(apply_permutation({identity_perm(2)}, f), f);
    EXPECT_EQ(apply_permutation({{1, 0}}, x(amb, 1, 1)), x(amb, 1, 2));
    const MultiPoly sym = x(amb, 1, 1) + x(amb, 1, 2);
    EXPECT_EQ(apply_permutation({{1, 0}}, sym), sym);
}

TEST(Permutation, FlatRejectsCrossNodeMoves) {
    const DimVector amb{1, 1};
    EXPECT_THROW(apply_flat_permutation({1, 0}, x(amb, 1, 1)), std::invalid_argument);
}

TEST(Demazure, Examples) {
    const DimVector amb{2};
    EXPECT_EQ(demazure(1, 1, x(amb, 1, 1)), MultiPoly::constant(amb, 1));
    EXPECT_EQ(demazure(1, 1, x(amb, 1, 1) * x(amb, 1, 1)), x(amb, 1, 1) + x(amb, 1, 2));
    EXPECT_TRUE(demazure(1, 1, x(amb, 1, 1) * x(amb, 1, 2)).is_zero());
    EXPECT_EQ(demazure_word({}, x(amb, 1, 1)), x(amb, 1, 1));
}

TEST(Demazure, OtherNodesAreConstants) {
    const DimVector amb{2, 1};
    const MultiPoly f = x(amb, 1, 1) * x(amb, 2, 1);
    EXPECT_EQ(demazure(1, 1, f), x(amb, 2, 1));
}

TEST(Demazure, BadPositionThrows) {
    const DimVector amb{2};
    EXPECT_THROW(demazure_word({{1, 2}}, x(amb, 1, 1)), std::out_of_range);
}

TEST(Demazure, PropertiesOnRandomPolynomials) {
    std::mt19937_64 rng(5);
    const DimVector amb{3, 1};
    for (int trial = 0; trial < 40; ++trial) {
        const MultiPoly f = random_poly(amb, 6, 5, rng);
        const MultiPoly g = random_poly(amb, 3, 3, rng);
        for (int j = 1; j <= 2; ++j) {
            EXPECT_TRUE(demazure(1, j, demazure(1, j, f)).is_zero());
            Perm s = identity_perm(3);
            std::swap(s[j - 1], s[j]);
            const MultiPoly sf = apply_permutation({s, identity_perm(1)}, f);
            EXPECT_EQ(demazure(1, j, f * g), demazure(1, j, f) * g + sf * demazure(1, j, g));
            // (x_j - x_{j+1}) * Delta f = f - s f
            EXPECT_EQ((x(amb, 1, j) - x(amb, 1, j + 1)) * demazure(1, j, f), f - sf);
        }
        // Two reduced words of the longest element of S_3.
        EXPECT_EQ(demazure_word({{1, 1}, {1, 2}, {1, 1}}, f), demazure_word({{1, 2}, {1, 1}, {1, 2}}, f));
    }
}

TEST(Demazure, HomogeneousDegreeDrops) {
    const DimVector amb{3};
    const MultiPoly f = x(amb, 1, 1) * x(amb, 1, 1) * x(amb, 1, 2) + x(amb, 1, 3) * x(amb, 1, 3) * x(amb, 1, 3);
    const MultiPoly d = demazure(1, 2, f);
    EXPECT_TRUE(d.is_homogeneous());
    EXPECT_EQ(d.degree(), 2);
}

TEST(Demazure, LongestElementAgainstAlternatingSum) {
    // Delta_{w0} f = sum_w (-1)^l(w) w(f) / prod_{i<j} (x_i - x_j)
    std::mt19937_64 rng(9);
    const DimVector amb{3};
    MultiPoly vandermonde = MultiPoly::constant(amb, 1);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) vandermonde = vandermonde * (x(amb, 1, i) - x(amb, 1, j));
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly f = random_poly(amb, 5, 4, rng);
        MultiPoly alt(amb);
        for (const Perm& w : all_perms(3)) {
            const MultiPoly wf = apply_permutation({w}, f);
            alt += length(w) % 2 ? -wf : wf;
        }
        EXPECT_EQ(demazure_perm(1, 0, {2, 1, 0}, f) * vandermonde, alt);
    }
}

TEST(EulerClass, Examples) {
    EXPECT_EQ(euler_class({0, 0, 1}, {1, 0, 0}), MultiPoly::constant({1, 0, 1}, 1));
    // The wrap-around pair node 3 -> node 1 does contribute.
    EXPECT_EQ(euler_class({1, 0, 0}, {0, 0, 1}).degree(), 1);
    EXPECT_EQ(euler_class({1, 0}, {1, 0}), MultiPoly::constant({2, 0}, 1));
    // e=2, c=(1,0), d=(0,1): the wrap-around factor x_{1,1} - x_{2,1}.
    const DimVector amb{1, 1};
    EXPECT_EQ(euler_class({1, 0}, {0, 1}), x(amb, 1, 1) - x(amb, 2, 1));
}

TEST(EulerClass, DegreeIsTheProductCount) {
    // e=3: c=(1,1,0), d=(1,1,0) gives c_2 d_1 = 1 factor.
    const MultiPoly E = euler_class({1, 1, 0}, {1, 1, 0});
    EXPECT_TRUE(E.is_homogeneous());
    EXPECT_EQ(E.degree(), 1);
}

TEST(ArtinBasis, Examples) {
    const auto b1 = artin_basis({1});
    ASSERT_EQ(b1.size(), 1u);
    EXPECT_EQ(b1[0], MultiPoly::constant({1}, 1));
    const auto b2 = artin_basis({2});
    ASSERT_EQ(b2.size(), 2u);
    EXPECT_EQ(b2[0], MultiPoly::constant({2}, 1));
    EXPECT_EQ(b2[1], x({2}, 1, 1));
    EXPECT_EQ(artin_basis({2, 1}).size(), 2u);
    EXPECT_EQ(artin_basis({3, 2}).size(), 12u);
}

TEST(MultiPoly, DivisionByDifference) {
    const DimVector amb{2};
    const MultiPoly a = x(amb, 1, 1), b = x(amb, 1, 2);
    EXPECT_EQ((a * a - b * b).divide_by_difference(0, 1), a + b);
    EXPECT_THROW((a * a).divide_by_difference(0, 1), std::logic_error);
}
