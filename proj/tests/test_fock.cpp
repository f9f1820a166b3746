#include "qschur/fock.hpp"
#include "printers.hpp"

#include <gtest/gtest.h>

using namespace qschur;

namespace {

const LaurentInt q = LaurentInt::monomial(1);
const LaurentInt qi = LaurentInt::monomial(-1);

FockConfig config(int e, std::vector<int> z) { return FockConfig{Charge{e, std::move(z), {}}, DegConvention::Exact}; }

Multipartition empty(int ell) { return Multipartition(ell); }

}  // namespace

TEST(FAction, Examples) {
    const FockConfig cfg = config(3, {0});
    const FockVector vac = basis_vector(empty(1));
    // Residue 0 is node 3.
    EXPECT_EQ(f_action(cfg, {0, 0, 1}, vac), basis_vector({{1}}));
    // Residues {0, 1}: the row (2); the column (1,1) has residues {0, 2}.
    EXPECT_EQ(f_action(cfg, {1, 0, 1}, vac), basis_vector({{2}}));
    EXPECT_TRUE(f_action(cfg, {1, 0, 0}, vac).empty());
    EXPECT_TRUE(f_action(cfg, {0, 0, 0}, vac) == vac);
}

TEST(EAction, Examples) {
    const FockConfig cfg = config(3, {0});
    for (int node = 1; node <= 3; ++node) EXPECT_TRUE(e_action(cfg, node, basis_vector(empty(1))).empty());
    EXPECT_EQ(e_action(cfg, 3, basis_vector({{1}})), basis_vector(empty(1)));
}

TEST(EAction, IsAdjointToF) {
    for (const FockConfig& cfg : {config(3, {0, 1}), config(2, {0, 0}), config(4, {1, 3})})
        for (int n = 0; n <= 3; ++n)
            for (const Multipartition& xi : multipartitions(n, 2))
                for (const Multipartition& eta : multipartitions(n + 1, 2))
                    for (int node = 1; node <= cfg.charge.e; ++node) {
                        const FockVector u = basis_vector(xi), v = basis_vector(eta);
                        EXPECT_EQ(inner(f_action(cfg, unit_vector(cfg.charge.e, node), u), v),
                                  inner(u, e_action(cfg, node, v)));
                    }
}

TEST(FAction, DividedPowers) {
    // f_i f_i = (q + q^-1) f_i^(2)
    for (const FockConfig& cfg : {config(3, {0}), config(3, {0, 1}), config(2, {0, 1}), config(2, {0, 0})})
        for (int n = 0; n <= 3; ++n)
            for (const Multipartition& xi : multipartitions(n, cfg.charge.ell()))
                for (int node = 1; node <= cfg.charge.e; ++node) {
                    const DimVector a = unit_vector(cfg.charge.e, node);
                    const FockVector u = basis_vector(xi);
                    EXPECT_EQ(f_action(cfg, a, f_action(cfg, a, u)), scaled(f_action(cfg, add(a, a), u), q + qi))
                        << format_multipartition(xi) << " node " << node;
                }
}

TEST(FAction, StripsCarryTheirContent) {
    const Charge ch{3, {0, 2}, {}};
    for (const Multipartition& eta : strips_with_content({{1}, {}}, {1, 1, 1}, ch)) {
        EXPECT_TRUE(contains(eta, {{1}, {}}));
        EXPECT_EQ(size(eta), 4);
    }
    EXPECT_TRUE(strips_with_content({{}}, {2, 0, 0}, Charge{3, {0}, {}}).empty());
}

TEST(HVector, Examples) {
    const FockConfig cfg = config(3, {0});
    EXPECT_EQ(h_vector(cfg, parse_shadowed("0,0,1", cfg.charge)), basis_vector({{1}}));
    // Residues 0 then 2, i.e. nodes 3 then 2.
    EXPECT_EQ(h_vector(cfg, parse_shadowed("0,0,1;0,1,0", cfg.charge)), basis_vector({{1, 1}}));
    EXPECT_TRUE(h_vector(cfg, parse_shadowed("1,0,0", cfg.charge)).empty());
}

TEST(HVector, GroundStateShapesAreMonic) {
    for (const FockConfig& cfg : {config(2, {0}), config(3, {0, 1}), config(2, {1, 1})})
        for (int n = 1; n <= 4; ++n)
            for (const Multipartition& xi : multipartitions(n, cfg.charge.ell())) {
                const FockVector h = h_vector(cfg, lambda_of_shape(xi, cfg.charge));
                EXPECT_EQ(coefficient(h, xi), LaurentInt(1)) << format_multipartition(xi);
                for (const auto& [eta, c] : h) EXPECT_FALSE(lex_less(eta, xi)) << format_multipartition(eta);
            }
}

TEST(Inner, IsTheStandardForm) {
    FockVector u = basis_vector({{2}});
    add_scaled(u, basis_vector({{1, 1}}), q);
    FockVector v = basis_vector({{1, 1}});
    add_scaled(v, basis_vector({{2}}), LaurentInt(3));
    EXPECT_EQ(inner(u, v), q + 3);
    EXPECT_EQ(inner(u, v), inner(v, u));
    EXPECT_TRUE(inner(u, basis_vector({{3}})).is_zero());
}

TEST(Bar, InvolutionAndFixedPoints) {
    for (const FockConfig& cfg : {config(3, {0}), config(3, {0, 1}), config(2, {0})})
        for (int n = 1; n <= 3; ++n) {
            const BarInvolution psi(cfg, n);
            for (const Multipartition& xi : multipartitions(n, cfg.charge.ell())) {
                const FockVector u = basis_vector(xi);
                EXPECT_EQ(psi(psi(u)), u);
                const FockVector h = h_vector(cfg, lambda_of_shape(xi, cfg.charge));
                EXPECT_EQ(psi(h), h);
                FockVector twisted = u;
                add_scaled(twisted, u, q);
                EXPECT_EQ(psi(twisted), scaled(psi(u), 1 + qi));
            }
        }
}

TEST(Bar, SymmetricPart) {
    const LaurentInt c = 2 + q * 3 + qi * 5;
    const LaurentInt b = bar_symmetric_part(c);
    EXPECT_EQ(bar_q(b), b);
    // What is left after removing the symmetric part lies in q^-1 Z[q^-1].
    const LaurentInt rest = c - b;
    for (const auto& [k, v] : rest.terms()) EXPECT_LT(k, 0);
}

TEST(Canonical, SmallExamples) {
    const auto one = canonical_basis(config(3, {0}), 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.at({{1}}), basis_vector({{1}}));

    const auto e3 = canonical_basis(config(3, {0}), 2);
    EXPECT_EQ(e3.at({{2}}), basis_vector({{2}}));
    EXPECT_EQ(e3.at({{1, 1}}), basis_vector({{1, 1}}));

    const auto e2 = canonical_basis(config(2, {0}), 2);
    FockVector want = basis_vector({{1, 1}});
    add_scaled(want, basis_vector({{2}}), qi);
    EXPECT_EQ(e2.at({{1, 1}}), want);
    EXPECT_EQ(e2.at({{2}}), basis_vector({{2}}));
}

TEST(Canonical, PropertiesLevelTwo) {
    for (const FockConfig& cfg : {config(3, {0, 1}), config(2, {0, 1}), config(3, {0, 0})})
        for (int n = 1; n <= 3; ++n) {
            const BarInvolution psi(cfg, n);
            const auto basis = canonical_basis(psi);
            EXPECT_EQ(basis.size(), multipartitions(n, 2).size());
            for (const auto& [xi, p] : basis) {
                EXPECT_EQ(psi(p), p);
                EXPECT_EQ(coefficient(p, xi), LaurentInt(1));
                for (const auto& [eta, c] : p) {
                    if (eta == xi) continue;
                    EXPECT_TRUE(lex_less(xi, eta));
                    for (const auto& [k, v] : c.terms()) {
                        EXPECT_LT(k, 0);
                        EXPECT_GT(v, 0);
                    }
                }
            }
        }
}

TEST(Canonical, LiteralConventionIsReported) {
    FockConfig cfg = config(3, {0});
    cfg.convention = DegConvention::Literal;
    try {
        canonical_basis(cfg, 3);
        FAIL() << "expected a convention failure";
    } catch (const ConventionFailure& ex) {
        EXPECT_EQ(ex.xi(), (Multipartition{{3}}));
    }
}

TEST(Decomposition, MatrixAndDual) {
    const auto basis = canonical_basis(config(2, {0}), 2);
    const FockMatrix d = decomposition_matrix(basis);
    EXPECT_EQ(d.at({{1, 1}}).at({{2}}), qi);
    EXPECT_EQ(d.at({{2}}).size(), 1u);

    for (const FockConfig& cfg : {config(2, {0}), config(3, {0, 1})}) {
        const auto p = canonical_basis(cfg, 3);
        const auto dual = dual_canonical_basis(p);
        for (const auto& [xi, v] : p)
            for (const auto& [eta, w] : dual)
                EXPECT_EQ(inner(v, w), LaurentInt(xi == eta ? 1 : 0))
                    << format_multipartition(xi) << " " << format_multipartition(eta);
    }
}

TEST(Dominance, Examples) {
    EXPECT_TRUE(is_m_dominant(Charge{3, {0}, {}}, 100));
    const Charge c{6, {5, 0}, {5, 0}};
    EXPECT_TRUE(is_m_dominant(c, 5));
    EXPECT_FALSE(is_m_dominant(c, 6));
    const Charge flat{6, {0, 0}, {0, 0}};
    EXPECT_TRUE(is_m_dominant(flat, 0));
    EXPECT_FALSE(is_m_dominant(flat, 1));
}

TEST(Text, FockFormat) {
    FockVector v = basis_vector({{1, 1}});
    add_scaled(v, basis_vector({{2}}), qi);
    EXPECT_EQ(format_fock(v), "(1)u[1,1] + (1*q^-1)u[2]");
}
