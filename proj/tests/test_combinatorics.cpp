#include "qschur/combinatorics.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace qschur;

namespace {

Entry E(int number, int alphabet) { return Entry{alphabet, number}; }

// Three components of shapes (4,3), (2,1), (2,1) at type (3,3,1 | 1,1 | 2,1,1).
SemistandardTableau three_component_example() {
    SemistandardTableau s;
    s.shape = {{4, 3}, {2, 1}, {2, 1}};
    s.rows = {{{E(1, 1), E(1, 1), E(1, 1), E(2, 1)}, {E(2, 1), E(2, 1), E(3, 1)}},
              {{E(1, 2), E(3, 3)}, {E(2, 2)}},
              {{E(1, 3), E(1, 3)}, {E(2, 3)}}};
    return s;
}

// Rows 1 1 2 5 / 2 4 4 / 3 in one component.
SemistandardTableau one_component_example() {
    SemistandardTableau s;
    s.shape = {{4, 3, 1}};
    s.rows = {{{E(1, 1), E(1, 1), E(2, 1), E(5, 1)}, {E(2, 1), E(4, 1), E(4, 1)}, {E(3, 1)}}};
    return s;
}

std::string residue_text(const ResidueSequence& seq) {
    std::string s;
    for (size_t g = 0; g < seq.size(); ++g) {
        if (g) s += '|';
        for (size_t i = 0; i < seq[g].size(); ++i) s += (i ? "," : "") + std::to_string(seq[g][i]);
    }
    return s;
}

// Brute force: colored permutations that keep the order inside every block on both sides.
long long count_minimal_perms(const VectorComposition& lambda, const VectorComposition& mu, int e) {
    auto blocks = [&](const VectorComposition& c, int t) {
        std::vector<int> id;
        for (size_t b = 0; b < c.size(); ++b)
            for (int k = 0; k < c[b][t]; ++k) id.push_back(static_cast<int>(b));
        return id;
    };
    long long total = 1;
    for (int t = 0; t < e; ++t) {
        const auto lb = blocks(lambda, t), mb = blocks(mu, t);
        const int d = static_cast<int>(lb.size());
        long long count = 0;
        for (const Perm& p : all_perms(d)) {
            const Perm inv = inverse(p);
            bool ok = true;
            for (int i = 0; i < d && ok; ++i)
                for (int j = i + 1; j < d && ok; ++j) {
                    if (lb[i] == lb[j] && p[i] > p[j]) ok = false;
                    if (mb[i] == mb[j] && inv[i] > inv[j]) ok = false;
                }
            count += ok;
        }
        total *= count;
    }
    return total;
}

}  // namespace

TEST(ResidueSequence, TwoNodeExample) {
    const VectorComposition mu{{2, 1}, {1, 1}, {2, 3}, {0, 1}};
    EXPECT_EQ(residue_text(residue_sequence(mu)), "1,1,2|1,2|1,1,2,2,2|2");
    EXPECT_EQ(from_residue_sequence(residue_sequence(mu), 2), mu);
    EXPECT_EQ(residue_text(residue_sequence({{1, 0, 0}})), "1");
    EXPECT_EQ(residue_text(residue_sequence({{2, 0, 1}})), "1,1,3");
}

TEST(Transpose, Examples) {
    const VectorComposition mu{{2, 1}, {1, 1}, {2, 3}, {0, 1}};
    EXPECT_EQ(format_vcomp(transpose(mu)), "2,1,2,0;1,1,3,1");
    EXPECT_EQ(transpose(transpose(mu)), mu);
    EXPECT_EQ(transpose({{2, 0, 3}}), (VectorComposition{{2}, {0}, {3}}));
}

TEST(Vcomps, Counts) {
    EXPECT_EQ(enumerate_vcomps({5, 6}, true).size(), 462u);
    EXPECT_EQ(enumerate_vcomps({0, 1, 0}, false), (std::vector<VectorComposition>{{{0, 1, 0}}}));
    const auto all = enumerate_vcomps({1, 1}, false);
    const std::set<VectorComposition> got(all.begin(), all.end());
    const std::set<VectorComposition> want{{{1, 1}}, {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
    EXPECT_EQ(got, want);
    EXPECT_EQ(all.size(), 3u);
}

TEST(Vcomps, CompleteCountIsMultinomial) {
    // Complete flag types of d are words in the nodes with d_t letters t.
    for (const DimVector& d : {DimVector{2, 2}, DimVector{1, 2, 1}, DimVector{3, 1, 0}}) {
        long long want = 1;
        int n = 0;
        for (int x : d)
            for (int k = 1; k <= x; ++k) want = want * (++n) / k;
        EXPECT_EQ(static_cast<long long>(enumerate_vcomps(d, true).size()), want);
    }
}

TEST(Vcomps, DimensionIsPreserved) {
    for (const auto& mu : enumerate_vcomps({2, 1, 1}, false)) EXPECT_EQ(dimension(mu, 3), (DimVector{2, 1, 1}));
}

TEST(Partitions, Counts) {
    EXPECT_EQ(partitions(5).size(), 7u);
    EXPECT_EQ(multipartitions(2, 2).size(), 5u);
    EXPECT_EQ(multipartitions(0, 3).size(), 1u);
}

TEST(Partitions, OrderAndDominance) {
    EXPECT_TRUE(lex_less({{1, 1}}, {{2}}));
    EXPECT_TRUE(dominates({{2}}, {{1, 1}}));
    EXPECT_FALSE(dominates({{1, 1}}, {{2}}));
    EXPECT_TRUE(dominates({{1}, {}}, {{}, {1}}));
}

TEST(Boxes, AddableAndRemovable) {
    const Multipartition mp{{2, 1}};
    EXPECT_EQ(addable(mp), (std::vector<Box>{{1, 1, 3}, {1, 2, 2}, {1, 3, 1}}));
    EXPECT_EQ(removable(mp), (std::vector<Box>{{1, 1, 2}, {1, 2, 1}}));
    const Charge ch{3, {1}, {}};
    EXPECT_EQ(residue({1, 1, 1}, ch), 1);
    EXPECT_EQ(residue({1, 2, 1}, ch), 3);  // residue 0 is node e
}

TEST(Semistandard, SmallCounts) {
    EXPECT_EQ(enumerate_semistandard({{1}}).size(), 1u);
    EXPECT_EQ(enumerate_semistandard({{2, 1}}, AlphabetRule::UpTo, Multicomposition{{1, 1, 1}}).size(), 2u);
    for (const auto& s : enumerate_semistandard({{2, 1}, {1}})) EXPECT_TRUE(is_semistandard(s));
}

TEST(Semistandard, ThreeComponentExample) {
    const auto s = three_component_example();
    EXPECT_TRUE(is_semistandard(s, AlphabetRule::UpTo));
    EXPECT_FALSE(is_semistandard(s, AlphabetRule::From));
    EXPECT_EQ(normalized(s.type()), normalized({{3, 3, 1}, {1, 1, 0}, {2, 1, 1}}));
    const auto list = enumerate_semistandard(s.shape, AlphabetRule::UpTo, Multicomposition{{3, 3, 1}, {1, 1}, {2, 1, 1}});
    EXPECT_NE(std::find(list.begin(), list.end(), s), list.end());
}

TEST(Semistandard, AlphabetRules) {
    EXPECT_TRUE(alphabet_allows(AlphabetRule::UpTo, 2, 1));
    EXPECT_FALSE(alphabet_allows(AlphabetRule::UpTo, 1, 2));
    EXPECT_TRUE(alphabet_allows(AlphabetRule::From, 1, 2));
    EXPECT_FALSE(alphabet_allows(AlphabetRule::From, 2, 1));
    for (const auto rule : {AlphabetRule::UpTo, AlphabetRule::From})
        for (const auto& s : enumerate_semistandard({{1}, {1}}, rule))
            for (const Box& b : s.reading_boxes()) EXPECT_TRUE(alphabet_allows(rule, s.at(b).alphabet, b.comp));
}

TEST(Semistandard, RejectsColumnViolation) {
    SemistandardTableau s;
    s.shape = {{1, 1}};
    s.rows = {{{E(1, 1)}, {E(1, 1)}}};
    EXPECT_FALSE(is_semistandard(s));
}

TEST(Tableau, PermutationOfReadingWord) {
    EXPECT_EQ(format_perm(w_of_tableau(one_component_example())), "1,2,3,8,4,6,7,5");
    for (const Multipartition& xi : multipartitions(4, 2)) {
        const Perm w = w_of_tableau(ground_state(xi));
        EXPECT_EQ(w, identity_perm(static_cast<int>(w.size())));
    }
}

TEST(Tableau, Refinements) {
    const Charge ch{3, {1}, {}};
    const auto [lam, mu] = refinements(one_component_example(), ch);
    EXPECT_EQ(format_shadowed(lam), "2,1,1;1,1,1;0,1,0");
    // Entry 4 fills one box of residue 1 and one of residue 2.
    EXPECT_EQ(format_shadowed(mu), "1,1,0;0,0,2;0,1,0;1,1,0;1,0,0");
    EXPECT_EQ(lam.dimension(3), mu.dimension(3));

    const Charge c2{3, {2}, {}};
    const auto [l1, m1] = refinements(ground_state({{1}}), c2);
    EXPECT_EQ(format_shadowed(l1), "0,1,0");
    EXPECT_EQ(l1, m1);
}

TEST(Tableau, DegreeExamples) {
    const Charge ch{3, {0}, {}};
    EXPECT_EQ(deg_tableau(ground_state({{1}}), ch), 0);
    EXPECT_EQ(deg_tableau(ground_state({{2}}), ch), 0);
    EXPECT_EQ(deg_tableau(ground_state({{2}}), ch, DegConvention::Literal), 0);
}

TEST(Tableau, GroundStatesHaveDegreeZero) {
    for (int e : {2, 3, 4})
        for (const Charge& ch : {Charge{e, {0, 1}, {}}, Charge{e, {1, 1}, {}}})
            for (const Multipartition& xi : multipartitions(4, 2)) EXPECT_EQ(deg_tableau(ground_state(xi), ch), 0);
}

TEST(MSkew, Examples) {
    const Charge ch{3, {0}, {}};
    EXPECT_EQ(m_skew({{1}}, {{}}, ch), 0);
    EXPECT_EQ(m_skew({{2}}, {{}}, ch), 0);
    EXPECT_EQ(m_skew({{2, 1}}, {{2, 1}}, ch), 0);
    EXPECT_THROW(m_skew({{1, 1}}, {{}}, ch), std::invalid_argument);
    EXPECT_TRUE(is_horizontal_strip({{3, 1}}, {{1}}));
    EXPECT_FALSE(is_horizontal_strip({{1, 1}}, {{}}));
}

TEST(MSkew, RulesAgreeOnSingleResidueStrips) {
    for (int e : {2, 3})
        for (const Charge& ch : {Charge{e, {0}, {}}, Charge{e, {0, 1}, {}}}) {
            for (int small = 0; small <= 3; ++small)
                for (const Multipartition& xi : multipartitions(small, ch.ell()))
                    for (int big = small + 1; big <= small + 2; ++big)
                        for (const Multipartition& eta : multipartitions(big, ch.ell())) {
                            if (!contains(eta, xi) || !is_horizontal_strip(eta, xi)) continue;
                            std::set<int> res;
                            for (const Box& b : boxes(eta)) {
                                const auto& row = xi[b.comp - 1];
                                if (b.row > static_cast<int>(row.size()) || b.col > row[b.row - 1])
                                    res.insert(residue(b, ch));
                            }
                            if (res.size() != 1) continue;
                            EXPECT_EQ(m_skew(eta, xi, ch, DegConvention::Exact),
                                      m_skew(eta, xi, ch, DegConvention::Literal))
                                << format_multipartition(eta) << " / " << format_multipartition(xi);
                        }
        }
}

TEST(DoubleCosets, Examples) {
    EXPECT_EQ(min_double_cosets({{1, 0}, {1, 0}}, {{1, 0}, {1, 0}}).size(), 2u);
    EXPECT_EQ(min_double_cosets({{2, 0}}, {{2, 0}}).size(), 1u);
    EXPECT_EQ(min_double_cosets({{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}).size(), 1u);
}

TEST(DoubleCosets, MatchBruteForceAndRoundTrip) {
    const int e = 2;
    for (const auto& lambda : enumerate_vcomps({2, 2}, false))
        for (const auto& mu : enumerate_vcomps({2, 2}, false)) {
            const auto cosets = min_double_cosets(lambda, mu);
            EXPECT_EQ(static_cast<long long>(cosets.size()), count_minimal_perms(lambda, mu, e));
            for (const auto& c : cosets) EXPECT_EQ(coset_of(lambda, mu, c.perm).tables, c.tables);
        }
}

TEST(DoubleCosets, NonMinimalIsRejected) {
    // Swapping the two strands of one block is not minimal.
    EXPECT_THROW(coset_of({{2, 0}}, {{1, 0}, {1, 0}}, {{1, 0}, {}}), std::invalid_argument);
}

TEST(CountPairs, Examples) {
    EXPECT_EQ(count_pairs({{1}}, 1), 1);
    EXPECT_EQ(count_pairs({{2}}, 2), 1);
    // Shapes (2) and (1,1) each carry one standard tableau and one of type (1,1).
    EXPECT_EQ(count_pairs({{1, 1}}, 2), 2);
}

TEST(CountPairs, ColoredWordOracle) {
    // n!/prod parts! * prod_k k^{|xi^(k)|} under UpTo; (l-k+1) replaces k under From.
    const std::vector<Multicomposition> cases{{{2, 1}, {1}}, {{1}, {2, 1}}, {{1, 1}, {1, 1}}, {{}, {3}}, {{2}, {}}};
    for (const auto& xi : cases) {
        const int ell = static_cast<int>(xi.size());
        int n = 0;
        for (const auto& g : xi) n = std::accumulate(g.begin(), g.end(), n);
        long long up = 1, from = 1;
        for (int i = 2; i <= n; ++i) up *= i, from *= i;
        for (int k = 1; k <= ell; ++k)
            for (int x : xi[k - 1])
                for (int i = 1; i <= x; ++i) {
                    up = up / i * k;
                    from = from / i * (ell - k + 1);
                }
        EXPECT_EQ(count_pairs(xi, n, AlphabetRule::UpTo), up);
        EXPECT_EQ(count_pairs(xi, n, AlphabetRule::From), from);
    }
}

TEST(Text, RoundTrips) {
    const Multipartition mp{{4, 3}, {}, {2, 1}};
    EXPECT_EQ(format_multipartition(mp), "4,3||2,1");
    EXPECT_EQ(parse_multipartition("4,3||2,1"), mp);
    EXPECT_THROW(parse_multipartition("1,2"), std::invalid_argument);
    const VectorComposition v{{1, 0, 2}, {0, 1, 0}};
    EXPECT_EQ(parse_vcomp(format_vcomp(v), 3), v);
    EXPECT_THROW(parse_vcomp("1,0", 3), std::invalid_argument);
    EXPECT_THROW(parse_vcomp("0,0,0", 3), std::invalid_argument);
    const Charge ch{3, {0, 1}, {}};
    const ShadowedComposition s = parse_shadowed("1,0,0;0,0,1|", ch);
    EXPECT_EQ(s.weights, (std::vector<int>{3, 1}));
    EXPECT_EQ(format_shadowed(s), "1,0,0;0,0,1|");
    EXPECT_THROW(parse_shadowed("1,0,0", ch), std::invalid_argument);
    EXPECT_EQ(format_entry(E(3, 2)), "3_2");
}
