#pragma once

#include "qschur/exact_poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

using VectorComposition = std::vector<DimVector>;
// Block g lists node labels 1..e with multiplicity, increasing.
using ResidueSequence = std::vector<std::vector<int>>;
using Partition = std::vector<int>;
using Multipartition = std::vector<Partition>;
// Per alphabet k: multiplicities of the numbers 1,2,... (trailing zeros allowed).
using Multicomposition = std::vector<std::vector<int>>;

ResidueSequence residue_sequence(const VectorComposition& mu);
VectorComposition from_residue_sequence(const ResidueSequence& seq, int e);
// Flag data: part t lists the node-t entries of every part of mu.
VectorComposition transpose(const VectorComposition& mu);
DimVector dimension(const VectorComposition& mu, int e);
std::vector<VectorComposition> enumerate_vcomps(const DimVector& d, bool complete_only);

// Charge residues z_1..z_l mod e, with optional integer lifts used only by m-dominance.
struct Charge {
    int e = 3;
    std::vector<int> z;
    std::vector<int> lifts;

    int ell() const { return static_cast<int>(z.size()); }
    // Node label (1..e) of z_k + j - i.
    int node(int comp, int row, int col) const;
    // Node carrying the fundamental weight of the k-th red strand.
    int weight_node(int comp) const { return node_of_residue(z[comp - 1], e); }
};

struct Box {
    int comp;  // 1-based
    int row;
    int col;
    friend auto operator<=>(const Box&, const Box&) = default;
};

int residue(const Box& b, const Charge& charge);  // node label

std::vector<Partition> partitions(int n);
// Components in lex order of the whole tuple; ell >= 1.
std::vector<Multipartition> multipartitions(int n, int ell);
int size(const Multipartition& mp);
bool contains(const Multipartition& big, const Multipartition& small);
// Lex order on the tuple of components: the cell order.
bool lex_less(const Multipartition& a, const Multipartition& b);
// Dominance on multipartitions (components concatenated, Dipper-James-Mathas style).
bool dominates(const Multipartition& a, const Multipartition& b);
std::vector<Box> boxes(const Multipartition& mp);
std::vector<Box> addable(const Multipartition& mp);
std::vector<Box> removable(const Multipartition& mp);

struct Entry {
    int alphabet;  // 1..l
    int number;    // >= 1
    friend auto operator<=>(const Entry&, const Entry&) = default;
};

// Which components may hold entries of alphabet k.
enum class AlphabetRule {
    UpTo,  // components 1..k (pinned)
    From,  // components k..l
};
bool alphabet_allows(AlphabetRule rule, int alphabet, int comp);

struct SemistandardTableau {
    Multipartition shape;
    std::vector<std::vector<std::vector<Entry>>> rows;  // rows[comp-1][row-1][col-1]

    const Entry& at(const Box& b) const { return rows[b.comp - 1][b.row - 1][b.col - 1]; }
    int ell() const { return static_cast<int>(shape.size()); }
    int size() const;
    Multicomposition type() const;
    // Boxes in row reading order (components, rows top to bottom, left to right).
    std::vector<Box> reading_boxes() const;
    friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;
};

// Trailing zero multiplicities dropped; used to compare types.
Multicomposition normalized(const Multicomposition& xi);

bool is_semistandard(const SemistandardTableau& s, AlphabetRule rule = AlphabetRule::UpTo);
std::vector<SemistandardTableau> enumerate_semistandard(const Multipartition& shape,
                                                        AlphabetRule rule = AlphabetRule::UpTo,
                                                        const std::optional<Multicomposition>& type = std::nullopt);
// Entries row numbers, alphabet = component.
SemistandardTableau ground_state(const Multipartition& shape);
// Entries 1..n of the last alphabet in reading order; only meaningful for the UpTo rule.
SemistandardTableau row_reading_standard(const Multipartition& shape);

// The boxes holding entries <= bound (strictly below if strict).
Multipartition sub_shape(const SemistandardTableau& s, const Entry& bound, bool strict);

// Minimal permutation sorting the row reading word (stable); 0-based one-line.
Perm w_of_tableau(const SemistandardTableau& s);

// Red strand weights (node labels) and black groups; group k sits right of red strand k.
struct ShadowedComposition {
    std::vector<int> weights;
    std::vector<VectorComposition> groups;

    VectorComposition joined() const;
    DimVector dimension(int e) const;
    friend auto operator<=>(const ShadowedComposition&, const ShadowedComposition&) = default;
};

// Every shadowed composition with one group per component and n boxes in total, sorted.
std::vector<ShadowedComposition> enumerate_shadowed(int n, const Charge& charge);
// Dimension vectors with the given total, lex order.
std::vector<DimVector> vectors_of_total(int n, int e);

ShadowedComposition lambda_of_shape(const Multipartition& shape, const Charge& charge);
ShadowedComposition mu_of_tableau(const SemistandardTableau& s, const Charge& charge);
// (lambda_S, mu_S)
std::pair<ShadowedComposition, ShadowedComposition> refinements(const SemistandardTableau& s,
                                                                const Charge& charge);

enum class DegConvention {
    Exact,    // pinned; equals the degree of B_S
    Literal,  // addable in S(<=) minus removable in S(<), strictly below
};

// Contribution of the boxes of eta/xi when they carry one entry of alphabet k.
int skew_degree(const Multipartition& xi, const Multipartition& eta, int alphabet, const Charge& charge,
                DegConvention conv);
int deg_tableau(const SemistandardTableau& s, const Charge& charge,
                DegConvention conv = DegConvention::Exact);
// Throws std::invalid_argument unless xi is inside eta with no two new boxes in a column.
int m_skew(const Multipartition& eta, const Multipartition& xi, const Charge& charge,
           DegConvention conv = DegConvention::Exact);
bool is_horizontal_strip(const Multipartition& eta, const Multipartition& xi);

// Double cosets S_lambda \ S_d / S_mu, colorwise.
struct DoubleCoset {
    // tables[t][a][b]: node t+1 strands from block a of lambda into block b of mu.
    std::vector<std::vector<std::vector<int>>> tables;
    // perm[t][i]: mu position of the i-th node-(t+1) strand of lambda. Non-crossing within blocks.
    NodePerm perm;
};

std::vector<DoubleCoset> min_double_cosets(const VectorComposition& lambda, const VectorComposition& mu);
// Rebuilds the table from a colored permutation; throws std::invalid_argument if it is not minimal.
DoubleCoset coset_of(const VectorComposition& lambda, const VectorComposition& mu, const NodePerm& perm);
int coset_length(const DoubleCoset& c);

// Pairs (S standard, T of type xi) of equal shape with n boxes and ell = xi.size() components.
long long count_pairs(const Multicomposition& xi, int n, AlphabetRule rule = AlphabetRule::UpTo);

// Text encodings shared with the CLI.
std::string format_vcomp(const VectorComposition& mu);
VectorComposition parse_vcomp(const std::string& s, int e);
std::string format_multipartition(const Multipartition& mp);
Multipartition parse_multipartition(const std::string& s);
// Groups separated by '|', parts by ';', entries by ','. Weights come from the charge.
std::string format_shadowed(const ShadowedComposition& s);
ShadowedComposition parse_shadowed(const std::string& s, const Charge& charge);
std::string format_entry(const Entry& x);
std::string format_perm(const Perm& p);  // 1-based one-line

}  // namespace qschur
