#pragma once

#include "qschur/combinatorics.hpp"
#include "qschur/fock.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qschur {

// deg(B_S) from the operator bookkeeping; the cellular degree of S.
int tableau_degree(const SemistandardTableau& s, const Charge& charge);

struct CellTriple {
    Multipartition shape;
    SemistandardTableau s;
    SemistandardTableau t;
    int degree = 0;
};
// All same-shape pairs over l-multipartitions of n, shapes in lex order.
std::vector<CellTriple> cell_basis(int n, const Charge& charge);

// Graded dimensions carry q^{-deg}, the orientation of the Fock space, so no flip is needed
// when comparing with inner products there.
using GradedDim = LaurentInt;

// Semistandard tableaux of every shape with type mu (mu has one group per component).
std::vector<SemistandardTableau> tableaux_of_type(const ShadowedComposition& mu, const Charge& charge);
// sum_S q^{-deg S} u_{sh S} over tableaux of type mu.
FockVector weyl_vector(const ShadowedComposition& mu, const Charge& charge);
// mu -> weyl_vector(mu) for every type occurring at size n.
std::map<ShadowedComposition, FockVector> weyl_vectors(int n, const Charge& charge);
// mu -> sum over tableaux of shape xi and type mu of q^{-deg S}.
std::map<ShadowedComposition, GradedDim> weyl_character(const Multipartition& xi, const Charge& charge);
// sum over same-shape pairs (S of type mu, T of type lambda) of q^{-deg S - deg T}.
GradedDim corner_dim(const ShadowedComposition& mu, const ShadowedComposition& lambda, const Charge& charge);

FockMatrix decomposition_matrix(int n, const FockConfig& cfg);
// Nonzero off-diagonal entries (xi, eta) with eta not dominating xi.
std::vector<std::pair<Multipartition, Multipartition>> dominance_conflicts(const FockMatrix& d);

}  // namespace qschur
