#include "qschur/cellular.hpp"

#include "qschur/operators.hpp"

#include <stdexcept>

namespace qschur {

int tableau_degree(const SemistandardTableau& s, const Charge& charge) { return B_of_tableau(s, charge).degree(); }

std::vector<CellTriple> cell_basis(int n, const Charge& charge) {
    std::vector<CellTriple> out;
    for (const Multipartition& xi : multipartitions(n, charge.ell())) {
        const auto m = enumerate_semistandard(xi);
        std::vector<int> deg;
        for (const auto& s : m) deg.push_back(tableau_degree(s, charge));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) out.push_back({xi, m[i], m[j], deg[i] + deg[j]});
    }
    return out;
}

namespace {

Multicomposition type_sizes(const ShadowedComposition& mu) {
    Multicomposition xi;
    for (const auto& group : mu.groups) {
        std::vector<int> sizes;
        for (const DimVector& part : group) {
            if (total(part) == 0) throw std::invalid_argument("zero part in a shadowed composition");
            sizes.push_back(total(part));
        }
        xi.push_back(std::move(sizes));
    }
    return xi;
}

}  // namespace

std::vector<SemistandardTableau> tableaux_of_type(const ShadowedComposition& mu, const Charge& charge) {
    if (static_cast<int>(mu.groups.size()) != charge.ell())
        throw std::invalid_argument("shadowed composition needs one group per component");
    const Multicomposition type = type_sizes(mu);
    int n = 0;
    for (const auto& g : type)
        for (int x : g) n += x;
    std::vector<SemistandardTableau> out;
    for (const Multipartition& xi : multipartitions(n, charge.ell()))
        for (auto& s : enumerate_semistandard(xi, AlphabetRule::UpTo, type))
            if (mu_of_tableau(s, charge) == mu) out.push_back(std::move(s));
    return out;
}

FockVector weyl_vector(const ShadowedComposition& mu, const Charge& charge) {
    FockVector v;
    for (const auto& s : tableaux_of_type(mu, charge))
        add_scaled(v, basis_vector(s.shape), LaurentInt::monomial(-tableau_degree(s, charge)));
    return v;
}

std::map<ShadowedComposition, FockVector> weyl_vectors(int n, const Charge& charge) {
    std::map<ShadowedComposition, FockVector> out;
    for (const Multipartition& xi : multipartitions(n, charge.ell()))
        for (const auto& s : enumerate_semistandard(xi))
            add_scaled(out[mu_of_tableau(s, charge)], basis_vector(xi),
                       LaurentInt::monomial(-tableau_degree(s, charge)));
    return out;
}

std::map<ShadowedComposition, GradedDim> weyl_character(const Multipartition& xi, const Charge& charge) {
    std::map<ShadowedComposition, GradedDim> out;
    for (const auto& s : enumerate_semistandard(xi))
        out[mu_of_tableau(s, charge)] += LaurentInt::monomial(-tableau_degree(s, charge));
    return out;
}

GradedDim corner_dim(const ShadowedComposition& mu, const ShadowedComposition& lambda, const Charge& charge) {
    if (mu.dimension(charge.e) != lambda.dimension(charge.e)) return {};
    return inner(weyl_vector(mu, charge), weyl_vector(lambda, charge));
}

FockMatrix decomposition_matrix(int n, const FockConfig& cfg) { return decomposition_matrix(canonical_basis(cfg, n)); }

std::vector<std::pair<Multipartition, Multipartition>> dominance_conflicts(const FockMatrix& d) {
    std::vector<std::pair<Multipartition, Multipartition>> out;
    for (const auto& [xi, row] : d)
        for (const auto& [eta, c] : row)
            if (eta != xi && !dominates(eta, xi)) out.emplace_back(xi, eta);
    return out;
}

}  // namespace qschur
