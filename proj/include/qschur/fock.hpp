#pragma once

#include "qschur/combinatorics.hpp"
#include "qschur/exact_poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschur {

struct FockConfig {
    Charge charge;
    DegConvention convention = DegConvention::Exact;
};

// Coefficients on the standard basis u_xi; zero coefficients are never stored.
// Keys may have fewer components than the charge while an h-vector is being built.
using FockVector = std::map<Multipartition, LaurentInt>;

// Raised when a standard-basis expansion is not unitriangular, or a canonical
// coefficient leaves q^-1 N[q^-1].
class ConventionFailure : public std::runtime_error {
public:
    ConventionFailure(Multipartition xi, const std::string& what)
        : std::runtime_error(what), xi_(std::move(xi)) {}
    const Multipartition& xi() const { return xi_; }

private:
    Multipartition xi_;
};

FockVector basis_vector(const Multipartition& xi);
void add_scaled(FockVector& into, const FockVector& v, const LaurentInt& c);
FockVector scaled(const FockVector& v, const LaurentInt& c);
LaurentInt coefficient(const FockVector& v, const Multipartition& xi);

// Horizontal strips eta/xi inside xi.size() components with residue content d.
std::vector<Multipartition> strips_with_content(const Multipartition& xi, const DimVector& d, const Charge& charge);

FockVector f_action(const FockConfig& cfg, const DimVector& d, const FockVector& v);
// Adjoint of f_{alpha_i} for the form making u_xi orthonormal; i is a node label.
FockVector e_action(const FockConfig& cfg, int node, const FockVector& v);
// Appends an empty component to every key.
FockVector tensor_empty(const FockVector& v);
FockVector h_vector(const FockConfig& cfg, const ShadowedComposition& mu);
LaurentInt inner(const FockVector& u, const FockVector& v);
std::string format_fock(const FockVector& v);

// Psi(u_xi) for every l-multipartition of n, from Psi(h) = h.
class BarInvolution {
public:
    // Throws ConventionFailure if some h_{lambda_xi} is not u_xi plus lex-larger terms.
    BarInvolution(const FockConfig& cfg, int n);

    const FockConfig& config() const { return cfg_; }
    int n() const { return n_; }
    const FockVector& on_basis(const Multipartition& xi) const;
    FockVector operator()(const FockVector& v) const;

private:
    FockConfig cfg_;
    int n_;
    std::map<Multipartition, FockVector> images_;
};

// Unique bar-symmetric beta with c - beta in q^-1 Z[q^-1].
LaurentInt bar_symmetric_part(const LaurentInt& c);

// p_xi = u_xi + sum_{eta > xi} d_{xi,eta}(q) u_eta. Throws ConventionFailure on a
// coefficient outside q^-1 N[q^-1].
std::map<Multipartition, FockVector> canonical_basis(const BarInvolution& psi);
std::map<Multipartition, FockVector> canonical_basis(const FockConfig& cfg, int n);

using FockMatrix = std::map<Multipartition, std::map<Multipartition, LaurentInt>>;
// D[xi][eta] = coefficient of u_eta in p_xi.
FockMatrix decomposition_matrix(const std::map<Multipartition, FockVector>& canonical);
// phi_xi with (p_xi, phi_eta) = delta.
std::map<Multipartition, FockVector> dual_canonical_basis(const std::map<Multipartition, FockVector>& canonical);

bool is_m_dominant(const Charge& charge, int m);

}  // namespace qschur
