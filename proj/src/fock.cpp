#include "qschur/fock.hpp"

#include <functional>

namespace qschur {

FockVector basis_vector(const Multipartition& xi) { return FockVector{{xi, LaurentInt(1)}}; }

void add_scaled(FockVector& into, const FockVector& v, const LaurentInt& c) {
    if (c.is_zero()) return;
    for (const auto& [xi, a] : v) {
        LaurentInt& slot = into[xi];
        slot += a * c;
        if (slot.is_zero()) into.erase(xi);
    }
}

FockVector scaled(const FockVector& v, const LaurentInt& c) {
    FockVector out;
    add_scaled(out, v, c);
    return out;
}

LaurentInt coefficient(const FockVector& v, const Multipartition& xi) {
    auto it = v.find(xi);
    return it == v.end() ? LaurentInt() : it->second;
}

std::vector<Multipartition> strips_with_content(const Multipartition& xi, const DimVector& d, const Charge& charge) {
    std::vector<Multipartition> out;
    Multipartition eta = xi;
    DimVector rest = d;
    const int comps = static_cast<int>(xi.size());
    // Row r of component c gets k new boxes; rows past the partition start empty.
    std::function<void(int, int)> rec = [&](int c, int r) {
        if (c > comps) {
            if (is_zero_vector(rest)) {
                Multipartition clean = eta;
                for (auto& p : clean)
                    while (!p.empty() && p.back() == 0) p.pop_back();
                out.push_back(std::move(clean));
            }
            return;
        }
        const Partition& base = xi[c - 1];
        const int rows = static_cast<int>(base.size());
        if (r > rows + 1) {
            rec(c + 1, 1);
            return;
        }
        const int len = r <= rows ? base[r - 1] : 0;
        const int cap = r == 1 ? total(rest) : base[r - 2] - len;
        if (r > rows) eta[c - 1].push_back(0);
        rec(c, r + 1);
        int k = 0;
        std::vector<int> used;
        while (k < cap) {
            const int node = charge.node(c, r, len + k + 1);
            if (rest[node - 1] == 0) break;
            --rest[node - 1];
            used.push_back(node);
            ++k;
            eta[c - 1][r - 1] = len + k;
            rec(c, r + 1);
        }
        for (int node : used) ++rest[node - 1];
        eta[c - 1][r - 1] = len;
        if (r > rows) eta[c - 1].pop_back();
    };
    rec(1, 1);
    return out;
}

FockVector f_action(const FockConfig& cfg, const DimVector& d, const FockVector& v) {
    FockVector out;
    for (const auto& [xi, c] : v)
        for (const Multipartition& eta : strips_with_content(xi, d, cfg.charge))
            add_scaled(out, basis_vector(eta),
                       c * LaurentInt::monomial(-m_skew(eta, xi, cfg.charge, cfg.convention)));
    return out;
}

FockVector e_action(const FockConfig& cfg, int node, const FockVector& v) {
    FockVector out;
    for (const auto& [eta, c] : v)
        for (const Box& b : removable(eta)) {
            if (residue(b, cfg.charge) != node) continue;
            Multipartition xi = eta;
            Partition& p = xi[b.comp - 1];
            if (--p[b.row - 1] == 0) p.pop_back();
            add_scaled(out, basis_vector(xi),
                       c * LaurentInt::monomial(-m_skew(eta, xi, cfg.charge, cfg.convention)));
        }
    return out;
}

FockVector tensor_empty(const FockVector& v) {
    FockVector out;
    for (const auto& [xi, c] : v) {
        Multipartition bigger = xi;
        bigger.emplace_back();
        out.emplace(std::move(bigger), c);
    }
    return out;
}

FockVector h_vector(const FockConfig& cfg, const ShadowedComposition& mu) {
    if (mu.groups.empty()) throw std::invalid_argument("shadowed composition without groups");
    if (mu.groups.size() > cfg.charge.z.size()) throw std::invalid_argument("more groups than charges");
    FockVector v = basis_vector(Multipartition(1));
    for (std::size_t k = 0; k < mu.groups.size(); ++k) {
        if (k > 0) v = tensor_empty(v);
        for (const DimVector& part : mu.groups[k]) v = f_action(cfg, part, v);
    }
    return v;
}

LaurentInt inner(const FockVector& u, const FockVector& v) {
    LaurentInt out;
    for (const auto& [xi, a] : u) {
        auto it = v.find(xi);
        if (it != v.end()) out += a * it->second;
    }
    return out;
}

std::string format_fock(const FockVector& v) {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [xi, c] : v) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")u[" + format_multipartition(xi) + "]";
    }
    return out;
}

// ---------------------------------------------------------------- bar involution

BarInvolution::BarInvolution(const FockConfig& cfg, int n) : cfg_(cfg), n_(n) {
    const auto shapes = multipartitions(n, cfg.charge.ell());
    for (auto it = shapes.rbegin(); it != shapes.rend(); ++it) {
        const Multipartition& xi = *it;
        const FockVector h = h_vector(cfg, lambda_of_shape(xi, cfg.charge));
        if (coefficient(h, xi) != LaurentInt(1))
            throw ConventionFailure(xi, "h_lambda(" + format_multipartition(xi) + ") has coefficient " +
                                            coefficient(h, xi).to_string() + " on its own shape");
        FockVector image = h;
        for (const auto& [eta, b] : h) {
            if (eta == xi) continue;
            if (eta < xi)
                throw ConventionFailure(xi, "h_lambda(" + format_multipartition(xi) + ") reaches the lex-smaller " +
                                                format_multipartition(eta));
            add_scaled(image, images_.at(eta), -bar_q(b));
        }
        images_.emplace(xi, std::move(image));
    }
}

const FockVector& BarInvolution::on_basis(const Multipartition& xi) const {
    auto it = images_.find(xi);
    if (it == images_.end()) throw std::out_of_range("no bar image for " + format_multipartition(xi));
    return it->second;
}

FockVector BarInvolution::operator()(const FockVector& v) const {
    FockVector out;
    for (const auto& [xi, c] : v) add_scaled(out, on_basis(xi), bar_q(c));
    return out;
}

// ---------------------------------------------------------------- canonical basis

LaurentInt bar_symmetric_part(const LaurentInt& c) {
    LaurentInt beta;
    for (const auto& [k, a] : c.terms()) {
        if (k < 0) continue;
        beta.add_term(k, a);
        if (k > 0) beta.add_term(-k, a);
    }
    return beta;
}

namespace {

bool in_negative_positive_cone(const LaurentInt& c) {
    for (const auto& [k, a] : c.terms())
        if (k >= 0 || a < 0) return false;
    return true;
}

}  // namespace

std::map<Multipartition, FockVector> canonical_basis(const BarInvolution& psi) {
    const FockConfig& cfg = psi.config();
    const auto shapes = multipartitions(psi.n(), cfg.charge.ell());
    std::map<Multipartition, FockVector> out;
    for (auto it = shapes.rbegin(); it != shapes.rend(); ++it) {
        const Multipartition& xi = *it;
        // BarInvolution already checked unitriangularity of h.
        FockVector v = h_vector(cfg, lambda_of_shape(xi, cfg.charge));
        for (auto pos = v.upper_bound(xi); pos != v.end();) {
            const Multipartition eta = pos->first;
            const LaurentInt beta = bar_symmetric_part(pos->second);
            if (!beta.is_zero()) add_scaled(v, out.at(eta), -beta);
            pos = v.upper_bound(eta);
        }
        for (const auto& [eta, c] : v) {
            if (eta == xi ? c != LaurentInt(1) : !in_negative_positive_cone(c))
                throw ConventionFailure(xi, "canonical vector p(" + format_multipartition(xi) + ") has coefficient " +
                                                c.to_string() + " at " + format_multipartition(eta));
        }
        out.emplace(xi, std::move(v));
    }
    return out;
}

std::map<Multipartition, FockVector> canonical_basis(const FockConfig& cfg, int n) {
    return canonical_basis(BarInvolution(cfg, n));
}

FockMatrix decomposition_matrix(const std::map<Multipartition, FockVector>& canonical) {
    FockMatrix d;
    for (const auto& [xi, p] : canonical) d[xi] = p;
    return d;
}

std::map<Multipartition, FockVector> dual_canonical_basis(const std::map<Multipartition, FockVector>& canonical) {
    // u_xi = p_xi - sum_{eta > xi} d_{xi,eta} u_eta, expanded in the p basis.
    std::map<Multipartition, FockVector> u_in_p;
    for (auto it = canonical.rbegin(); it != canonical.rend(); ++it) {
        const auto& [xi, p] = *it;
        FockVector row = basis_vector(xi);
        for (const auto& [eta, c] : p)
            if (eta != xi) add_scaled(row, u_in_p.at(eta), -c);
        u_in_p.emplace(xi, std::move(row));
    }
    std::map<Multipartition, FockVector> phi;
    for (const auto& [xi, row] : u_in_p)
        for (const auto& [eta, c] : row) add_scaled(phi[eta], basis_vector(xi), c);
    return phi;
}

bool is_m_dominant(const Charge& charge, int m) {
    const std::vector<int>& z = charge.lifts.empty() ? charge.z : charge.lifts;
    for (std::size_t i = 0; i + 1 < z.size(); ++i)
        if (z[i] - z[i + 1] < m) return false;
    return true;
}

}  // namespace qschur
