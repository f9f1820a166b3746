#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace qschur {

using BigInt = boost::multiprecision::cpp_int;

// Entry t is the multiplicity of node t+1. Node e doubles as residue 0.
using DimVector = std::vector<int>;

int total(const DimVector& d);
DimVector add(const DimVector& a, const DimVector& b);
DimVector sub(const DimVector& a, const DimVector& b);
DimVector unit_vector(int e, int node);  // node in 1..e
bool is_zero_vector(const DimVector& d);
// Node label (1..e) of an integer residue.
int node_of_residue(int residue, int e);

// Element of Z[q, q^-1].
class LaurentInt {
public:
    LaurentInt() = default;
    LaurentInt(long long c);
    static LaurentInt monomial(int exponent, const BigInt& c = 1);

    const std::map<int, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coeff(int exponent) const;
    int min_exponent() const;  // requires nonzero
    int max_exponent() const;  // requires nonzero
    BigInt at_one() const;

    void add_term(int exponent, const BigInt& c);
    LaurentInt& operator+=(const LaurentInt& o);
    LaurentInt& operator-=(const LaurentInt& o);
    LaurentInt& operator*=(const LaurentInt& o);
    friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
    friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
    friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
    LaurentInt operator-() const;
    friend bool operator==(const LaurentInt& a, const LaurentInt& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentInt& a, const LaurentInt& b) { return !(a == b); }
    friend bool operator<(const LaurentInt& a, const LaurentInt& b) { return a.terms_ < b.terms_; }

    // "c*q^k+..." with ascending exponents, "0" for zero.
    std::string to_string() const;
    // Accepts the to_string syntax; also bare integers, "q", "-q^-1".
    static LaurentInt parse(const std::string& s);

private:
    std::map<int, BigInt> terms_;
};

LaurentInt bar_q(const LaurentInt& p);

struct VarIndex {
    int node;      // 1..e
    int position;  // 1..d_node
};

// Integer polynomial in alphabets x_{i,1..d_i}, i = 1..e.
// Variables are flattened node-major; monomials are exponent vectors in that order.
class MultiPoly {
public:
    using Exponent = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(DimVector ambient);
    static MultiPoly constant(const DimVector& ambient, const BigInt& c);
    static MultiPoly variable(const DimVector& ambient, VarIndex v);
    static MultiPoly monomial(const DimVector& ambient, const Exponent& exps, const BigInt& c = 1);

    const DimVector& ambient() const { return ambient_; }
    int num_vars() const { return num_vars_; }
    int offset(int node) const;  // flat index of x_{node,1}
    int flat(VarIndex v) const;
    VarIndex var_of(int flat_index) const;

    const std::map<Exponent, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;  // zero counts as homogeneous
    int degree() const;           // largest total degree, -1 for zero
    BigInt coeff(const Exponent& m) const;

    void add_term(const Exponent& m, const BigInt& c);
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator*(const BigInt& c) const;
    MultiPoly operator-() const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Substitutes x_v -> x_{perm[v]} on flat indices.
    MultiPoly relabeled(const std::vector<int>& perm) const;
    MultiPoly swapped(int a, int b) const;
    // Quotient by (x_a - x_b); throws std::logic_error on a nonzero remainder.
    MultiPoly divide_by_difference(int a, int b) const;
    // Same polynomial in another ambient ring; flat variable v goes to map[v].
    MultiPoly embedded(const DimVector& ambient, const std::vector<int>& map) const;

    std::string to_string() const;

private:
    DimVector ambient_;
    int num_vars_ = 0;
    std::map<Exponent, BigInt> terms_;
};

// One-line 0-based permutations: p[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm inverse(const Perm& p);
Perm compose(const Perm& a, const Perm& b);  // a after b
int length(const Perm& p);
bool is_permutation(const Perm& p);
// Adjacent swaps (0-based i swaps i,i+1) that bubble-sort the one-line form of p, in order.
// The word is reduced of length l(p).
std::vector<int> reduced_word(const Perm& p);
// Inverse of reduced_word: perm_from_word(n, reduced_word(p)) == p.
Perm perm_from_word(int n, const std::vector<int>& word);
std::vector<Perm> all_perms(int n);

// One permutation per node acting on that node's positions.
using NodePerm = std::vector<Perm>;

// (w f)(x) = f(x_{w(1)}, ...): x_{t,i} -> x_{t,p[t][i]}.
MultiPoly apply_permutation(const NodePerm& p, const MultiPoly& f);
// Flat version; throws std::invalid_argument if p moves a variable to another node.
MultiPoly apply_flat_permutation(const Perm& p, const MultiPoly& f);

// (f - s_j f) / (x_{node,j} - x_{node,j+1}), j 1-based.
MultiPoly demazure(int node, int j, const MultiPoly& f);
// word[0] applied last. Throws std::out_of_range on bad positions.
MultiPoly demazure_word(const std::vector<VarIndex>& word, const MultiPoly& f);
// demazure_word along reduced_word(w), shifted to node positions first+1..first+w.size().
MultiPoly demazure_perm(int node, int first, const Perm& w, const MultiPoly& f);

MultiPoly euler_class(const DimVector& c, const DimVector& d);
std::vector<MultiPoly> artin_basis(const DimVector& d);

}  // namespace qschur
