#pragma once

#include "qschur/combinatorics.hpp"
#include "qschur/exact_poly.hpp"
#include "qschur/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qschur {

// A black strand carries a nonzero part; a red strand carries the node of its weight.
struct Strand {
    bool red = false;
    DimVector part;
    int weight = 0;
    friend bool operator==(const Strand&, const Strand&) = default;
};

using Layout = std::vector<Strand>;

Layout layout_of(const VectorComposition& mu);
// Red strand k followed by group k, for k = 1..l.
Layout layout_of(const ShadowedComposition& mu);
DimVector layout_dimension(const Layout& L, int e);
VectorComposition black_parts(const Layout& L);
std::string format_layout(const Layout& L);
// Grading shift of the idempotent; operator degree = 2 * (change of polynomial degree) + s(target) - s(source).
int layout_shift(const Layout& L);

int phi(const DimVector& c, const DimVector& d);
int crossing_degree(const DimVector& c, const DimVector& d);

enum class MoveKind { Merge, Split, Cross, ShiftRight, ShiftLeft, Poly };

struct Move {
    MoveKind kind;
    int index = 0;          // leftmost strand touched
    DimVector first;        // Split: the left piece
    MultiPoly poly;         // Poly: the multiplier
};

// Start from an idempotent and append moves; each move acts after the previous ones.
class OperatorExpr {
public:
    OperatorExpr() = default;
    OperatorExpr(Layout source, int e);

    const Layout& source() const { return source_; }
    const Layout& target() const { return target_; }
    const std::vector<Move>& moves() const { return moves_; }
    int degree() const { return degree_; }
    int e() const { return e_; }
    DimVector dimension() const { return layout_dimension(source_, e_); }

    OperatorExpr& merge(int index);
    OperatorExpr& split(int index, const DimVector& first);
    OperatorExpr& cross(int index);
    OperatorExpr& shift_right(int index);  // black strand at index moves right across the red at index+1
    OperatorExpr& shift_left(int index);   // black strand at index+1 moves left across the red at index
    // h must be homogeneous and invariant for the current target.
    OperatorExpr& multiply(const MultiPoly& h);
    OperatorExpr& append(const Move& m);

    // Throws std::invalid_argument if f is not invariant for the source (when check is set).
    MultiPoly apply(const MultiPoly& f, bool check = true) const;
    // Vertical flip.
    OperatorExpr adjoint() const;
    // Intermediate layouts, source first.
    std::vector<Layout> layouts() const;

private:
    Layout source_, target_;
    std::vector<Move> moves_;
    int degree_ = 0;
    int e_ = 0;
};

// after o before; requires before.target() == after.source().
OperatorExpr compose(const OperatorExpr& after, const OperatorExpr& before);
// Side by side: a on the left strands, b on the right; alphabets concatenated node-wise.
OperatorExpr horizontal(const OperatorExpr& a, const OperatorExpr& b);
MultiPoly tensor(const MultiPoly& f, const MultiPoly& g);

int move_degree(const Layout& L, const Move& m);
Layout move_target(const Layout& L, const Move& m);
MultiPoly apply_move(const Layout& L, const Move& m, const MultiPoly& f);

bool is_invariant(const Layout& L, const MultiPoly& f);
MultiPoly apply_merge(const Layout& L, int index, const MultiPoly& f);
MultiPoly apply_split(const Layout& L, int index, const DimVector& first, const MultiPoly& f);
enum class ShiftDirection { Left, Right };
MultiPoly apply_shift(const Layout& L, int index, ShiftDirection dir, const MultiPoly& f);

// Delta_w(E) for the split (c+d) -> (c,d), as a polynomial in the alphabet of c+d.
MultiPoly merged_euler_class(const DimVector& c, const DimVector& d);

// Orbit sums of monomials: a Z-basis of the invariants of L in the given degree.
std::vector<MultiPoly> invariant_basis(const Layout& L, int e, int degree);
// Degree bound for generators of the invariants of L over the total invariants.
int generator_degree_bound(const Layout& L, int e);
std::vector<MultiPoly> invariant_generators(const Layout& L, int e);

bool op_equal(const OperatorExpr& a, const OperatorExpr& b);

struct GradedPiece {
    int source_degree = 0;
    int target_degree = 0;
    std::vector<MultiPoly> source_basis;
    std::vector<MultiPoly::Exponent> target_monomials;  // one representative per orbit
    BigMatrix matrix;                                  // rows: target orbits, columns: source basis
};
// Polynomial degree change of op; throws if the degree bookkeeping is not even.
int polynomial_shift(const OperatorExpr& op);
std::vector<GradedPiece> graded_matrix(const OperatorExpr& op, int cutoff);

// mu => lambda through the coarsest refinements determined by the coset, with h on mu'.
struct RefinedPair {
    VectorComposition mu_prime;
    VectorComposition lambda_prime;
};
RefinedPair refine(const VectorComposition& lambda, const VectorComposition& mu, const DoubleCoset& c);
OperatorExpr basis_morphism(const VectorComposition& mu, const VectorComposition& lambda, const NodePerm& p,
                            const MultiPoly& h, int e);

OperatorExpr B_of_tableau(const SemistandardTableau& s, const Charge& charge);
// nullopt stands for the zero operator (different shapes).
std::optional<OperatorExpr> C_of_pair(const SemistandardTableau& s, const SemistandardTableau& t, const Charge& charge);

// One split-to-units diagram per complete refinement of the black parts.
std::vector<OperatorExpr> chicken_feet(const Layout& mu, int e);

}  // namespace qschur
