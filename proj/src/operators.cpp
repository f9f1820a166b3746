#include "qschur/operators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace qschur {

namespace {

// Position (0-based within the node alphabet) of the first node-`node` variable of the strand at index.
int node_offset(const Layout& L, int index, int node) {
    int o = 0;
    for (int j = 0; j < index; ++j)
        if (!L[j].red) o += L[j].part[node - 1];
    return o;
}

void require_black(const Layout& L, int index) {
    if (index < 0 || index >= static_cast<int>(L.size()) || L[index].red)
        throw std::invalid_argument("expected a black strand at index " + std::to_string(index));
}

void require_red(const Layout& L, int index) {
    if (index < 0 || index >= static_cast<int>(L.size()) || !L[index].red)
        throw std::invalid_argument("expected a red strand at index " + std::to_string(index));
}

int binom2(int x) { return x * (x - 1) / 2; }

// Variable groups permuted by the Young subgroup of L: (flat offset, size).
std::vector<std::pair<int, int>> variable_blocks(const Layout& L, int e) {
    DimVector d = layout_dimension(L, e);
    std::vector<std::pair<int, int>> out;
    int flat = 0;
    for (int t = 1; t <= e; ++t) {
        for (const Strand& s : L)
            if (!s.red && s.part[t - 1] > 0) {
                out.push_back({flat, s.part[t - 1]});
                flat += s.part[t - 1];
            }
    }
    return out;
}

// Exponent vectors weakly decreasing inside each block, of the given total degree.
std::vector<MultiPoly::Exponent> canonical_monomials(const Layout& L, int e, int degree) {
    const auto blocks = variable_blocks(L, e);
    const int n = total(layout_dimension(L, e));
    std::vector<MultiPoly::Exponent> out;
    if (degree < 0) return out;
    MultiPoly::Exponent m(n, 0);
    std::function<void(size_t, int, int, int)> rec = [&](size_t blk, int pos, int rest, int cap) {
        if (blk == blocks.size()) {
            if (rest == 0) out.push_back(m);
            return;
        }
        auto [off, sz] = blocks[blk];
        if (pos == sz) {
            rec(blk + 1, 0, rest, rest);
            return;
        }
        for (int x = std::min(rest, cap); x >= 0; --x) {
            m[off + pos] = x;
            rec(blk, pos + 1, rest - x, x);
        }
        m[off + pos] = 0;
    };
    if (n == 0) {
        if (degree == 0) out.push_back(m);
        return out;
    }
    rec(0, 0, degree, degree);
    return out;
}

MultiPoly orbit_sum(const Layout& L, int e, const MultiPoly::Exponent& rep) {
    const DimVector d = layout_dimension(L, e);
    const auto blocks = variable_blocks(L, e);
    MultiPoly out(d);
    MultiPoly::Exponent m = rep;
    std::function<void(size_t)> rec = [&](size_t blk) {
        if (blk == blocks.size()) {
            out.add_term(m, 1);
            return;
        }
        auto [off, sz] = blocks[blk];
        std::vector<int> vals(rep.begin() + off, rep.begin() + off + sz);
        std::sort(vals.begin(), vals.end());
        do {
            std::copy(vals.begin(), vals.end(), m.begin() + off);
            rec(blk + 1);
        } while (std::next_permutation(vals.begin(), vals.end()));
    };
    rec(0);
    return out;
}

void sort_strands(OperatorExpr& op, std::vector<std::vector<int>> keys) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < keys.size(); ++i) {
            if (!(keys[i + 1] < keys[i])) continue;
            const Layout& L = op.target();
            const bool r0 = L[i].red, r1 = L[i + 1].red;
            if (r0 && r1) throw std::logic_error("red strands never cross");
            if (!r0 && !r1) op.cross(static_cast<int>(i));
            else if (!r0) op.shift_right(static_cast<int>(i));
            else op.shift_left(static_cast<int>(i));
            std::swap(keys[i], keys[i + 1]);
            changed = true;
        }
    }
}

}  // namespace

// ---------------------------------------------------------------- layouts

Layout layout_of(const VectorComposition& mu) {
    Layout L;
    for (const auto& part : mu) {
        if (is_zero_vector(part)) throw std::invalid_argument("zero part");
        L.push_back(Strand{false, part, 0});
    }
    return L;
}

Layout layout_of(const ShadowedComposition& mu) {
    if (mu.weights.size() != mu.groups.size()) throw std::invalid_argument("one weight per group expected");
    Layout L;
    for (size_t k = 0; k < mu.groups.size(); ++k) {
        L.push_back(Strand{true, {}, mu.weights[k]});
        for (const auto& part : mu.groups[k]) {
            if (is_zero_vector(part)) throw std::invalid_argument("zero part");
            L.push_back(Strand{false, part, 0});
        }
    }
    return L;
}

DimVector layout_dimension(const Layout& L, int e) {
    DimVector d(e, 0);
    for (const Strand& s : L)
        if (!s.red) d = add(d, s.part);
    return d;
}

VectorComposition black_parts(const Layout& L) {
    VectorComposition out;
    for (const Strand& s : L)
        if (!s.red) out.push_back(s.part);
    return out;
}

std::string format_layout(const Layout& L) {
    std::string s;
    for (size_t i = 0; i < L.size(); ++i) {
        if (i) s += ' ';
        if (L[i].red) {
            s += "w" + std::to_string(L[i].weight);
        } else {
            s += '(';
            for (size_t t = 0; t < L[i].part.size(); ++t) s += (t ? "," : "") + std::to_string(L[i].part[t]);
            s += ')';
        }
    }
    return s;
}

int layout_shift(const Layout& L) {
    int s = 0;
    for (size_t b = 0; b < L.size(); ++b) {
        if (L[b].red) continue;
        const DimVector& B = L[b].part;
        const int e = static_cast<int>(B.size());
        for (size_t a = 0; a < b; ++a) {
            if (L[a].red) {
                s -= B[L[a].weight - 1];
                continue;
            }
            const DimVector& A = L[a].part;
            for (int i = 0; i < e; ++i) s -= A[i] * B[i] + A[(i + 1) % e] * B[i];
        }
    }
    return s;
}

int phi(const DimVector& c, const DimVector& d) {
    const int e = static_cast<int>(c.size());
    int s = 0;
    for (int i = 0; i < e; ++i) s += c[i] * (d[(i - 1 + e) % e] - d[i]);
    return s;
}

int crossing_degree(const DimVector& c, const DimVector& d) { return phi(c, d) + phi(d, c); }

// ---------------------------------------------------------------- single moves

bool is_invariant(const Layout& L, const MultiPoly& f) {
    const int e = static_cast<int>(f.ambient().size());
    if (f.ambient() != layout_dimension(L, e)) return false;
    for (auto [off, sz] : variable_blocks(L, e))
        for (int p = 0; p + 1 < sz; ++p)
            if (f.swapped(off + p, off + p + 1) != f) return false;
    return true;
}

MultiPoly apply_merge(const Layout& L, int index, const MultiPoly& f) {
    require_black(L, index);
    require_black(L, index + 1);
    const DimVector& c = L[index].part;
    const DimVector& d = L[index + 1].part;
    MultiPoly g = f;
    for (int t = 1; t <= static_cast<int>(c.size()); ++t) {
        int ct = c[t - 1], dt = d[t - 1];
        if (ct == 0 || dt == 0) continue;
        Perm w;
        for (int i = 0; i < dt; ++i) w.push_back(ct + i);
        for (int i = 0; i < ct; ++i) w.push_back(i);
        g = demazure_perm(t, node_offset(L, index, t), w, g);
    }
    return g;
}

MultiPoly apply_split(const Layout& L, int index, const DimVector& first, const MultiPoly& f) {
    require_black(L, index);
    const DimVector d = sub(L[index].part, first);
    MultiPoly E = euler_class(first, d);
    std::vector<int> map;
    for (int t = 1; t <= static_cast<int>(d.size()); ++t) {
        int base = f.offset(t) + node_offset(L, index, t);
        for (int p = 0; p < first[t - 1] + d[t - 1]; ++p) map.push_back(base + p);
    }
    return f * E.embedded(f.ambient(), map);
}

MultiPoly apply_shift(const Layout& L, int index, ShiftDirection dir, const MultiPoly& f) {
    if (dir == ShiftDirection::Left) {
        require_red(L, index);
        require_black(L, index + 1);
        return f;
    }
    require_black(L, index);
    require_red(L, index + 1);
    const int w = L[index + 1].weight;
    MultiPoly::Exponent m(f.num_vars(), 0);
    int base = f.offset(w) + node_offset(L, index, w);
    for (int p = 0; p < L[index].part[w - 1]; ++p) m[base + p] = 1;
    return f * MultiPoly::monomial(f.ambient(), m);
}

int move_degree(const Layout& L, const Move& m) {
    switch (m.kind) {
        case MoveKind::Merge:
            return phi(L[m.index].part, L[m.index + 1].part);
        case MoveKind::Split:
            return phi(m.first, sub(L[m.index].part, m.first));
        case MoveKind::Cross:
            return crossing_degree(L[m.index].part, L[m.index + 1].part);
        case MoveKind::ShiftRight:
            return L[m.index].part[L[m.index + 1].weight - 1];
        case MoveKind::ShiftLeft:
            return L[m.index + 1].part[L[m.index].weight - 1];
        case MoveKind::Poly:
            return m.poly.is_zero() ? 0 : 2 * m.poly.degree();
    }
    return 0;
}

Layout move_target(const Layout& L, const Move& m) {
    Layout out = L;
    const int i = m.index;
    switch (m.kind) {
        case MoveKind::Merge:
            require_black(L, i);
            require_black(L, i + 1);
            out[i].part = add(L[i].part, L[i + 1].part);
            out.erase(out.begin() + i + 1);
            break;
        case MoveKind::Split: {
            require_black(L, i);
            if (m.first.size() != L[i].part.size()) throw std::invalid_argument("split piece has wrong length");
            DimVector rest = sub(L[i].part, m.first);
            for (size_t t = 0; t < rest.size(); ++t)
                if (rest[t] < 0 || m.first[t] < 0) throw std::invalid_argument("split piece exceeds the part");
            if (is_zero_vector(rest) || is_zero_vector(m.first)) throw std::invalid_argument("split into a zero part");
            out[i].part = m.first;
            out.insert(out.begin() + i + 1, Strand{false, rest, 0});
            break;
        }
        case MoveKind::Cross:
            require_black(L, i);
            require_black(L, i + 1);
            std::swap(out[i], out[i + 1]);
            break;
        case MoveKind::ShiftRight:
            require_black(L, i);
            require_red(L, i + 1);
            std::swap(out[i], out[i + 1]);
            break;
        case MoveKind::ShiftLeft:
            require_red(L, i);
            require_black(L, i + 1);
            std::swap(out[i], out[i + 1]);
            break;
        case MoveKind::Poly:
            break;
    }
    return out;
}

MultiPoly apply_move(const Layout& L, const Move& m, const MultiPoly& f) {
    switch (m.kind) {
        case MoveKind::Merge:
            return apply_merge(L, m.index, f);
        case MoveKind::Split:
            return apply_split(L, m.index, m.first, f);
        case MoveKind::Cross: {
            MultiPoly g = apply_merge(L, m.index, f);
            Layout merged = move_target(L, Move{MoveKind::Merge, m.index, {}, {}});
            return apply_split(merged, m.index, L[m.index + 1].part, g);
        }
        case MoveKind::ShiftRight:
            return apply_shift(L, m.index, ShiftDirection::Right, f);
        case MoveKind::ShiftLeft:
            return apply_shift(L, m.index, ShiftDirection::Left, f);
        case MoveKind::Poly:
            return f * m.poly;
    }
    return f;
}

MultiPoly merged_euler_class(const DimVector& c, const DimVector& d) {
    return apply_merge(layout_of(VectorComposition{c, d}), 0, euler_class(c, d));
}

// ---------------------------------------------------------------- OperatorExpr

OperatorExpr::OperatorExpr(Layout source, int e) : source_(std::move(source)), e_(e) {
    for (const Strand& s : source_) {
        if (s.red && (s.weight < 1 || s.weight > e)) throw std::invalid_argument("red weight out of range");
        if (!s.red && (static_cast<int>(s.part.size()) != e || is_zero_vector(s.part)))
            throw std::invalid_argument("bad black part");
    }
    target_ = source_;
}

OperatorExpr& OperatorExpr::append(const Move& m) {
    if (m.kind == MoveKind::Poly) {
        if (m.poly.ambient() != layout_dimension(target_, e_)) throw std::invalid_argument("multiplier lives in another ring");
        if (!m.poly.is_homogeneous()) throw std::invalid_argument("multiplier is not homogeneous");
        if (!is_invariant(target_, m.poly)) throw std::invalid_argument("multiplier is not invariant");
    }
    Layout next = move_target(target_, m);
    degree_ += move_degree(target_, m);
    moves_.push_back(m);
    target_ = std::move(next);
    return *this;
}

OperatorExpr& OperatorExpr::merge(int index) { return append(Move{MoveKind::Merge, index, {}, {}}); }
OperatorExpr& OperatorExpr::split(int index, const DimVector& first) { return append(Move{MoveKind::Split, index, first, {}}); }
OperatorExpr& OperatorExpr::cross(int index) { return append(Move{MoveKind::Cross, index, {}, {}}); }
OperatorExpr& OperatorExpr::shift_right(int index) { return append(Move{MoveKind::ShiftRight, index, {}, {}}); }
OperatorExpr& OperatorExpr::shift_left(int index) { return append(Move{MoveKind::ShiftLeft, index, {}, {}}); }
OperatorExpr& OperatorExpr::multiply(const MultiPoly& h) { return append(Move{MoveKind::Poly, 0, {}, h}); }

std::vector<Layout> OperatorExpr::layouts() const {
    std::vector<Layout> out{source_};
    for (const Move& m : moves_) out.push_back(move_target(out.back(), m));
    return out;
}

MultiPoly OperatorExpr::apply(const MultiPoly& f, bool check) const {
    if (f.ambient() != layout_dimension(source_, e_)) throw std::invalid_argument("input lives in another ring");
    if (check && !is_invariant(source_, f)) throw std::invalid_argument("input is not invariant for the source");
    Layout L = source_;
    MultiPoly g = f;
    for (const Move& m : moves_) {
        if (g.is_zero()) break;
        g = apply_move(L, m, g);
        L = move_target(L, m);
    }
    return g;
}

OperatorExpr OperatorExpr::adjoint() const {
    const auto Ls = layouts();
    OperatorExpr out(target_, e_);
    for (size_t k = moves_.size(); k-- > 0;) {
        const Move& m = moves_[k];
        const Layout& before = Ls[k];
        switch (m.kind) {
            case MoveKind::Merge:
                out.split(m.index, before[m.index].part);
                break;
            case MoveKind::Split:
                out.merge(m.index);
                break;
            case MoveKind::Cross:
                out.cross(m.index);
                break;
            case MoveKind::ShiftRight:
                out.shift_left(m.index);
                break;
            case MoveKind::ShiftLeft:
                out.shift_right(m.index);
                break;
            case MoveKind::Poly:
                out.multiply(m.poly);
                break;
        }
    }
    return out;
}

OperatorExpr compose(const OperatorExpr& after, const OperatorExpr& before) {
    if (before.target() != after.source()) throw std::invalid_argument("composition of incompatible operators");
    OperatorExpr out = before;
    for (const Move& m : after.moves()) out.append(m);
    return out;
}

namespace {

// Flat index maps of the left and right alphabets into the concatenated one.
std::pair<std::vector<int>, std::vector<int>> concat_maps(const DimVector& da, const DimVector& db) {
    DimVector d = add(da, db);
    MultiPoly big(d);
    std::vector<int> ma, mb;
    for (int t = 1; t <= static_cast<int>(d.size()); ++t)
        for (int p = 1; p <= da[t - 1]; ++p) ma.push_back(big.flat({t, p}));
    for (int t = 1; t <= static_cast<int>(d.size()); ++t)
        for (int p = 1; p <= db[t - 1]; ++p) mb.push_back(big.flat({t, da[t - 1] + p}));
    return {ma, mb};
}

}  // namespace

MultiPoly tensor(const MultiPoly& f, const MultiPoly& g) {
    DimVector d = add(f.ambient(), g.ambient());
    auto [ma, mb] = concat_maps(f.ambient(), g.ambient());
    return f.embedded(d, ma) * g.embedded(d, mb);
}

OperatorExpr horizontal(const OperatorExpr& a, const OperatorExpr& b) {
    if (a.e() != b.e()) throw std::invalid_argument("operators over different quivers");
    const int e = a.e();
    const DimVector da = a.dimension(), db = b.dimension(), d = add(da, db);
    auto [ma, mb] = concat_maps(da, db);
    Layout src = a.source();
    src.insert(src.end(), b.source().begin(), b.source().end());
    OperatorExpr out(src, e);
    for (Move m : a.moves()) {
        if (m.kind == MoveKind::Poly) m.poly = m.poly.embedded(d, ma);
        out.append(m);
    }
    const int shift = static_cast<int>(a.target().size());
    for (Move m : b.moves()) {
        m.index += shift;
        if (m.kind == MoveKind::Poly) m.poly = m.poly.embedded(d, mb);
        out.append(m);
    }
    return out;
}

// ---------------------------------------------------------------- invariants and equality

std::vector<MultiPoly> invariant_basis(const Layout& L, int e, int degree) {
    std::vector<MultiPoly> out;
    for (const auto& rep : canonical_monomials(L, e, degree)) out.push_back(orbit_sum(L, e, rep));
    return out;
}

int generator_degree_bound(const Layout& L, int e) {
    DimVector d = layout_dimension(L, e);
    int n = 0;
    for (int t = 0; t < e; ++t) n += binom2(d[t]);
    for (const Strand& s : L)
        if (!s.red)
            for (int t = 0; t < e; ++t) n -= binom2(s.part[t]);
    return n;
}

std::vector<MultiPoly> invariant_generators(const Layout& L, int e) {
    std::vector<MultiPoly> out;
    for (int k = 0; k <= generator_degree_bound(L, e); ++k) {
        auto part = invariant_basis(L, e, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

bool op_equal(const OperatorExpr& a, const OperatorExpr& b) {
    if (a.e() != b.e() || a.source() != b.source() || a.target() != b.target())
        throw std::invalid_argument("operators have different source or target");
    for (const MultiPoly& g : invariant_generators(a.source(), a.e()))
        if (a.apply(g, false) != b.apply(g, false)) return false;
    return true;
}

int polynomial_shift(const OperatorExpr& op) {
    int twice = op.degree() - (layout_shift(op.target()) - layout_shift(op.source()));
    if (twice % 2 != 0) throw std::logic_error("odd polynomial degree shift");
    return twice / 2;
}

std::vector<GradedPiece> graded_matrix(const OperatorExpr& op, int cutoff) {
    const int delta = polynomial_shift(op);
    std::vector<GradedPiece> out;
    for (int k = 0; k <= cutoff; ++k) {
        GradedPiece piece;
        piece.source_degree = k;
        piece.target_degree = k + delta;
        piece.source_basis = invariant_basis(op.source(), op.e(), k);
        piece.target_monomials = canonical_monomials(op.target(), op.e(), k + delta);
        piece.matrix.assign(piece.target_monomials.size(), std::vector<BigInt>(piece.source_basis.size(), 0));
        for (size_t c = 0; c < piece.source_basis.size(); ++c) {
            MultiPoly img = op.apply(piece.source_basis[c], false);
            for (size_t r = 0; r < piece.target_monomials.size(); ++r) piece.matrix[r][c] = img.coeff(piece.target_monomials[r]);
        }
        out.push_back(std::move(piece));
    }
    return out;
}

// ---------------------------------------------------------------- basis morphisms

RefinedPair refine(const VectorComposition& lambda, const VectorComposition& mu, const DoubleCoset& c) {
    const size_t e = c.tables.size();
    auto piece = [&](size_t a, size_t b) {
        DimVector p(e, 0);
        for (size_t t = 0; t < e; ++t) p[t] = c.tables[t][a][b];
        return p;
    };
    RefinedPair out;
    for (size_t b = 0; b < mu.size(); ++b)
        for (size_t a = 0; a < lambda.size(); ++a)
            if (auto p = piece(a, b); !is_zero_vector(p)) out.mu_prime.push_back(p);
    for (size_t a = 0; a < lambda.size(); ++a)
        for (size_t b = 0; b < mu.size(); ++b)
            if (auto p = piece(a, b); !is_zero_vector(p)) out.lambda_prime.push_back(p);
    return out;
}

OperatorExpr basis_morphism(const VectorComposition& mu, const VectorComposition& lambda, const NodePerm& p,
                            const MultiPoly& h, int e) {
    const DoubleCoset c = coset_of(lambda, mu, p);
    OperatorExpr op(layout_of(mu), e);
    std::vector<std::vector<int>> keys;
    int idx = 0;
    for (size_t b = 0; b < mu.size(); ++b) {
        std::vector<std::pair<size_t, DimVector>> pieces;
        for (size_t a = 0; a < lambda.size(); ++a) {
            DimVector piece(e, 0);
            for (int t = 0; t < e; ++t) piece[t] = c.tables[t][a][b];
            if (!is_zero_vector(piece)) pieces.push_back({a, piece});
        }
        for (size_t j = 0; j < pieces.size(); ++j) {
            if (j + 1 < pieces.size()) op.split(idx, pieces[j].second);
            keys.push_back({static_cast<int>(pieces[j].first), static_cast<int>(b)});
            ++idx;
        }
    }
    if (h != MultiPoly::constant(h.ambient(), 1)) op.multiply(h);
    sort_strands(op, keys);
    std::sort(keys.begin(), keys.end());
    for (size_t i = 0, pos = 0; i < keys.size(); ++pos) {
        size_t j = i;
        while (j < keys.size() && keys[j][0] == keys[i][0]) ++j;
        for (size_t m = i + 1; m < j; ++m) op.merge(static_cast<int>(pos));
        i = j;
    }
    return op;
}

OperatorExpr B_of_tableau(const SemistandardTableau& s, const Charge& charge) {
    const int e = charge.e;
    const ShadowedComposition mu = mu_of_tableau(s, charge);
    const ShadowedComposition lambda = lambda_of_shape(s.shape, charge);
    // pieces[(k,g)][(c,r)] = residue content of boxes with entry g_k in row r of component c.
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, DimVector>> pieces;
    for (const Box& b : s.reading_boxes()) {
        const Entry& x = s.at(b);
        auto& v = pieces[{x.alphabet, x.number}][{b.comp, b.row}];
        if (v.empty()) v.assign(e, 0);
        ++v[residue(b, charge) - 1];
    }
    OperatorExpr op(layout_of(mu), e);
    std::vector<std::vector<int>> keys;
    int idx = 0;
    for (int k = 1; k <= s.ell(); ++k) {
        keys.push_back({k, 0, 0, 0, 0});
        ++idx;
        for (int g = 1; g <= static_cast<int>(mu.groups[k - 1].size()); ++g) {
            const auto& rows = pieces.at({k, g});
            size_t j = 0;
            for (const auto& [cr, v] : rows) {
                if (j + 1 < rows.size()) op.split(idx, v);
                keys.push_back({cr.first, 1, cr.second, k, g});
                ++idx;
                ++j;
            }
        }
    }
    sort_strands(op, keys);
    std::sort(keys.begin(), keys.end());
    for (size_t i = 0, pos = 0; i < keys.size(); ++pos) {
        size_t j = i + 1;
        if (keys[i][1] == 1)
            while (j < keys.size() && keys[j][1] == 1 && keys[j][0] == keys[i][0] && keys[j][2] == keys[i][2]) ++j;
        for (size_t m = i + 1; m < j; ++m) op.merge(static_cast<int>(pos));
        i = j;
    }
    if (op.target() != layout_of(lambda)) throw std::logic_error("B_S does not end at lambda_S");
    return op;
}

std::optional<OperatorExpr> C_of_pair(const SemistandardTableau& s, const SemistandardTableau& t, const Charge& charge) {
    if (s.shape != t.shape) return std::nullopt;
    return compose(B_of_tableau(s, charge).adjoint(), B_of_tableau(t, charge));
}

std::vector<OperatorExpr> chicken_feet(const Layout& mu, int e) {
    // Distinct orderings of the unit vectors making up each black part.
    std::vector<std::vector<std::vector<int>>> orderings;
    for (const Strand& s : mu) {
        if (s.red) continue;
        std::vector<int> nodes;
        for (int t = 1; t <= e; ++t) nodes.insert(nodes.end(), s.part[t - 1], t);
        std::vector<std::vector<int>> all;
        do all.push_back(nodes);
        while (std::next_permutation(nodes.begin(), nodes.end()));
        orderings.push_back(std::move(all));
    }
    std::vector<OperatorExpr> out;
    std::vector<size_t> choice(orderings.size(), 0);
    while (true) {
        OperatorExpr op(mu, e);
        int idx = 0;
        size_t blk = 0;
        for (const Strand& s : mu) {
            if (s.red) {
                ++idx;
                continue;
            }
            const auto& nodes = orderings[blk][choice[blk]];
            for (size_t j = 0; j + 1 < nodes.size(); ++j) op.split(idx++, unit_vector(e, nodes[j]));
            ++idx;
            ++blk;
        }
        out.push_back(std::move(op));
        size_t k = 0;
        while (k < choice.size() && ++choice[k] == orderings[k].size()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return out;
}

}  // namespace qschur
