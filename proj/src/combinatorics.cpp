#include "qschur/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qschur {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (const auto& tok : split(s, ',')) {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

int row_len(const Multipartition& mp, int comp, int row) {
    if (comp < 1 || comp > static_cast<int>(mp.size())) return 0;
    const Partition& p = mp[comp - 1];
    return row >= 1 && row <= static_cast<int>(p.size()) ? p[row - 1] : 0;
}

void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

// ---------------------------------------------------------------- compositions

ResidueSequence residue_sequence(const VectorComposition& mu) {
    ResidueSequence seq;
    for (const auto& part : mu) {
        if (is_zero_vector(part)) throw std::invalid_argument("zero part in vector composition");
        std::vector<int> block;
        for (size_t t = 0; t < part.size(); ++t)
            for (int m = 0; m < part[t]; ++m) block.push_back(static_cast<int>(t) + 1);
        seq.push_back(std::move(block));
    }
    return seq;
}

VectorComposition from_residue_sequence(const ResidueSequence& seq, int e) {
    VectorComposition mu;
    for (const auto& block : seq) {
        if (block.empty()) throw std::invalid_argument("empty block");
        DimVector part(e, 0);
        int last = 0;
        for (int r : block) {
            if (r < 1 || r > e || r < last) throw std::invalid_argument("block not an increasing residue list");
            ++part[r - 1];
            last = r;
        }
        mu.push_back(std::move(part));
    }
    return mu;
}

VectorComposition transpose(const VectorComposition& mu) {
    if (mu.empty()) return {};
    const size_t e = mu.front().size();
    VectorComposition flag(e, DimVector(mu.size()));
    for (size_t g = 0; g < mu.size(); ++g)
        for (size_t t = 0; t < e; ++t) flag[t][g] = mu[g][t];
    return flag;
}

DimVector dimension(const VectorComposition& mu, int e) {
    DimVector d(e, 0);
    for (const auto& part : mu) d = add(d, part);
    return d;
}

std::vector<VectorComposition> enumerate_vcomps(const DimVector& d, bool complete_only) {
    std::vector<VectorComposition> out;
    VectorComposition cur;
    const int e = static_cast<int>(d.size());
    std::function<void(DimVector)> rec = [&](DimVector rest) {
        if (is_zero_vector(rest)) {
            out.push_back(cur);
            return;
        }
        if (complete_only) {
            for (int t = 0; t < e; ++t) {
                if (rest[t] == 0) continue;
                cur.push_back(unit_vector(e, t + 1));
                --rest[t];
                rec(rest);
                ++rest[t];
                cur.pop_back();
            }
            return;
        }
        DimVector part(e, 0);
        while (true) {
            int t = e - 1;
            while (t >= 0 && part[t] == rest[t]) part[t--] = 0;
            if (t < 0) break;
            ++part[t];
            cur.push_back(part);
            rec(sub(rest, part));
            cur.pop_back();
        }
    };
    rec(d);
    return out;
}

// ---------------------------------------------------------------- boxes, shapes

int Charge::node(int comp, int row, int col) const { return node_of_residue(z[comp - 1] + col - row, e); }

int residue(const Box& b, const Charge& charge) { return charge.node(b.comp, b.row, b.col); }

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Multipartition> multipartitions(int n, int ell) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    std::vector<Multipartition> out;
    Multipartition cur;
    std::function<void(int, int)> rec = [&](int rest, int k) {
        if (k == ell) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int m = rest; m >= 0; --m) {
            if (k == ell - 1 && m != rest) continue;
            for (const auto& p : partitions(m)) {
                cur.push_back(p);
                rec(rest - m, k + 1);
                cur.pop_back();
            }
        }
    };
    rec(n, 0);
    std::sort(out.begin(), out.end());
    return out;
}

int size(const Multipartition& mp) {
    int n = 0;
    for (const auto& p : mp) n += std::accumulate(p.begin(), p.end(), 0);
    return n;
}

bool contains(const Multipartition& big, const Multipartition& small) {
    if (big.size() != small.size()) return false;
    for (size_t c = 0; c < big.size(); ++c) {
        if (small[c].size() > big[c].size()) return false;
        for (size_t r = 0; r < small[c].size(); ++r)
            if (small[c][r] > big[c][r]) return false;
    }
    return true;
}

bool lex_less(const Multipartition& a, const Multipartition& b) { return a < b; }

bool dominates(const Multipartition& a, const Multipartition& b) {
    if (a.size() != b.size()) return false;
    int sa = 0, sb = 0;
    for (size_t c = 0; c < a.size(); ++c) {
        size_t rows = std::max(a[c].size(), b[c].size());
        for (size_t r = 0; r < rows; ++r) {
            sa += r < a[c].size() ? a[c][r] : 0;
            sb += r < b[c].size() ? b[c][r] : 0;
            if (sa < sb) return false;
        }
    }
    return true;
}

std::vector<Box> boxes(const Multipartition& mp) {
    std::vector<Box> out;
    for (size_t c = 0; c < mp.size(); ++c)
        for (size_t r = 0; r < mp[c].size(); ++r)
            for (int j = 1; j <= mp[c][r]; ++j)
                out.push_back({static_cast<int>(c) + 1, static_cast<int>(r) + 1, j});
    return out;
}

std::vector<Box> addable(const Multipartition& mp) {
    std::vector<Box> out;
    for (int c = 1; c <= static_cast<int>(mp.size()); ++c) {
        int rows = static_cast<int>(mp[c - 1].size());
        for (int r = 1; r <= rows + 1; ++r) {
            int len = row_len(mp, c, r);
            if (r == 1 || len < row_len(mp, c, r - 1)) out.push_back({c, r, len + 1});
        }
    }
    return out;
}

std::vector<Box> removable(const Multipartition& mp) {
    std::vector<Box> out;
    for (int c = 1; c <= static_cast<int>(mp.size()); ++c)
        for (int r = 1; r <= static_cast<int>(mp[c - 1].size()); ++r) {
            int len = row_len(mp, c, r);
            if (len > 0 && row_len(mp, c, r + 1) < len) out.push_back({c, r, len});
        }
    return out;
}

// ---------------------------------------------------------------- tableaux

bool alphabet_allows(AlphabetRule rule, int alphabet, int comp) {
    return rule == AlphabetRule::UpTo ? comp <= alphabet : comp >= alphabet;
}

int SemistandardTableau::size() const { return qschur::size(shape); }

Multicomposition SemistandardTableau::type() const {
    Multicomposition xi(shape.size());
    for (const auto& comp : rows)
        for (const auto& row : comp)
            for (const Entry& x : row) {
                auto& v = xi[x.alphabet - 1];
                if (static_cast<int>(v.size()) < x.number) v.resize(x.number, 0);
                ++v[x.number - 1];
            }
    return xi;
}

std::vector<Box> SemistandardTableau::reading_boxes() const { return boxes(shape); }

Multicomposition normalized(const Multicomposition& xi) {
    Multicomposition out = xi;
    for (auto& v : out)
        while (!v.empty() && v.back() == 0) v.pop_back();
    return out;
}

bool is_semistandard(const SemistandardTableau& s, AlphabetRule rule) {
    const int ell = s.ell();
    if (static_cast<int>(s.rows.size()) != ell) return false;
    for (int c = 0; c < ell; ++c) {
        if (s.rows[c].size() != s.shape[c].size()) return false;
        for (size_t r = 0; r < s.shape[c].size(); ++r) {
            if (static_cast<int>(s.rows[c][r].size()) != s.shape[c][r]) return false;
            if (r > 0 && s.shape[c][r] > s.shape[c][r - 1]) return false;
            for (int j = 0; j < s.shape[c][r]; ++j) {
                const Entry& x = s.rows[c][r][j];
                if (x.alphabet < 1 || x.alphabet > ell || x.number < 1) return false;
                if (!alphabet_allows(rule, x.alphabet, c + 1)) return false;
                if (j > 0 && s.rows[c][r][j - 1] > x) return false;
                if (r > 0 && !(s.rows[c][r - 1][j] < x)) return false;
            }
        }
    }
    for (const auto& v : s.type())
        for (int m : v)
            if (m == 0) return false;  // a gap
    return true;
}

std::vector<SemistandardTableau> enumerate_semistandard(const Multipartition& shape, AlphabetRule rule,
                                                        const std::optional<Multicomposition>& type) {
    const int ell = static_cast<int>(shape.size());
    const int n = size(shape);
    std::vector<SemistandardTableau> out;
    std::optional<Multicomposition> want;
    if (type) {
        want = normalized(*type);
        if (static_cast<int>(want->size()) != ell) throw std::invalid_argument("type has wrong number of alphabets");
        int m = 0;
        for (const auto& v : *want)
            for (int x : v) {
                if (x <= 0) return out;  // interior zero: no tableau has gaps
                m += x;
            }
        if (m != n) return out;
    }

    SemistandardTableau cur;
    cur.shape = shape;
    cur.rows.resize(ell);
    for (int c = 0; c < ell; ++c) {
        cur.rows[c].resize(shape[c].size());
        for (size_t r = 0; r < shape[c].size(); ++r) cur.rows[c][r].assign(shape[c][r], Entry{0, 0});
    }
    Multipartition filled(ell);
    for (int c = 0; c < ell; ++c) filled[c].assign(shape[c].size(), 0);

    std::function<void(int, int, int)> rec = [&](int k, int g, int placed) {
        if (placed == n) {
            if (want) {
                for (int a = k; a <= ell; ++a) {
                    const auto& v = (*want)[a - 1];
                    int from = a == k ? g - 1 : 0;
                    if (static_cast<int>(v.size()) > from) return;
                }
            }
            out.push_back(cur);
            return;
        }
        if (k > ell) return;
        int exact = -1;
        if (want) {
            const auto& v = (*want)[k - 1];
            exact = g - 1 < static_cast<int>(v.size()) ? v[g - 1] : 0;
        }
        if (exact != 0) {
            std::vector<std::pair<int, int>> slots;
            for (int c = 1; c <= ell; ++c)
                if (alphabet_allows(rule, k, c))
                    for (int r = 1; r <= static_cast<int>(shape[c - 1].size()); ++r) slots.push_back({c, r});
            const Multipartition before = filled;
            std::function<void(size_t, int)> strip = [&](size_t i, int added) {
                if (i == slots.size()) {
                    if (added == 0 || (exact > 0 && added != exact)) return;
                    rec(k, g + 1, placed + added);
                    return;
                }
                auto [c, r] = slots[i];
                int base = before[c - 1][r - 1];
                int cap = shape[c - 1][r - 1];
                if (r > 1) cap = std::min(cap, before[c - 1][r - 2]);
                for (int len = base; len <= cap; ++len) {
                    if (exact > 0 && added + (len - base) > exact) break;
                    if (len > base) cur.rows[c - 1][r - 1][len - 1] = Entry{k, g};
                    filled[c - 1][r - 1] = len;
                    strip(i + 1, added + (len - base));
                }
                filled[c - 1][r - 1] = base;
            };
            strip(0, 0);
        }
        if (exact <= 0) rec(k + 1, 1, placed);
    };
    rec(1, 1, 0);
    return out;
}

SemistandardTableau ground_state(const Multipartition& shape) {
    SemistandardTableau s;
    s.shape = shape;
    s.rows.resize(shape.size());
    for (size_t c = 0; c < shape.size(); ++c)
        for (size_t r = 0; r < shape[c].size(); ++r)
            s.rows[c].push_back(std::vector<Entry>(shape[c][r], Entry{static_cast<int>(c) + 1, static_cast<int>(r) + 1}));
    return s;
}

SemistandardTableau row_reading_standard(const Multipartition& shape) {
    SemistandardTableau s;
    s.shape = shape;
    s.rows.resize(shape.size());
    const int ell = static_cast<int>(shape.size());
    // Numbering in reading order increases along rows and down columns.
    int next = 1;
    for (size_t c = 0; c < shape.size(); ++c)
        for (size_t r = 0; r < shape[c].size(); ++r) {
            std::vector<Entry> row;
            for (int j = 0; j < shape[c][r]; ++j) row.push_back(Entry{ell, next++});
            s.rows[c].push_back(std::move(row));
        }
    return s;
}

Multipartition sub_shape(const SemistandardTableau& s, const Entry& bound, bool strict) {
    Multipartition out(s.shape.size());
    for (size_t c = 0; c < s.shape.size(); ++c)
        for (size_t r = 0; r < s.shape[c].size(); ++r) {
            int len = 0;
            for (const Entry& x : s.rows[c][r])
                if (strict ? x < bound : x <= bound) ++len;
            if (len > 0) out[c].push_back(len);
        }
    return out;
}

Perm w_of_tableau(const SemistandardTableau& s) {
    std::vector<Entry> word;
    for (const Box& b : s.reading_boxes()) word.push_back(s.at(b));
    std::vector<int> order(word.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return word[a] < word[b]; });
    Perm w(word.size());
    for (size_t rank = 0; rank < order.size(); ++rank) w[order[rank]] = static_cast<int>(rank);
    return w;
}

// ---------------------------------------------------------------- shadowed compositions

VectorComposition ShadowedComposition::joined() const {
    VectorComposition out;
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    return out;
}

DimVector ShadowedComposition::dimension(int e) const { return qschur::dimension(joined(), e); }

std::vector<DimVector> vectors_of_total(int n, int e) {
    std::vector<DimVector> out;
    DimVector cur(e, 0);
    std::function<void(int, int)> rec = [&](int t, int rest) {
        if (t == e - 1) {
            cur[t] = rest;
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= rest; ++x) {
            cur[t] = x;
            rec(t + 1, rest - x);
        }
    };
    rec(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ShadowedComposition> enumerate_shadowed(int n, const Charge& charge) {
    std::vector<ShadowedComposition> out;
    ShadowedComposition cur;
    for (int k = 1; k <= charge.ell(); ++k) cur.weights.push_back(charge.weight_node(k));
    std::function<void(int, int)> rec = [&](int k, int rest) {
        if (k == charge.ell()) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int s = (k == charge.ell() - 1 ? rest : 0); s <= rest; ++s)
            for (const DimVector& d : vectors_of_total(s, charge.e))
                for (auto& group : enumerate_vcomps(d, false)) {
                    cur.groups.push_back(std::move(group));
                    rec(k + 1, rest - s);
                    cur.groups.pop_back();
                }
    };
    rec(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

ShadowedComposition lambda_of_shape(const Multipartition& shape, const Charge& charge) {
    ShadowedComposition out;
    for (int c = 1; c <= static_cast<int>(shape.size()); ++c) {
        out.weights.push_back(charge.weight_node(c));
        VectorComposition group;
        for (int r = 1; r <= static_cast<int>(shape[c - 1].size()); ++r) {
            DimVector part(charge.e, 0);
            for (int j = 1; j <= shape[c - 1][r - 1]; ++j) ++part[charge.node(c, r, j) - 1];
            group.push_back(part);
        }
        out.groups.push_back(std::move(group));
    }
    return out;
}

ShadowedComposition mu_of_tableau(const SemistandardTableau& s, const Charge& charge) {
    ShadowedComposition out;
    const Multicomposition xi = s.type();
    for (int k = 1; k <= s.ell(); ++k) {
        out.weights.push_back(charge.weight_node(k));
        out.groups.emplace_back(xi[k - 1].size(), DimVector(charge.e, 0));
    }
    for (const Box& b : s.reading_boxes()) {
        const Entry& x = s.at(b);
        ++out.groups[x.alphabet - 1][x.number - 1][residue(b, charge) - 1];
    }
    return out;
}

std::pair<ShadowedComposition, ShadowedComposition> refinements(const SemistandardTableau& s, const Charge& charge) {
    return {lambda_of_shape(s.shape, charge), mu_of_tableau(s, charge)};
}

// ---------------------------------------------------------------- degrees

bool is_horizontal_strip(const Multipartition& eta, const Multipartition& xi) {
    if (!contains(eta, xi)) return false;
    for (int c = 1; c <= static_cast<int>(eta.size()); ++c)
        for (int r = 2; r <= static_cast<int>(eta[c - 1].size()); ++r)
            if (row_len(eta, c, r) > row_len(xi, c, r - 1)) return false;
    return true;
}

int skew_degree(const Multipartition& xi, const Multipartition& eta, int alphabet, const Charge& charge,
                DegConvention conv) {
    const int e = charge.e;
    std::vector<Box> strip;
    for (int c = 1; c <= static_cast<int>(eta.size()); ++c)
        for (int r = 1; r <= static_cast<int>(eta[c - 1].size()); ++r)
            for (int j = row_len(xi, c, r) + 1; j <= row_len(eta, c, r); ++j) strip.push_back({c, r, j});
    const std::vector<Box> rem = removable(xi);
    int total_deg = 0;
    if (conv == DegConvention::Literal) {
        const std::vector<Box> add = addable(eta);
        auto below = [](const Box& y, const Box& b) { return y.comp > b.comp || (y.comp == b.comp && y.row > b.row); };
        for (const Box& b : strip) {
            int a = residue(b, charge);
            for (const Box& y : add)
                if (below(y, b) && residue(y, charge) == a) ++total_deg;
            for (const Box& y : rem)
                if (below(y, b) && residue(y, charge) == a) --total_deg;
        }
        return total_deg;
    }
    // Exact telescoping of the split/merge/crossing degrees of B_S; components past the
    // alphabet never interact with this strip.
    const std::vector<Box> add = addable(xi);
    auto visible = [alphabet](const Box& y) { return y.comp <= alphabet; };
    auto strictly_below = [](const Box& y, const Box& b) {
        return y.comp > b.comp || (y.comp == b.comp && y.row > b.row);
    };
    for (const Box& b : strip) {
        const int a = residue(b, charge);
        const int next = node_of_residue(a + 1, e);
        for (const Box& y : add)
            if (visible(y) && strictly_below(y, b) && residue(y, charge) == a) ++total_deg;
        for (const Box& y : rem)
            if (visible(y) && (strictly_below(y, b) || (y.comp == b.comp && y.row == b.row)) && residue(y, charge) == a)
                --total_deg;
        for (const Box& x : strip) {
            if (!strictly_below(b, x)) continue;
            const int r = residue(x, charge);
            if (r == next) ++total_deg;
            if (r == a) --total_deg;
        }
    }
    return total_deg;
}

int deg_tableau(const SemistandardTableau& s, const Charge& charge, DegConvention conv) {
    std::vector<Entry> values;
    for (const Box& b : s.reading_boxes()) values.push_back(s.at(b));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    int d = 0;
    for (const Entry& v : values)
        d += skew_degree(sub_shape(s, v, true), sub_shape(s, v, false), v.alphabet, charge, conv);
    return d;
}

int m_skew(const Multipartition& eta, const Multipartition& xi, const Charge& charge, DegConvention conv) {
    if (!is_horizontal_strip(eta, xi)) throw std::invalid_argument("eta/xi is not a horizontal strip");
    return skew_degree(xi, eta, static_cast<int>(eta.size()), charge, conv);
}

// ---------------------------------------------------------------- double cosets

namespace {

std::vector<std::vector<std::vector<int>>> contingency_tables(const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<std::vector<std::vector<int>>> out;
    const size_t R = rows.size(), C = cols.size();
    std::vector<std::vector<int>> t(R, std::vector<int>(C, 0));
    std::vector<int> colleft = cols;
    std::function<void(size_t, size_t, int)> rec = [&](size_t a, size_t b, int rowleft) {
        if (a == R) {
            if (std::all_of(colleft.begin(), colleft.end(), [](int x) { return x == 0; })) out.push_back(t);
            return;
        }
        if (b == C - 1) {
            if (rowleft > colleft[b]) return;
            t[a][b] = rowleft;
            colleft[b] -= rowleft;
            rec(a + 1, 0, a + 1 < R ? rows[a + 1] : 0);
            colleft[b] += rowleft;
            t[a][b] = 0;
            return;
        }
        for (int x = std::min(rowleft, colleft[b]); x >= 0; --x) {
            t[a][b] = x;
            colleft[b] -= x;
            rec(a, b + 1, rowleft - x);
            colleft[b] += x;
        }
        t[a][b] = 0;
    };
    if (R == 0 || C == 0) {
        int rs = std::accumulate(rows.begin(), rows.end(), 0), cs = std::accumulate(cols.begin(), cols.end(), 0);
        if (rs == 0 && cs == 0) out.push_back(t);
        return out;
    }
    rec(0, 0, rows[0]);
    return out;
}

Perm perm_from_table(const std::vector<std::vector<int>>& t, const std::vector<int>& rows, const std::vector<int>& cols) {
    const size_t R = rows.size(), C = cols.size();
    std::vector<int> col_start(C, 0);
    for (size_t b = 1; b < C; ++b) col_start[b] = col_start[b - 1] + cols[b - 1];
    std::vector<int> col_used(C, 0);
    Perm p;
    for (size_t a = 0; a < R; ++a)
        for (size_t b = 0; b < C; ++b)
            for (int m = 0; m < t[a][b]; ++m) p.push_back(col_start[b] + col_used[b]++);
    return p;
}

std::vector<int> node_counts(const VectorComposition& mu, size_t t) {
    std::vector<int> out;
    for (const auto& part : mu) out.push_back(part[t]);
    return out;
}

}  // namespace

std::vector<DoubleCoset> min_double_cosets(const VectorComposition& lambda, const VectorComposition& mu) {
    if (lambda.empty() && mu.empty()) return {DoubleCoset{}};
    const size_t e = !lambda.empty() ? lambda.front().size() : mu.front().size();
    if (dimension(lambda, static_cast<int>(e)) != dimension(mu, static_cast<int>(e)))
        throw std::invalid_argument("compositions have different dimension vectors");
    std::vector<std::vector<std::vector<std::vector<int>>>> per_node;
    for (size_t t = 0; t < e; ++t) per_node.push_back(contingency_tables(node_counts(lambda, t), node_counts(mu, t)));
    std::vector<DoubleCoset> out;
    std::vector<size_t> idx(e, 0);
    while (true) {
        DoubleCoset dc;
        for (size_t t = 0; t < e; ++t) {
            dc.tables.push_back(per_node[t][idx[t]]);
            dc.perm.push_back(perm_from_table(per_node[t][idx[t]], node_counts(lambda, t), node_counts(mu, t)));
        }
        out.push_back(std::move(dc));
        size_t t = 0;
        while (t < e && ++idx[t] == per_node[t].size()) idx[t++] = 0;
        if (t == e) break;
    }
    return out;
}

DoubleCoset coset_of(const VectorComposition& lambda, const VectorComposition& mu, const NodePerm& perm) {
    const size_t e = !lambda.empty() ? lambda.front().size() : (!mu.empty() ? mu.front().size() : 0);
    if (perm.size() != e) throw std::invalid_argument("colored permutation has wrong number of nodes");
    DoubleCoset dc;
    for (size_t t = 0; t < e; ++t) {
        std::vector<int> rows = node_counts(lambda, t), cols = node_counts(mu, t);
        int n = std::accumulate(rows.begin(), rows.end(), 0);
        if (static_cast<int>(perm[t].size()) != n || !is_permutation(perm[t]) ||
            n != std::accumulate(cols.begin(), cols.end(), 0))
            throw std::invalid_argument("colored permutation does not fit the compositions");
        std::vector<int> block_of_col;
        for (size_t b = 0; b < cols.size(); ++b) block_of_col.insert(block_of_col.end(), cols[b], static_cast<int>(b));
        std::vector<std::vector<int>> table(rows.size(), std::vector<int>(cols.size(), 0));
        int pos = 0;
        for (size_t a = 0; a < rows.size(); ++a)
            for (int m = 0; m < rows[a]; ++m) ++table[a][block_of_col[perm[t][pos++]]];
        if (perm_from_table(table, rows, cols) != perm[t])
            throw std::invalid_argument("colored permutation is not a minimal double coset representative");
        dc.tables.push_back(std::move(table));
        dc.perm.push_back(perm[t]);
    }
    return dc;
}

int coset_length(const DoubleCoset& c) {
    int l = 0;
    for (const auto& p : c.perm) l += length(p);
    return l;
}

long long count_pairs(const Multicomposition& xi, int n, AlphabetRule rule) {
    const int ell = static_cast<int>(xi.size());
    Multicomposition standard(ell);
    standard[rule == AlphabetRule::UpTo ? ell - 1 : 0].assign(n, 1);
    long long total_pairs = 0;
    for (const auto& shape : multipartitions(n, ell)) {
        long long t = static_cast<long long>(enumerate_semistandard(shape, rule, xi).size());
        if (t == 0) continue;
        total_pairs += t * static_cast<long long>(enumerate_semistandard(shape, rule, standard).size());
    }
    return total_pairs;
}

// ---------------------------------------------------------------- text encodings

std::string format_vcomp(const VectorComposition& mu) {
    std::string s;
    for (size_t g = 0; g < mu.size(); ++g) {
        if (g) s += ';';
        s += join_ints(mu[g]);
    }
    return s;
}

VectorComposition parse_vcomp(const std::string& s, int e) {
    VectorComposition mu;
    if (s.empty()) return mu;
    for (const auto& tok : split(s, ';')) {
        DimVector part = parse_ints(tok);
        if (static_cast<int>(part.size()) != e) throw std::invalid_argument("part '" + tok + "' needs " + std::to_string(e) + " entries");
        for (int x : part)
            if (x < 0) throw std::invalid_argument("negative entry in '" + tok + "'");
        if (is_zero_vector(part)) throw std::invalid_argument("zero part in vector composition");
        mu.push_back(part);
    }
    return mu;
}

std::string format_multipartition(const Multipartition& mp) {
    std::string s;
    for (size_t c = 0; c < mp.size(); ++c) {
        if (c) s += '|';
        s += join_ints(mp[c]);
    }
    return s;
}

Multipartition parse_multipartition(const std::string& s) {
    Multipartition mp;
    for (const auto& tok : split(s, '|')) {
        Partition p = parse_ints(tok);
        while (!p.empty() && p.back() == 0) p.pop_back();
        for (size_t r = 0; r < p.size(); ++r)
            if (p[r] <= 0 || (r > 0 && p[r] > p[r - 1])) throw std::invalid_argument("'" + tok + "' is not a partition");
        mp.push_back(p);
    }
    return mp;
}

std::string format_shadowed(const ShadowedComposition& s) {
    std::string out;
    for (size_t k = 0; k < s.groups.size(); ++k) {
        if (k) out += '|';
        out += format_vcomp(s.groups[k]);
    }
    return out;
}

ShadowedComposition parse_shadowed(const std::string& s, const Charge& charge) {
    ShadowedComposition out;
    auto groups = split(s, '|');
    if (static_cast<int>(groups.size()) != charge.ell())
        throw std::invalid_argument("expected " + std::to_string(charge.ell()) + " groups separated by '|'");
    for (int k = 1; k <= charge.ell(); ++k) {
        out.weights.push_back(charge.weight_node(k));
        out.groups.push_back(parse_vcomp(groups[k - 1], charge.e));
    }
    return out;
}

std::string format_entry(const Entry& x) { return std::to_string(x.number) + "_" + std::to_string(x.alphabet); }

std::string format_perm(const Perm& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i] + 1);
    }
    return s;
}

}  // namespace qschur
