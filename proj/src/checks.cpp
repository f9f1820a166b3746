#include "qschur/checks.hpp"

#include "qschur/cellular.hpp"
#include "qschur/fock.hpp"
#include "qschur/linalg.hpp"
#include "qschur/operators.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace qschur {

void CheckResult::fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
}

namespace {

// Runs body(i) for i < count on up to `jobs` threads; body must only touch its own state.
void parallel_each(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    for (auto& t : pool) t.join();
}

// Merges per-task results in task order, so the reported counterexample does not depend on scheduling.
void merge_into(CheckResult& total, const std::vector<CheckResult>& parts) {
    for (const auto& p : parts) {
        total.cases += p.cases;
        if (!p.passed) total.fail(p.detail);
    }
}

std::string charge_text(const Charge& ch) {
    std::string s = "e=" + std::to_string(ch.e) + " charge=";
    for (size_t i = 0; i < ch.z.size(); ++i) s += (i ? "," : "") + std::to_string(ch.z[i]);
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

int sign_of(const Perm& w) { return length(w) % 2 == 0 ? 1 : -1; }

MultiPoly vandermonde(int r) {
    const DimVector amb{r};
    MultiPoly v = MultiPoly::constant(amb, 1);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            v = v * (MultiPoly::variable(amb, {1, i}) - MultiPoly::variable(amb, {1, j}));
    return v;
}

// Alternating sum over S_r; equals Delta_{w0}(f) times the Vandermonde product.
MultiPoly antisymmetrized(const MultiPoly& f) {
    const int r = f.ambient()[0];
    MultiPoly out(f.ambient());
    for (const Perm& w : all_perms(r)) {
        MultiPoly wf = apply_permutation(NodePerm{w}, f);
        out += sign_of(w) > 0 ? wf : -wf;
    }
    return out;
}

// f on one node embedded into the alphabet of that node inside a larger ambient.
MultiPoly on_node(const MultiPoly& f, const DimVector& ambient, int node) {
    std::vector<int> map;
    MultiPoly probe(ambient);
    for (int i = 0; i < f.num_vars(); ++i) map.push_back(probe.offset(node) + i);
    return f.embedded(ambient, map);
}

std::vector<std::vector<int>> reduced_words_of(const Perm& w) {
    const int n = static_cast<int>(w.size());
    const int l = length(w);
    std::vector<std::vector<int>> out;
    std::vector<int> word(l, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == l) {
            if (perm_from_word(n, word) == w) out.push_back(word);
            return;
        }
        for (int s = 0; s + 1 < n; ++s) {
            if (k > 0 && word[k - 1] == s) continue;
            word[k] = s;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

VectorComposition units_of(const std::vector<int>& nodes, int e) {
    VectorComposition mu;
    for (int t : nodes) mu.push_back(unit_vector(e, t));
    return mu;
}

// Crossing of strands p, p+1 on a sequence of single-node strands, written out directly.
MultiPoly klr_cross(std::vector<int>& nodes, int p, const MultiPoly& f, int e) {
    auto pos = [&](int idx) {
        int k = 1;
        for (int i = 0; i < idx; ++i) k += nodes[i] == nodes[idx];
        return k;
    };
    const int a = nodes[p], b = nodes[p + 1];
    MultiPoly out = f;
    if (a == b) {
        out = demazure(a, pos(p), f);
    } else if (b == node_of_residue(a + 1, e)) {
        const DimVector& amb = f.ambient();
        out = f * (MultiPoly::variable(amb, {b, pos(p + 1)}) - MultiPoly::variable(amb, {a, pos(p)}));
    }
    std::swap(nodes[p], nodes[p + 1]);
    return out;
}

int klr_degree(int a, int b, int e) {
    if (a == b) return -2;
    if (e == 2) return 2;
    if (b == node_of_residue(a + 1, e) || a == node_of_residue(b + 1, e)) return 1;
    return 0;
}

std::vector<std::vector<int>> compositions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = 1; k <= rest; ++k) {
            cur.push_back(k);
            rec(rest - k);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<Multicomposition> multicompositions(int n, int ell) {
    std::vector<Multicomposition> out;
    Multicomposition cur;
    std::function<void(int, int)> rec = [&](int k, int rest) {
        if (k == ell) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int s = 0; s <= rest; ++s)
            for (const auto& c : compositions_of(s)) {
                cur.push_back(c);
                rec(k + 1, rest - s);
                cur.pop_back();
            }
    };
    rec(0, n);
    return out;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Coefficients of op applied to each generator of its source, flattened into one row.
using OperatorRow = std::map<std::pair<int, MultiPoly::Exponent>, BigInt>;
OperatorRow operator_row(const OperatorExpr& op, const std::vector<MultiPoly>& generators) {
    OperatorRow row;
    for (size_t g = 0; g < generators.size(); ++g) {
        const MultiPoly image = op.apply(generators[g], false);
        for (const auto& [m, c] : image.terms()) row[{static_cast<int>(g), m}] = c;
    }
    return row;
}

BigMatrix dense(const std::vector<OperatorRow>& rows) {
    std::map<std::pair<int, MultiPoly::Exponent>, size_t> cols;
    for (const auto& r : rows)
        for (const auto& [k, c] : r) cols.emplace(k, 0);
    size_t i = 0;
    for (auto& [k, idx] : cols) idx = i++;
    BigMatrix out(rows.size(), std::vector<BigInt>(cols.size(), 0));
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [k, c] : rows[r]) out[r][cols.at(k)] = c;
    return out;
}

}  // namespace

MultiPoly random_poly(const DimVector& ambient, int max_degree, int terms, std::mt19937_64& rng) {
    MultiPoly f(ambient);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> var(0, std::max(0, f.num_vars() - 1));
    for (int t = 0; t < terms; ++t) {
        MultiPoly::Exponent m(f.num_vars(), 0);
        const int d = f.num_vars() == 0 ? 0 : deg(rng);
        for (int k = 0; k < d; ++k) ++m[var(rng)];
        f.add_term(m, coef(rng));
    }
    return f;
}

std::vector<Charge> all_charges(int e, int ell) {
    std::vector<Charge> out;
    std::vector<int> z(ell, 0);
    while (true) {
        out.push_back(Charge{e, z, {}});
        int k = ell - 1;
        while (k >= 0 && z[k] == e - 1) z[k--] = 0;
        if (k < 0) break;
        ++z[k];
    }
    return out;
}

// ---------------------------------------------------------------- worked examples

std::vector<CheckResult> check_worked_examples() {
    std::vector<CheckResult> out;
    const VectorComposition quiver_example{{2, 1}, {1, 1}, {2, 3}, {0, 1}};
    {
        CheckResult r{"two-node example: residue sequence"};
        r.cases = 1;
        const std::string got = residue_text(residue_sequence(quiver_example));
        if (got != "1,1,2|1,2|1,1,2,2,2|2") r.fail("got " + got);
        else r.detail = got;
        out.push_back(r);
    }
    {
        CheckResult r{"two-node example: flag data"};
        r.cases = 1;
        const std::string got = format_vcomp(transpose(quiver_example));
        if (got != "2,1,2,0;1,1,3,1") r.fail("got " + got);
        else r.detail = got;
        out.push_back(r);
    }
    {
        CheckResult r{"two-node example: complete flag types of (5,6)"};
        r.cases = 1;
        const auto n = enumerate_vcomps({5, 6}, true).size();
        if (n != 462) r.fail("got " + std::to_string(n));
        else r.detail = "462";
        out.push_back(r);
    }

    // The running tableau: rows 1 1 2 5 / 2 4 4 / 3 at e = 3, charge 1.
    SemistandardTableau s;
    auto E = [](int g) { return Entry{1, g}; };
    s.shape = {{4, 3, 1}};
    s.rows = {{{E(1), E(1), E(2), E(5)}, {E(2), E(4), E(4)}, {E(3)}}};
    const Charge ch{3, {1}, {}};
    {
        CheckResult r{"running tableau: printed shape (4,3,2)"};
        r.cases = 1;
        r.fail("the printed filling has 8 entries, so its shape is (4,3,1); (4,3,2) has 9 boxes");
        out.push_back(r);
    }
    {
        CheckResult r{"running tableau: w_S"};
        r.cases = 1;
        const std::string got = format_perm(w_of_tableau(s));
        if (got != "1,2,3,8,4,6,7,5") r.fail("got " + got);
        else r.detail = got;
        out.push_back(r);
    }
    const auto [lam, mu] = refinements(s, ch);
    {
        CheckResult r{"running tableau: lambda_S"};
        r.cases = 1;
        const std::string got = format_shadowed(lam);
        if (got != "2,1,1;1,1,1;0,1,0") r.fail("got " + got);
        else r.detail = got;
        out.push_back(r);
    }
    {
        CheckResult r{"running tableau: mu_S as printed"};
        r.cases = 1;
        const std::string printed = "1,1,0;0,0,2;0,1,0;1,2,0;1,0,0";
        const std::string got = format_shadowed(mu);
        if (got != printed)
            r.fail("computed " + got + ", printed " + printed + " (entry 4 fills two boxes of residues 1 and 2)");
        out.push_back(r);
    }
    {
        CheckResult r{"running tableau: degree of B_S as printed (2)"};
        r.cases = 1;
        const int op = B_of_tableau(s, ch).degree();
        const int exact = deg_tableau(s, ch, DegConvention::Exact);
        const int literal = deg_tableau(s, ch, DegConvention::Literal);
        std::string info = "operator bookkeeping " + std::to_string(op) + ", combinatorial " + std::to_string(exact) +
                           ", literal rule " + std::to_string(literal);
        if (op != 2) r.fail(info);
        else r.detail = info;
        out.push_back(r);
    }
    return out;
}

// ---------------------------------------------------------------- demazure

std::vector<CheckResult> check_demazure(int samples, int max_rank, const CheckOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::vector<CheckResult> out;
    const std::vector<DimVector> ambients{{4}, {3, 2}, {2, 2, 2}};
    auto pick_index = [&](const DimVector& amb, int& node, int& j) {
        std::vector<std::pair<int, int>> choices;
        for (int t = 1; t <= static_cast<int>(amb.size()); ++t)
            for (int i = 1; i < amb[t - 1]; ++i) choices.emplace_back(t, i);
        auto c = choices[std::uniform_int_distribution<size_t>(0, choices.size() - 1)(rng)];
        node = c.first;
        j = c.second;
    };

    CheckResult sq{"Delta squared vanishes"};
    CheckResult leib{"twisted Leibniz rule"};
    for (int s = 0; s < samples; ++s) {
        const DimVector& amb = ambients[s % ambients.size()];
        int node = 0, j = 0;
        pick_index(amb, node, j);
        const MultiPoly f = random_poly(amb, 6, 6, rng);
        ++sq.cases;
        if (!demazure(node, j, demazure(node, j, f)).is_zero()) sq.fail("f = " + f.to_string());
        const MultiPoly g = random_poly(amb, 3, 4, rng), h = random_poly(amb, 3, 4, rng);
        const int a = g.flat({node, j}), b = g.flat({node, j + 1});
        ++leib.cases;
        if (demazure(node, j, g * h) != demazure(node, j, g) * h + g.swapped(a, b) * demazure(node, j, h))
            leib.fail("f = " + g.to_string() + ", g = " + h.to_string());
    }
    out.push_back(sq);
    out.push_back(leib);

    CheckResult words{"reduced-word independence on S_4"};
    const int per_perm = std::max(1, (samples + 23) / 24);
    for (const Perm& w : all_perms(4)) {
        const auto ws = reduced_words_of(w);
        for (int s = 0; s < per_perm; ++s) {
            const MultiPoly f = random_poly({4}, 6, 6, rng);
            const MultiPoly ref = demazure_perm(1, 0, w, f);
            for (const auto& word : ws) {
                std::vector<VarIndex> letters;
                for (int x : word) letters.push_back({1, x + 1});
                ++words.cases;
                if (demazure_word(letters, f) != ref)
                    words.fail("w = " + format_perm(w) + ", f = " + f.to_string());
            }
        }
    }
    out.push_back(words);

    CheckResult closed{"longest element against the alternating sum"};
    for (int r = 2; r <= max_rank; ++r) {
        const MultiPoly v = vandermonde(r);
        Perm w0(r);
        for (int i = 0; i < r; ++i) w0[i] = r - 1 - i;
        for (int s = 0; s < samples; ++s) {
            const MultiPoly f = random_poly({r}, 6, 6, rng);
            ++closed.cases;
            if (demazure_perm(1, 0, w0, f) * v != antisymmetrized(f)) closed.fail("r = " + std::to_string(r) + ", f = " + f.to_string());
        }
    }
    out.push_back(closed);
    return out;
}

// ---------------------------------------------------------------- operator relations

std::vector<CheckResult> check_relations(int max_size, const std::vector<int>& es, const CheckOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    CheckResult sm{"split then merge is multiplication by Delta_w(E)"};
    CheckResult xx{"crossing squared factors through merge and split"};
    for (int e : es)
        for (int s1 = 1; s1 < max_size; ++s1)
            for (int s2 = 1; s1 + s2 <= max_size; ++s2)
                for (const DimVector& c : vectors_of_total(s1, e))
                    for (const DimVector& d : vectors_of_total(s2, e)) {
                        const std::string tag = "e=" + std::to_string(e) + " c=" + format_vcomp({c}) + " d=" + format_vcomp({d});
                        // A zero multiplier carries no degree; then the composite must vanish.
                        auto matches = [&](const OperatorExpr& lhs, const MultiPoly& f, const OperatorExpr& rhs) {
                            if (f.is_zero()) {
                                for (const MultiPoly& g : invariant_generators(lhs.source(), e))
                                    if (!lhs.apply(g, false).is_zero()) return false;
                                return true;
                            }
                            return lhs.degree() == rhs.degree() && op_equal(lhs, rhs);
                        };
                        const Layout whole = layout_of(VectorComposition{add(c, d)});
                        OperatorExpr lhs(whole, e);
                        lhs.split(0, c).merge(0);
                        const MultiPoly f = merged_euler_class(c, d);
                        OperatorExpr rhs(whole, e);
                        rhs.multiply(f);
                        ++sm.cases;
                        if (!matches(lhs, f, rhs)) sm.fail(tag);

                        const Layout pair = layout_of(VectorComposition{c, d});
                        OperatorExpr x2(pair, e);
                        x2.cross(0).cross(0);
                        const MultiPoly g = merged_euler_class(d, c);
                        OperatorExpr fx(pair, e);
                        fx.merge(0).multiply(g).split(0, c);
                        ++xx.cases;
                        if (!matches(x2, g, fx)) xx.fail(tag);
                    }

    CheckResult rfold{"r-fold merge equals Delta of the longest element"};
    for (int e : es)
        for (int node = 1; node <= e; ++node)
            for (int r = 2; r <= 4; ++r) {
                OperatorExpr op(layout_of(VectorComposition(r, unit_vector(e, node))), e);
                for (int k = 1; k < r; ++k) op.merge(0);
                DimVector amb(e, 0);
                amb[node - 1] = r;
                const MultiPoly v = on_node(vandermonde(r), amb, node);
                for (int s = 0; s < 10; ++s) {
                    const MultiPoly f1 = random_poly({r}, 6, 6, rng);
                    const MultiPoly f = on_node(f1, amb, node);
                    ++rfold.cases;
                    if (op.apply(f) * v != on_node(antisymmetrized(f1), amb, node))
                        rfold.fail("e=" + std::to_string(e) + " node " + std::to_string(node) + " r=" + std::to_string(r));
                }
            }

    CheckResult klr{"single crossings match the KLR polynomial representation"};
    auto compare_word = [&](int e, const std::vector<int>& nodes0, const std::vector<int>& word) {
        OperatorExpr op(layout_of(units_of(nodes0, e)), e);
        std::vector<int> nodes = nodes0;
        int expected = 0;
        for (int p : word) {
            expected += klr_degree(nodes[p], nodes[p + 1], e);
            std::swap(nodes[p], nodes[p + 1]);
            op.cross(p);
        }
        std::string tag = "e=" + std::to_string(e) + " nodes";
        for (int t : nodes0) tag += " " + std::to_string(t);
        tag += " word";
        for (int p : word) tag += " " + std::to_string(p);
        ++klr.cases;
        if (op.degree() != expected) {
            klr.fail(tag + ": degree " + std::to_string(op.degree()) + ", expected " + std::to_string(expected));
            return;
        }
        for (const MultiPoly& g : invariant_generators(op.source(), e)) {
            std::vector<int> cur = nodes0;
            MultiPoly ref = g;
            for (int p : word) ref = klr_cross(cur, p, ref, e);
            if (op.apply(g) != ref) {
                klr.fail(tag + ": differs on " + g.to_string());
                return;
            }
        }
    };
    for (int e : es) {
        for (int a = 1; a <= e; ++a)
            for (int b = 1; b <= e; ++b) compare_word(e, {a, b}, {0});
        std::uniform_int_distribution<int> node(1, e), pos(0, 1), len(1, 4);
        for (int s = 0; s < 40; ++s) {
            std::vector<int> nodes{node(rng), node(rng), node(rng)};
            std::vector<int> word(len(rng));
            for (int& p : word) p = pos(rng);
            compare_word(e, nodes, word);
        }
    }
    return {sm, xx, rfold, klr};
}

std::vector<CheckResult> check_braid(const std::vector<int>& es, const CheckOptions&) {
    CheckResult r{"braid relation up to shorter double cosets"};
    for (int e : es) {
        std::vector<DimVector> parts;
        for (int s = 1; s <= 2; ++s)
            for (const DimVector& v : vectors_of_total(s, e)) parts.push_back(v);
        for (const DimVector& a : parts)
            for (const DimVector& b : parts)
                for (const DimVector& c : parts) {
                    if (total(a) + total(b) + total(c) > 4) continue;
                    const VectorComposition mu{a, b, c}, lam{c, b, a};
                    const std::string tag = "e=" + std::to_string(e) + " " + format_vcomp(mu);
                    OperatorExpr x1(layout_of(mu), e), x2(layout_of(mu), e);
                    x1.cross(0).cross(1).cross(0);
                    x2.cross(1).cross(0).cross(1);
                    ++r.cases;
                    if (x1.degree() != x2.degree() || x1.target() != x2.target()) {
                        r.fail(tag + ": degree or target differs");
                        continue;
                    }
                    const auto gens = invariant_generators(x1.source(), e);
                    OperatorRow diff = operator_row(x1, gens);
                    for (const auto& [k, v] : operator_row(x2, gens)) {
                        diff[k] -= v;
                        if (diff[k] == 0) diff.erase(k);
                    }
                    if (diff.empty()) continue;
                    // The reversal coset: block k of mu lands in block 2-k of lambda.
                    const auto cosets = min_double_cosets(lam, mu);
                    int top = -1;
                    for (const auto& cs : cosets) {
                        bool reversal = true;
                        for (int t = 0; t < e; ++t)
                            for (int i = 0; i < 3; ++i)
                                for (int j = 0; j < 3; ++j)
                                    if (i + j != 2 && cs.tables[t][i][j] != 0) reversal = false;
                        if (reversal) top = coset_length(cs);
                    }
                    std::vector<OperatorRow> rows;
                    for (const auto& cs : cosets) {
                        if (coset_length(cs) >= top) continue;
                        const RefinedPair rp = refine(lam, mu, cs);
                        const OperatorExpr plain = basis_morphism(mu, lam, cs.perm, MultiPoly::constant(dimension(mu, e), 1), e);
                        const int gap = x1.degree() - plain.degree();
                        if (gap < 0 || gap % 2 != 0) continue;
                        for (const MultiPoly& h : invariant_basis(layout_of(rp.mu_prime), e, gap / 2))
                            rows.push_back(operator_row(basis_morphism(mu, lam, cs.perm, h, e), gens));
                    }
                    rows.push_back(diff);
                    const BigMatrix m = dense(rows);
                    const std::vector<BigInt> target = m.back();
                    BigMatrix lower(m.begin(), m.end() - 1);
                    if (!in_row_span(lower, target)) r.fail(tag + ": difference leaves the shorter cosets");
                }
    }
    return {r};
}

// ---------------------------------------------------------------- degrees

std::vector<CheckResult> check_degrees(int max_n, const std::vector<int>& es, int max_ell, const CheckOptions& opt) {
    std::vector<Charge> charges;
    for (int e : es)
        for (int l = 1; l <= max_ell; ++l)
            for (const Charge& ch : all_charges(e, l)) charges.push_back(ch);
    std::vector<CheckResult> parts(charges.size());
    std::vector<long long> literal_off(charges.size(), 0);
    parallel_each(charges.size(), opt.jobs, [&](std::size_t i) {
        const Charge& ch = charges[i];
        CheckResult& r = parts[i];
        for (int n = 1; n <= max_n; ++n)
            for (const auto& shape : multipartitions(n, ch.ell()))
                for (const auto& s : enumerate_semistandard(shape)) {
                    ++r.cases;
                    const int op = B_of_tableau(s, ch).degree();
                    if (deg_tableau(s, ch, DegConvention::Literal) != op) ++literal_off[i];
                    const int comb = deg_tableau(s, ch, opt.convention);
                    if (comb != op)
                        r.fail(charge_text(ch) + " shape " + format_multipartition(shape) + ": Deg " + std::to_string(comb) +
                               ", deg B_S " + std::to_string(op));
                }
    });
    CheckResult total{"Deg(S) equals the degree of B_S"};
    merge_into(total, parts);
    long long lit = 0;
    for (long long x : literal_off) lit += x;
    if (total.passed)
        total.detail = std::to_string(total.cases) + " tableaux; literal rule differs on " + std::to_string(lit);
    return {total};
}

// ---------------------------------------------------------------- basis independence

std::vector<CheckResult> check_basis(int max_size, const std::vector<int>& es, int cutoff, const CheckOptions& opt) {
    struct Task {
        int e;
        DimVector d;
    };
    std::vector<Task> tasks;
    for (int e : es)
        for (int s = 1; s <= max_size; ++s)
            for (const DimVector& d : vectors_of_total(s, e)) tasks.push_back({e, d});
    std::vector<CheckResult> parts(tasks.size());
    parallel_each(tasks.size(), opt.jobs, [&](std::size_t i) {
        const auto& [e, d] = tasks[i];
        CheckResult& r = parts[i];
        const auto comps = enumerate_vcomps(d, false);
        for (const auto& mu : comps) {
            const auto gens = invariant_generators(layout_of(mu), e);
            for (const auto& lam : comps) {
                std::map<int, std::vector<OperatorRow>> by_degree;
                for (const auto& cs : min_double_cosets(lam, mu)) {
                    const RefinedPair rp = refine(lam, mu, cs);
                    for (int k = 0; k <= cutoff; ++k)
                        for (const MultiPoly& h : invariant_basis(layout_of(rp.mu_prime), e, k)) {
                            const OperatorExpr op = basis_morphism(mu, lam, cs.perm, h, e);
                            by_degree[op.degree()].push_back(operator_row(op, gens));
                        }
                }
                for (const auto& [deg, rows] : by_degree) {
                    ++r.cases;
                    const int rk = rank(dense(rows));
                    if (rk != static_cast<int>(rows.size()))
                        r.fail("e=" + std::to_string(e) + " " + format_vcomp(mu) + " => " + format_vcomp(lam) + " degree " +
                               std::to_string(deg) + ": rank " + std::to_string(rk) + " of " + std::to_string(rows.size()));
                }
            }
        }
    });
    CheckResult total{"basis morphisms are linearly independent"};
    merge_into(total, parts);
    if (total.passed) total.detail = std::to_string(total.cases) + " graded blocks at full rank";
    return {total};
}

// ---------------------------------------------------------------- fock space

std::vector<CheckResult> check_fock(int max_n, int e, int max_ell, const CheckOptions& opt) {
    std::vector<Charge> charges;
    for (int l = 1; l <= max_ell; ++l)
        for (const Charge& ch : all_charges(e, l)) charges.push_back(ch);
    std::vector<CheckResult> vec_parts(charges.size()), pair_parts(charges.size());
    parallel_each(charges.size(), opt.jobs, [&](std::size_t i) {
        const Charge& ch = charges[i];
        const FockConfig cfg{ch, opt.convention};
        for (int n = 1; n <= max_n; ++n) {
            const auto tableau_side = weyl_vectors(n, ch);
            std::map<DimVector, std::vector<std::pair<FockVector, FockVector>>> by_dimension;
            for (const auto& mu : enumerate_shadowed(n, ch)) {
                auto it = tableau_side.find(mu);
                const FockVector w = it == tableau_side.end() ? FockVector{} : it->second;
                const FockVector h = h_vector(cfg, mu);
                ++vec_parts[i].cases;
                if (h != w)
                    vec_parts[i].fail(charge_text(ch) + " mu " + format_shadowed(mu) + ": Fock " + format_fock(h) +
                                      ", tableaux " + format_fock(w));
                if (!h.empty() || !w.empty()) by_dimension[mu.dimension(e)].push_back({h, w});
            }
            for (const auto& [d, vs] : by_dimension)
                for (size_t a = 0; a < vs.size(); ++a)
                    for (size_t b = a; b < vs.size(); ++b) {
                        ++pair_parts[i].cases;
                        const LaurentInt fock = inner(vs[a].first, vs[b].first);
                        const LaurentInt cells = inner(vs[a].second, vs[b].second);
                        if (fock != cells)
                            pair_parts[i].fail(charge_text(ch) + " dimension " + format_vcomp({d}) + ": Fock " +
                                               fock.to_string() + ", corner " + cells.to_string());
                    }
        }
    });
    CheckResult vecs{"(h_mu, u_xi) equals the tableau sum"};
    CheckResult pairs{"corner dimension equals the Fock inner product"};
    merge_into(vecs, vec_parts);
    merge_into(pairs, pair_parts);
    return {vecs, pairs};
}

std::vector<CheckResult> check_canonical(int max_n, int e, int max_ell, const CheckOptions& opt) {
    std::vector<Charge> charges;
    for (int l = 1; l <= max_ell; ++l)
        for (const Charge& ch : all_charges(e, l)) charges.push_back(ch);
    std::vector<CheckResult> inv(charges.size()), fix(charges.size()), can(charges.size());
    parallel_each(charges.size(), opt.jobs, [&](std::size_t i) {
        const FockConfig cfg{charges[i], opt.convention};
        const std::string tag = charge_text(cfg.charge);
        for (int n = 1; n <= max_n; ++n) {
            try {
                const BarInvolution psi(cfg, n);
                for (const auto& xi : multipartitions(n, cfg.charge.ell())) {
                    ++inv[i].cases;
                    if (psi(psi.on_basis(xi)) != basis_vector(xi)) inv[i].fail(tag + " xi " + format_multipartition(xi));
                }
                for (const auto& mu : enumerate_shadowed(n, cfg.charge)) {
                    const FockVector h = h_vector(cfg, mu);
                    if (h.empty()) continue;
                    ++fix[i].cases;
                    if (psi(h) != h) fix[i].fail(tag + " mu " + format_shadowed(mu));
                }
                for (const auto& [xi, p] : canonical_basis(psi)) {
                    ++can[i].cases;
                    if (psi(p) != p) can[i].fail(tag + " p(" + format_multipartition(xi) + ") is not bar-invariant");
                }
            } catch (const ConventionFailure& err) {
                can[i].fail(tag + ": " + err.what());
            }
        }
    });
    CheckResult r1{"bar involution squares to the identity"}, r2{"h-vectors are bar-invariant"},
        r3{"canonical basis is bar-invariant, unitriangular and positive"};
    merge_into(r1, inv);
    merge_into(r2, fix);
    merge_into(r3, can);

    CheckResult small{"e=2, level one, two boxes: one off-diagonal entry q^-1"};
    small.cases = 1;
    try {
        const auto d = decomposition_matrix(2, FockConfig{Charge{2, {0}, {}}, opt.convention});
        std::vector<std::string> off;
        for (const auto& [xi, row] : d)
            for (const auto& [eta, c] : row)
                if (eta != xi) off.push_back(format_multipartition(xi) + "->" + format_multipartition(eta) + ":" + c.to_string());
        const bool ok = off.size() == 1 && d.at(Multipartition{Partition{1, 1}}).count(Multipartition{Partition{2}}) &&
                         d.at(Multipartition{Partition{1, 1}}).at(Multipartition{Partition{2}}) == LaurentInt::monomial(-1);
        std::string joined;
        for (const auto& s : off) joined += (joined.empty() ? "" : " ") + s;
        if (!ok) small.fail("off-diagonal entries: " + joined);
        else small.detail = joined;
    } catch (const ConventionFailure& err) {
        small.fail(err.what());
    }
    return {r1, r2, r3, small};
}

// ---------------------------------------------------------------- counts

std::vector<CheckResult> check_counts(int max_n, int max_ell) {
    CheckResult pairs{"pair counts match the colored-word count"};
    for (int l = 1; l <= max_ell; ++l)
        for (int n = 1; n <= max_n; ++n)
            for (const auto& xi : multicompositions(n, l))
                for (AlphabetRule rule : {AlphabetRule::UpTo, AlphabetRule::From}) {
                    long long oracle = factorial(n);
                    for (int k = 1; k <= l; ++k)
                        for (int part : xi[k - 1]) {
                            oracle /= factorial(part);
                            const int choices = rule == AlphabetRule::UpTo ? k : l - k + 1;
                            for (int x = 0; x < part; ++x) oracle *= choices;
                        }
                    ++pairs.cases;
                    const long long got = count_pairs(xi, n, rule);
                    if (got != oracle) {
                        std::string t;
                        for (const auto& g : xi) {
                            t += t.empty() ? "" : "|";
                            for (size_t j = 0; j < g.size(); ++j) t += (j ? "," : "") + std::to_string(g[j]);
                        }
                        pairs.fail("xi " + t + ": counted " + std::to_string(got) + ", expected " + std::to_string(oracle));
                    }
                }

    CheckResult corner{"one-box corners are K or zero"};
    for (int e : {2, 3, 4})
        for (int z = 0; z < e; ++z)
            for (int j = 1; j <= e; ++j) {
                const Charge ch{e, {z}, {}};
                const ShadowedComposition mu{{ch.weight_node(1)}, {{unit_vector(e, j)}}};
                const LaurentInt want = j == ch.weight_node(1) ? LaurentInt(1) : LaurentInt();
                ++corner.cases;
                if (corner_dim(mu, mu, ch) != want) corner.fail(charge_text(ch) + " node " + std::to_string(j));
            }
    return {pairs, corner};
}

}  // namespace qschur
