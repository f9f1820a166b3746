#include "qschur/exact_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qschur {

int total(const DimVector& d) { return std::accumulate(d.begin(), d.end(), 0); }

DimVector add(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension vectors of different length");
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DimVector sub(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension vectors of different length");
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

DimVector unit_vector(int e, int node) {
    if (node < 1 || node > e) throw std::out_of_range("node out of range");
    DimVector r(e, 0);
    r[node - 1] = 1;
    return r;
}

bool is_zero_vector(const DimVector& d) {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

int node_of_residue(int residue, int e) { return (((residue - 1) % e) + e) % e + 1; }

// ---------------------------------------------------------------- LaurentInt

LaurentInt::LaurentInt(long long c) {
    if (c != 0) terms_[0] = c;
}

LaurentInt LaurentInt::monomial(int exponent, const BigInt& c) {
    LaurentInt r;
    r.add_term(exponent, c);
    return r;
}

BigInt LaurentInt::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentInt::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("min_exponent of zero");
    return terms_.begin()->first;
}

int LaurentInt::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("max_exponent of zero");
    return terms_.rbegin()->first;
}

BigInt LaurentInt::at_one() const {
    BigInt s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

void LaurentInt::add_term(int exponent, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(exponent, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
    LaurentInt r;
    for (const auto& [i, x] : a.terms_)
        for (const auto& [j, y] : b.terms_) r.add_term(i + j, x * y);
    return r;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& o) { return *this = *this * o; }

LaurentInt LaurentInt::operator-() const {
    LaurentInt r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

std::string LaurentInt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first && c > 0) os << '+';
        os << c;
        if (k != 0) os << "*q^" << k;
        first = false;
    }
    return os.str();
}

LaurentInt LaurentInt::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
    LaurentInt r;
    size_t i = 0;
    auto read_int = [&](bool allow_sign) {
        size_t start = i;
        if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (digits == i) throw std::invalid_argument("expected integer in '" + text + "'");
        return s.substr(start, i - start);
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw std::invalid_argument("expected sign in '" + text + "'");
        }
        BigInt c = 1;
        bool has_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            c = BigInt(read_int(false));
            has_coeff = true;
        }
        int exponent = 0;
        if (i < s.size() && (s[i] == '*' || s[i] == 'q')) {
            if (s[i] == '*') {
                if (!has_coeff) throw std::invalid_argument("dangling '*' in '" + text + "'");
                ++i;
            }
            if (i >= s.size() || s[i] != 'q') throw std::invalid_argument("expected q in '" + text + "'");
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                exponent = std::stoi(read_int(true));
            }
        } else if (!has_coeff) {
            throw std::invalid_argument("expected term in '" + text + "'");
        }
        r.add_term(exponent, sign * c);
    }
    return r;
}

LaurentInt bar_q(const LaurentInt& p) {
    LaurentInt r;
    for (const auto& [k, c] : p.terms()) r.add_term(-k, c);
    return r;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(DimVector ambient) : ambient_(std::move(ambient)), num_vars_(total(ambient_)) {
    for (int x : ambient_)
        if (x < 0) throw std::invalid_argument("negative dimension");
}

MultiPoly MultiPoly::constant(const DimVector& ambient, const BigInt& c) {
    MultiPoly p(ambient);
    p.add_term(Exponent(p.num_vars_, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const DimVector& ambient, VarIndex v) {
    MultiPoly p(ambient);
    Exponent m(p.num_vars_, 0);
    m[p.flat(v)] = 1;
    p.add_term(m, 1);
    return p;
}

MultiPoly MultiPoly::monomial(const DimVector& ambient, const Exponent& exps, const BigInt& c) {
    MultiPoly p(ambient);
    if (static_cast<int>(exps.size()) != p.num_vars_) throw std::invalid_argument("exponent length");
    p.add_term(exps, c);
    return p;
}

int MultiPoly::offset(int node) const {
    if (node < 1 || node > static_cast<int>(ambient_.size())) throw std::out_of_range("node out of range");
    int o = 0;
    for (int t = 0; t < node - 1; ++t) o += ambient_[t];
    return o;
}

int MultiPoly::flat(VarIndex v) const {
    int o = offset(v.node);
    if (v.position < 1 || v.position > ambient_[v.node - 1]) throw std::out_of_range("position out of range");
    return o + v.position - 1;
}

VarIndex MultiPoly::var_of(int flat_index) const {
    int rest = flat_index;
    for (size_t t = 0; t < ambient_.size(); ++t) {
        if (rest < ambient_[t]) return {static_cast<int>(t) + 1, rest + 1};
        rest -= ambient_[t];
    }
    throw std::out_of_range("flat index out of range");
}

bool MultiPoly::is_homogeneous() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        int d = std::accumulate(m.begin(), m.end(), 0);
        if (deg >= 0 && d != deg) return false;
        deg = d;
    }
    return true;
}

int MultiPoly::degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, std::accumulate(m.begin(), m.end(), 0));
    return deg;
}

BigInt MultiPoly::coeff(const Exponent& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Exponent& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("polynomials live in different rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_ring(a, b);
    MultiPoly r(a.ambient_);
    MultiPoly::Exponent m(a.num_vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.num_vars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const BigInt& c) const {
    MultiPoly r(ambient_);
    if (c == 0) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
    return r;
}

MultiPoly MultiPoly::operator-() const { return *this * BigInt(-1); }

MultiPoly MultiPoly::relabeled(const std::vector<int>& perm) const {
    MultiPoly r(ambient_);
    Exponent out(num_vars_);
    for (const auto& [m, c] : terms_) {
        std::fill(out.begin(), out.end(), 0);
        for (int v = 0; v < num_vars_; ++v) out[perm[v]] += m[v];
        r.add_term(out, c);
    }
    return r;
}

MultiPoly MultiPoly::swapped(int a, int b) const {
    MultiPoly r(ambient_);
    for (const auto& [m, c] : terms_) {
        Exponent out = m;
        std::swap(out[a], out[b]);
        r.terms_.emplace(std::move(out), c);
    }
    return r;
}

// Synthetic division in x_a with coefficients in the remaining variables.
MultiPoly MultiPoly::divide_by_difference(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= num_vars_ || b >= num_vars_)
        throw std::out_of_range("bad variable pair");
    std::map<int, MultiPoly> slices;  // power of x_a -> coefficient polynomial (x_a-free)
    int top = -1;
    for (const auto& [m, c] : terms_) {
        Exponent rest = m;
        int p = rest[a];
        rest[a] = 0;
        auto it = slices.try_emplace(p, ambient_).first;
        it->second.add_term(rest, c);
        top = std::max(top, p);
    }
    MultiPoly quotient(ambient_);
    if (top <= 0) {
        if (!is_zero()) throw std::logic_error("division by x_a - x_b leaves a remainder");
        return quotient;
    }
    Exponent xb(num_vars_, 0);
    xb[b] = 1;
    MultiPoly xb_poly = monomial(ambient_, xb);
    // q_{p-1} = c_p + x_b q_p, remainder c_0 + x_b q_0.
    MultiPoly carry(ambient_);
    for (int p = top; p >= 1; --p) {
        MultiPoly qp = xb_poly * carry;
        if (auto it = slices.find(p); it != slices.end()) qp += it->second;
        for (const auto& [m, c] : qp.terms_) {
            Exponent full = m;
            full[a] = p - 1;
            quotient.add_term(full, c);
        }
        carry = std::move(qp);
    }
    MultiPoly remainder = xb_poly * carry;
    if (auto it = slices.find(0); it != slices.end()) remainder += it->second;
    if (!remainder.is_zero()) throw std::logic_error("division by x_a - x_b leaves a remainder");
    return quotient;
}

MultiPoly MultiPoly::embedded(const DimVector& ambient, const std::vector<int>& map) const {
    MultiPoly r(ambient);
    if (static_cast<int>(map.size()) != num_vars_) throw std::invalid_argument("embedding map length");
    Exponent out(r.num_vars_);
    for (const auto& [m, c] : terms_) {
        std::fill(out.begin(), out.end(), 0);
        for (int v = 0; v < num_vars_; ++v) out[map[v]] += m[v];
        r.add_term(out, c);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print higher degree first for readability.
    std::vector<std::pair<Exponent, BigInt>> items(terms_.rbegin(), terms_.rend());
    for (const auto& [m, c] : items) {
        bool unit = true;
        for (int x : m) unit = unit && x == 0;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        BigInt a = c < 0 ? BigInt(-c) : c;
        bool wrote = false;
        if (a != 1 || unit) {
            os << a;
            wrote = true;
        }
        for (int v = 0; v < num_vars_; ++v) {
            if (m[v] == 0) continue;
            VarIndex x = var_of(v);
            if (wrote) os << '*';
            os << "x" << x.node << '_' << x.position;
            if (m[v] > 1) os << '^' << m[v];
            wrote = true;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- permutations

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_permutation(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

int length(const Perm& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    return inv;
}

std::vector<int> reduced_word(const Perm& p) {
    Perm w = p;
    std::vector<int> out;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                out.push_back(static_cast<int>(i));
                changed = true;
            }
    }
    return out;
}

Perm perm_from_word(int n, const std::vector<int>& word) {
    Perm p = identity_perm(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it + 1 >= n) throw std::out_of_range("letter out of range");
        std::swap(p[*it], p[*it + 1]);
    }
    return p;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

MultiPoly apply_permutation(const NodePerm& p, const MultiPoly& f) {
    const DimVector& d = f.ambient();
    if (p.size() != d.size()) throw std::invalid_argument("node permutation has wrong number of nodes");
    std::vector<int> flat(f.num_vars());
    for (size_t t = 0; t < d.size(); ++t) {
        if (static_cast<int>(p[t].size()) != d[t] || !is_permutation(p[t]))
            throw std::invalid_argument("not a permutation of the node alphabet");
        int o = f.offset(static_cast<int>(t) + 1);
        for (int i = 0; i < d[t]; ++i) flat[o + i] = o + p[t][i];
    }
    return f.relabeled(flat);
}

MultiPoly apply_flat_permutation(const Perm& p, const MultiPoly& f) {
    if (static_cast<int>(p.size()) != f.num_vars() || !is_permutation(p))
        throw std::invalid_argument("not a permutation of the variables");
    for (int v = 0; v < f.num_vars(); ++v)
        if (f.var_of(v).node != f.var_of(p[v]).node)
            throw std::invalid_argument("permutation mixes node alphabets");
    return f.relabeled(p);
}

MultiPoly demazure(int node, int j, const MultiPoly& f) {
    int a = f.flat({node, j});
    int b = f.flat({node, j + 1});
    MultiPoly diff = f - f.swapped(a, b);
    return diff.divide_by_difference(a, b);
}

MultiPoly demazure_word(const std::vector<VarIndex>& word, const MultiPoly& f) {
    for (const auto& v : word) {
        f.flat(v);
        f.flat({v.node, v.position + 1});
    }
    MultiPoly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (g.is_zero()) break;
        g = demazure(it->node, it->position, g);
    }
    return g;
}

MultiPoly demazure_perm(int node, int first, const Perm& w, const MultiPoly& f) {
    std::vector<VarIndex> word;
    for (int i : reduced_word(w)) word.push_back({node, first + i + 1});
    return demazure_word(word, f);
}

MultiPoly euler_class(const DimVector& c, const DimVector& d) {
    const int e = static_cast<int>(c.size());
    DimVector amb = add(c, d);
    MultiPoly E = MultiPoly::constant(amb, 1);
    for (int i = 1; i <= e; ++i) {
        int next = i % e + 1;
        for (int j = 1; j <= c[next - 1]; ++j)
            for (int k = c[i - 1] + 1; k <= c[i - 1] + d[i - 1]; ++k)
                E = E * (MultiPoly::variable(amb, {next, j}) - MultiPoly::variable(amb, {i, k}));
    }
    return E;
}

std::vector<MultiPoly> artin_basis(const DimVector& d) {
    MultiPoly shape(d);
    const int n = shape.num_vars();
    std::vector<int> bound(n);
    for (int v = 0; v < n; ++v) {
        VarIndex x = shape.var_of(v);
        bound[v] = d[x.node - 1] - x.position;
    }
    std::vector<MultiPoly> out;
    MultiPoly::Exponent m(n, 0);
    while (true) {
        out.push_back(MultiPoly::monomial(d, m));
        int v = n - 1;
        while (v >= 0 && m[v] == bound[v]) m[v--] = 0;
        if (v < 0) break;
        ++m[v];
    }
    return out;
}

}  // namespace qschur
