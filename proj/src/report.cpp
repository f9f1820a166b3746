#include "qschur/report.hpp"

#include <sstream>
#include <stdexcept>

namespace qschur {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Json laurent_to_json(const LaurentInt& p) {
    Json j = Json::object();
    for (const auto& [k, c] : p.terms()) {
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            j[std::to_string(k)] = static_cast<long long>(c);
        else
            j[std::to_string(k)] = c.str();
    }
    return j;
}

LaurentInt laurent_from_json(const Json& j) {
    LaurentInt p;
    for (const auto& [k, v] : j.items()) {
        const BigInt c = v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<long long>());
        p.add_term(std::stoi(k), c);
    }
    return p;
}

Json canonical_to_json(const FockConfig& cfg, const std::map<Multipartition, FockVector>& basis) {
    Json j;
    j["e"] = cfg.charge.e;
    j["charges"] = cfg.charge.z;
    j["convention"] = cfg.convention == DegConvention::Exact ? "exact" : "literal";
    Json rows = Json::array();
    for (const auto& [xi, p] : basis) {
        Json row;
        row["xi"] = format_multipartition(xi);
        Json coeffs = Json::array();
        for (const auto& [eta, c] : p) coeffs.push_back({{"eta", format_multipartition(eta)}, {"poly", laurent_to_json(c)}});
        row["coeffs"] = coeffs;
        rows.push_back(row);
    }
    j["basis"] = rows;
    return j;
}

std::map<Multipartition, FockVector> canonical_from_json(const Json& j) {
    std::map<Multipartition, FockVector> out;
    for (const auto& row : j.at("basis")) {
        FockVector& v = out[parse_multipartition(row.at("xi").get<std::string>())];
        for (const auto& c : row.at("coeffs"))
            add_scaled(v, basis_vector(parse_multipartition(c.at("eta").get<std::string>())), laurent_from_json(c.at("poly")));
    }
    return out;
}

Json tableau_to_json(const SemistandardTableau& s) {
    Json j = Json::object();
    for (const Box& b : s.reading_boxes())
        j[std::to_string(b.comp) + "." + std::to_string(b.row) + "." + std::to_string(b.col)] = format_entry(s.at(b));
    return j;
}

SemistandardTableau tableau_from_json(const Json& j) {
    std::map<Box, Entry> cells;
    int comps = 0;
    for (const auto& [key, v] : j.items()) {
        const auto pos = split(key, '.');
        const auto val = split(v.get<std::string>(), '_');
        if (pos.size() != 3 || val.size() != 2) throw std::invalid_argument("bad tableau cell '" + key + "'");
        const Box b{std::stoi(pos[0]), std::stoi(pos[1]), std::stoi(pos[2])};
        cells[b] = Entry{std::stoi(val[1]), std::stoi(val[0])};
        comps = std::max(comps, b.comp);
    }
    SemistandardTableau s;
    s.shape.assign(comps, {});
    s.rows.assign(comps, {});
    for (const auto& [b, x] : cells) {
        auto& rows = s.rows[b.comp - 1];
        if (static_cast<int>(rows.size()) < b.row) rows.resize(b.row);
        auto& row = rows[b.row - 1];
        if (static_cast<int>(row.size()) != b.col - 1) throw std::invalid_argument("tableau cells are not left-justified");
        row.push_back(x);
    }
    for (int c = 0; c < comps; ++c)
        for (const auto& row : s.rows[c]) s.shape[c].push_back(static_cast<int>(row.size()));
    return s;
}

std::string format_multicomposition(const Multicomposition& xi) {
    std::string s;
    for (size_t k = 0; k < xi.size(); ++k) {
        if (k) s += '|';
        for (size_t i = 0; i < xi[k].size(); ++i) s += (i ? "," : "") + std::to_string(xi[k][i]);
    }
    return s;
}

Multicomposition parse_multicomposition(const std::string& s) {
    Multicomposition xi;
    for (const auto& comp : split(s, '|')) {
        std::vector<int> parts;
        if (!comp.empty())
            for (const auto& tok : split(comp, ',')) {
                std::size_t used = 0;
                const int x = std::stoi(tok, &used);
                if (used != tok.size() || x < 0) throw std::invalid_argument("bad multiplicity '" + tok + "'");
                parts.push_back(x);
            }
        xi.push_back(std::move(parts));
    }
    return xi;
}

Json check_to_json(const std::vector<CheckResult>& results) {
    Json arr = Json::array();
    for (const auto& r : results)
        arr.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    return arr;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace qschur
