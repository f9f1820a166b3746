#include "qschur/cellular.hpp"
#include "qschur/checks.hpp"
#include "qschur/fock.hpp"
#include "qschur/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qschur;

namespace {

enum ExitCode { Ok = 0, Usage = 1, Convention = 2, Invariant = 3 };

// Untyped enumeration of larger shapes does not fit in memory.
constexpr int kUntypedLimit = 6;

struct RunConfig {
    int e = 3;
    int ell = 1;
    std::string charges;
    int n = -1;  // -1: command default
    std::string format = "text";
    std::string out;
    std::uint64_t seed = 20240611;
    int jobs = 1;
    int cutoff = 4;
    std::string convention = "exact";
    bool e_given = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--e", cfg.e, "quiver size (cycle length)")->check(CLI::Range(2, 64));
    cmd->add_option("--ell", cfg.ell, "level (number of components)")->check(CLI::Range(1, 16));
    cmd->add_option("--charge", cfg.charges, "comma separated charge, one entry per component");
    cmd->add_option("--n", cfg.n, "size bound")->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", cfg.out, "write to this file instead of stdout");
    cmd->add_option("--seed", cfg.seed, "seed for randomized suites");
    cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
    cmd->add_option("--cutoff", cfg.cutoff, "internal degree bound for basis checks")->check(CLI::NonNegativeNumber);
    cmd->add_option("--convention", cfg.convention, "degree rule: exact or literal")
        ->check(CLI::IsMember({"exact", "literal"}));
}

DegConvention convention_of(const RunConfig& cfg) {
    return cfg.convention == "literal" ? DegConvention::Literal : DegConvention::Exact;
}

Charge charge_of(const RunConfig& cfg) {
    Charge c;
    c.e = cfg.e;
    if (cfg.charges.empty()) {
        c.z.assign(cfg.ell, 0);
    } else {
        std::stringstream ss(cfg.charges);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw UsageError("bad charge entry '" + tok + "'");
            }
            if (used != tok.size()) throw UsageError("bad charge entry '" + tok + "'");
            c.lifts.push_back(v);
            c.z.push_back(((v % cfg.e) + cfg.e) % cfg.e);
        }
    }
    if (c.ell() != cfg.ell)
        throw UsageError("--charge has " + std::to_string(c.ell()) + " entries but --ell is " + std::to_string(cfg.ell));
    return c;
}

std::string render_tableau(const SemistandardTableau& s) {
    std::string out;
    for (int c = 0; c < s.ell(); ++c) {
        if (c) out += " | ";
        out += "[";
        for (std::size_t r = 0; r < s.rows[c].size(); ++r) {
            if (r) out += " / ";
            for (std::size_t j = 0; j < s.rows[c][r].size(); ++j) out += (j ? " " : "") + format_entry(s.rows[c][r][j]);
        }
        out += "]";
    }
    return out;
}

std::string cmd_canonical(const RunConfig& rc) {
    FockConfig cfg{charge_of(rc), convention_of(rc)};
    const int n = rc.n < 0 ? 3 : rc.n;
    std::map<Multipartition, FockVector> basis;
    for (int m = 1; m <= n; ++m) basis.merge(canonical_basis(cfg, m));

    if (rc.format == "json") return canonical_to_json(cfg, basis).dump(2) + "\n";
    std::ostringstream out;
    if (rc.format == "csv") {
        out << "xi,eta,poly\n";
        for (const auto& [xi, v] : basis)
            for (const auto& [eta, c] : v)
                out << csv_field(format_multipartition(xi)) << ',' << csv_field(format_multipartition(eta)) << ','
                    << csv_field(c.to_string()) << '\n';
    } else {
        for (const auto& [xi, v] : basis) out << "b[" << format_multipartition(xi) << "] = " << format_fock(v) << '\n';
    }
    return out.str();
}

std::string cmd_dims(const RunConfig& rc, const std::string& mu_text, const std::string& lambda_text, int& code) {
    FockConfig cfg{charge_of(rc), convention_of(rc)};
    ShadowedComposition mu, lambda;
    try {
        mu = parse_shadowed(mu_text, cfg.charge);
        lambda = parse_shadowed(lambda_text, cfg.charge);
    } catch (const std::exception& ex) {
        throw UsageError(std::string("cannot parse composition: ") + ex.what());
    }
    const GradedDim tableau_side = corner_dim(mu, lambda, cfg.charge);
    const LaurentInt fock_side = mu.dimension(cfg.charge.e) == lambda.dimension(cfg.charge.e)
                                     ? inner(h_vector(cfg, mu), h_vector(cfg, lambda))
                                     : LaurentInt();
    const bool match = tableau_side == fock_side;
    if (!match) code = Invariant;
    const char* verdict = match ? "MATCH" : "MISMATCH";

    if (rc.format == "json") {
        Json j;
        j["e"] = cfg.charge.e;
        j["charges"] = cfg.charge.z;
        j["mu"] = format_shadowed(mu);
        j["lambda"] = format_shadowed(lambda);
        j["tableau"] = laurent_to_json(tableau_side);
        j["fock"] = laurent_to_json(fock_side);
        j["verdict"] = verdict;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (rc.format == "csv") {
        out << "side,poly\n"
            << "tableau," << csv_field(tableau_side.to_string()) << '\n'
            << "fock," << csv_field(fock_side.to_string()) << '\n'
            << "verdict," << verdict << '\n';
    } else {
        out << "tableau: " << tableau_side.to_string() << '\n'
            << "fock: " << fock_side.to_string() << '\n'
            << "verdict: " << verdict << '\n';
    }
    return out.str();
}

std::string cmd_check(const RunConfig& rc, const std::string& suite, int& code) {
    CheckOptions opt;
    opt.seed = rc.seed;
    opt.jobs = rc.jobs;
    opt.convention = convention_of(rc);
    auto size_or = [&](int d) { return rc.n < 0 ? d : rc.n; };
    auto es_or = [&](std::vector<int> d) { return rc.e_given ? std::vector<int>{rc.e} : d; };
    const int max_ell = std::max(rc.ell, 2);
    const bool all = suite == "all";

    std::vector<CheckResult> results;
    auto take = [&](std::vector<CheckResult> r) { results.insert(results.end(), r.begin(), r.end()); };
    if (all || suite == "demazure") take(check_demazure(100, size_or(4), opt));
    if (all || suite == "relations") {
        take(check_relations(size_or(4), es_or({2, 3}), opt));
        take(check_braid(es_or({2, 3}), opt));
    }
    if (all || suite == "degrees") take(check_degrees(size_or(6), es_or({3, 4}), max_ell, opt));
    if (all || suite == "basis") take(check_basis(size_or(3), es_or({2, 3}), rc.cutoff, opt));
    if (all || suite == "fock") {
        const int e = rc.e_given ? rc.e : 3;
        take(check_fock(size_or(5), e, max_ell, opt));
        take(check_canonical(size_or(5), e, max_ell, opt));
        take(check_counts(std::min(size_or(4), 4), max_ell));
    }
    for (const auto& r : results)
        if (!r.passed) code = Invariant;

    if (rc.format == "json") {
        Json j;
        j["suite"] = suite;
        j["seed"] = rc.seed;
        j["passed"] = code == Ok;
        j["results"] = check_to_json(results);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (rc.format == "csv") {
        out << "name,passed,cases,detail\n";
        for (const auto& r : results)
            out << csv_field(r.name) << ',' << (r.passed ? "true" : "false") << ',' << r.cases << ','
                << csv_field(r.detail) << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.cases << " cases]";
            if (!r.detail.empty()) out << ": " << r.detail;
            out << '\n';
        }
    }
    return out.str();
}

std::string cmd_tableaux(const RunConfig& rc, const std::string& shape_text, const std::string& type_text) {
    const Charge charge = charge_of(rc);
    const DegConvention conv = convention_of(rc);
    Multipartition shape;
    std::optional<Multicomposition> type;
    try {
        shape = parse_multipartition(shape_text);
        if (!type_text.empty()) type = parse_multicomposition(type_text);
    } catch (const std::exception& ex) {
        throw UsageError(std::string("cannot parse shape or type: ") + ex.what());
    }
    if (static_cast<int>(shape.size()) != charge.ell())
        throw UsageError("shape has " + std::to_string(shape.size()) + " components but --ell is " +
                         std::to_string(charge.ell()));
    if (!type && size(shape) > kUntypedLimit)
        throw UsageError("shapes with more than " + std::to_string(kUntypedLimit) + " boxes need --type");
    const auto list = enumerate_semistandard(shape, AlphabetRule::UpTo, type);

    if (rc.format == "json") {
        Json j;
        j["e"] = charge.e;
        j["charges"] = charge.z;
        j["shape"] = format_multipartition(shape);
        Json rows = Json::array();
        for (const auto& s : list)
            rows.push_back({{"cells", tableau_to_json(s)},
                            {"type", format_multicomposition(s.type())},
                            {"deg", deg_tableau(s, charge, conv)},
                            {"deg_operator", tableau_degree(s, charge)}});
        j["tableaux"] = rows;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (rc.format == "csv") out << "tableau,type,deg,deg_operator\n";
    for (const auto& s : list) {
        const int deg = deg_tableau(s, charge, conv);
        const int op = tableau_degree(s, charge);
        if (rc.format == "csv")
            out << csv_field(render_tableau(s)) << ',' << csv_field(format_multicomposition(s.type())) << ',' << deg
                << ',' << op << '\n';
        else
            out << render_tableau(s) << "  type " << format_multicomposition(s.type()) << "  deg " << deg
                << "  deg_operator " << op << '\n';
    }
    return out.str();
}

std::string error_record(const RunConfig& rc, const std::string& kind, const std::string& message,
                         const std::string& xi) {
    if (rc.format == "json") {
        Json j;
        j["error"] = kind;
        j["message"] = message;
        if (!xi.empty()) j["xi"] = xi;
        return j.dump(2) + "\n";
    }
    if (rc.format == "csv") return "error,message,xi\n" + kind + ',' + csv_field(message) + ',' + csv_field(xi) + '\n';
    return "error: " + kind + ": " + message + (xi.empty() ? "" : " (xi = " + xi + ")") + '\n';
}

void emit(const RunConfig& rc, const std::string& text) {
    if (rc.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(rc.out, std::ios::binary);
    if (!f) throw UsageError("cannot open " + rc.out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded cyclotomic quiver Schur algebra toolkit"};
    app.require_subcommand(1);
    RunConfig rc;
    std::string mu_text, lambda_text, suite = "all", shape_text, type_text;

    auto* canonical = app.add_subcommand("canonical", "canonical basis coefficients for every shape of size <= n");
    add_common(canonical, rc);

    auto* dims = app.add_subcommand("dims", "graded dimension of an idempotent truncation, computed two ways");
    add_common(dims, rc);
    dims->add_option("--mu", mu_text, "shadowed composition, groups separated by '|'")->required();
    dims->add_option("--lambda", lambda_text, "shadowed composition, groups separated by '|'")->required();

    auto* check = app.add_subcommand("check", "run an invariant suite");
    add_common(check, rc);
    check->add_option("--suite", suite)->check(CLI::IsMember({"demazure", "relations", "degrees", "basis", "fock", "all"}));

    auto* tableaux = app.add_subcommand("tableaux", "semistandard multitableaux of a shape with their degrees");
    add_common(tableaux, rc);
    tableaux->add_option("--shape", shape_text, "multipartition such as 4,3|2,1|2,1")->required();
    tableaux->add_option("--type", type_text, "multicomposition such as 3,3,1|1,1|2,1,1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int rcode = app.exit(ex);
        return rcode == 0 ? Ok : Usage;
    }
    for (auto* cmd : {canonical, dims, check, tableaux})
        if (cmd->parsed()) rc.e_given = cmd->count("--e") > 0;

    int code = Ok;
    try {
        std::string text;
        if (canonical->parsed()) text = cmd_canonical(rc);
        else if (dims->parsed()) text = cmd_dims(rc, mu_text, lambda_text, code);
        else if (check->parsed()) text = cmd_check(rc, suite, code);
        else text = cmd_tableaux(rc, shape_text, type_text);
        emit(rc, text);
    } catch (const UsageError& ex) {
        std::cerr << "usage error: " << ex.what() << '\n';
        return Usage;
    } catch (const ConventionFailure& ex) {
        const std::string record = error_record(rc, "convention_failure", ex.what(), format_multipartition(ex.xi()));
        std::cerr << "convention failure: " << ex.what() << '\n';
        try {
            emit(rc, record);
        } catch (const UsageError&) {
        }
        return Convention;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "usage error: " << ex.what() << '\n';
        return Usage;
    }
    return code;
}
