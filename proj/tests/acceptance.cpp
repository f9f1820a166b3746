#include "qschur/checks.hpp"

#include <array>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

using namespace qschur;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::vector<CheckResult> results;
};

std::string run_capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    status = pclose(pipe);
    return out;
}

CheckResult determinism(const std::string& cli) {
    CheckResult r{"repeated CLI runs are byte-identical"};
    const std::vector<std::string> commands{
        "canonical --e 2 --ell 1 --charge 0 --n 4 --format json",
        "canonical --e 3 --ell 2 --charge 0,1 --n 3 --format csv",
        "dims --e 3 --ell 1 --charge 0 --mu \"1,0,1\" --lambda \"0,0,1;1,0,0\" --format json",
        "tableaux --e 3 --ell 3 --charge 0,1,2 --shape \"4,3|2,1|2,1\" --type \"3,3,1|1,1|2,1,1\" --format csv",
        "check --suite demazure --seed 7 --format text",
    };
    for (const auto& c : commands) {
        int s1 = 0, s2 = 0;
        const std::string a = run_capture(cli + " " + c, s1);
        const std::string b = run_capture(cli + " " + c, s2);
        ++r.cases;
        if (s1 != 0 || s2 != 0) r.fail("'" + c + "' exited with status " + std::to_string(s1));
        else if (a.empty()) r.fail("'" + c + "' printed nothing");
        else if (a != b) r.fail("'" + c + "' differs between runs");
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path to qschur cli> [jobs]\n";
        return 1;
    }
    CheckOptions opt;
    if (argc > 2) opt.jobs = std::stoi(argv[2]);

    std::vector<Criterion> crit;
    crit.push_back({1, "worked examples", check_worked_examples()});
    crit.push_back({2, "Demazure suite", check_demazure(100, 4, opt)});
    {
        auto rel = check_relations(4, {2, 3}, opt);
        crit.push_back({3, "operator relations", rel});
    }
    crit.push_back({4, "degree theorem (n<=6, e in {3,4}, l<=2)", check_degrees(6, {3, 4}, 2, opt)});
    crit.push_back({5, "basis independence (|d|<=3, h up to degree 4)", check_basis(3, {2, 3}, 4, opt)});
    crit.push_back({6, "cross-model identity (n<=5, e=3, l<=2)", check_fock(5, 3, 2, opt)});
    crit.push_back({7, "bar involution and canonical basis (n<=5, e=3, l<=2)", check_canonical(5, 3, 2, opt)});
    crit.push_back({8, "dimension counts", check_counts(4, 2)});
    crit.push_back({9, "determinism", {determinism(argv[1])}});

    bool all = true;
    for (const auto& c : crit) {
        bool ok = true;
        for (const auto& r : c.results) ok = ok && r.passed;
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << "\n";
        for (const auto& r : c.results)
            std::cout << "    " << (r.passed ? "ok  " : "FAIL") << " " << r.name << " [" << r.cases << " cases]"
                      << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    }
    return all ? 0 : 1;
}
