#pragma once

#include "qschur/combinatorics.hpp"
#include "qschur/exact_poly.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qschur {

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    long long cases = 0;
    std::string detail;  // counterexample or summary

    void fail(const std::string& what);
};

struct CheckOptions {
    std::uint64_t seed = 20240611;
    int jobs = 1;
    DegConvention convention = DegConvention::Exact;
};

MultiPoly random_poly(const DimVector& ambient, int max_degree, int terms, std::mt19937_64& rng);

// Each returns one or more named results; sizes are the bounds of the corresponding claim.
std::vector<CheckResult> check_worked_examples();
std::vector<CheckResult> check_demazure(int samples, int max_rank, const CheckOptions& opt);
std::vector<CheckResult> check_relations(int max_size, const std::vector<int>& es, const CheckOptions& opt);
std::vector<CheckResult> check_braid(const std::vector<int>& es, const CheckOptions& opt);
std::vector<CheckResult> check_degrees(int max_n, const std::vector<int>& es, int max_ell, const CheckOptions& opt);
std::vector<CheckResult> check_basis(int max_size, const std::vector<int>& es, int cutoff, const CheckOptions& opt);
std::vector<CheckResult> check_fock(int max_n, int e, int max_ell, const CheckOptions& opt);
std::vector<CheckResult> check_canonical(int max_n, int e, int max_ell, const CheckOptions& opt);
std::vector<CheckResult> check_counts(int max_n, int max_ell);

// Every residue vector assignment of the given level.
std::vector<Charge> all_charges(int e, int ell);

}  // namespace qschur
