#pragma once

#include <string>
#include <vector>

#include "wigner_ur/half_int.hpp"

namespace wigner_ur::verify {

struct IdentityResult {
    std::string tag;
    double worst = 0;
    long cases = 0;
};

struct SuiteReport {
    std::string suite;
    long cases = 0;
    double worst = 0;
    std::vector<IdentityResult> identities;

    void add(const std::string& tag, double deviation, long n = 1);
    void merge(const SuiteReport& other);
    bool pass(double tol) const { return worst < tol; }
};

struct Options {
    HalfInt jmax = HalfInt::from_int(2);
    HalfInt jmax_recoupling = HalfInt::from_int(1);
    std::vector<double> rs = {0.0, 1.0, 0.37};
    std::vector<int> ks = {2, 3, 4, 5, 7};
    bool parallel = true;
    unsigned seed = 12345;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite ("all" merges every suite). Deterministic for fixed
/// options regardless of the execution mode: the parallel path fills the same
/// per-instance slots the serial reference does and reduces by max.
SuiteReport run_suite(const std::string& name, const Options& opts);

}  // namespace wigner_ur::verify
