// Times the verification suites on the serial reference path and the
// OpenMP-parallel path, and checks that both produce identical reports.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "wigner_ur/verify.hpp"

using namespace wigner_ur;

namespace {

double run_timed(const std::string& suite, const verify::Options& opts,
                 verify::SuiteReport& out) {
    const auto start = std::chrono::steady_clock::now();
    out = verify::run_suite(suite, opts);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

bool reports_identical(const verify::SuiteReport& a, const verify::SuiteReport& b) {
    if (a.worst != b.worst || a.cases != b.cases || a.identities.size() != b.identities.size())
        return false;
    for (std::size_t i = 0; i < a.identities.size(); ++i) {
        if (a.identities[i].tag != b.identities[i].tag ||
            a.identities[i].worst != b.identities[i].worst ||
            a.identities[i].cases != b.identities[i].cases)
            return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> suites = {"recoupling", "symbols", "exact"};
    if (argc > 1) {
        suites.clear();
        for (int i = 1; i < argc; ++i) suites.push_back(argv[i]);
    }
    verify::Options serial_opts, parallel_opts;
    serial_opts.parallel = false;
    parallel_opts.parallel = true;

    std::printf("%-12s %12s %12s %9s %s\n", "suite", "serial [s]", "parallel [s]", "speedup",
                "identical");
    bool all_same = true;
    for (const auto& s : suites) {
        verify::SuiteReport rs, rp;
        const double ts = run_timed(s, serial_opts, rs);
        const double tp = run_timed(s, parallel_opts, rp);
        const bool same = reports_identical(rs, rp);
        all_same = all_same && same;
        std::printf("%-12s %12.3f %12.3f %8.2fx %s\n", s.c_str(), ts, tp, ts / tp,
                    same ? "yes" : "NO");
    }
    return all_same ? 0 : 1;
}
