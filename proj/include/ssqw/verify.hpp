#ifndef SSQW_VERIFY_HPP
#define SSQW_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ssqw {

// Per-suite case counts. `scaled(f)` multiplies the random-draw counts (grids are fixed).
struct VerifyCounts {
    int winding_draws = 1000;   // roots vs argument agreement
    int root_draws = 500;       // closed-form roots vs textbook root expressions
    int transfer_single = 200;  // single-breakpoint transfer exactness
    int transfer_multi = 50;    // <=3-breakpoint transfer exactness
    int spectral_specs = 30;    // chirality estimator agreement (window [-150,150])
    int toeplitz_symbols = 20;  // finite-section law
    int finite_rank_draws = 25; // finite-rank support checks

    VerifyCounts scaled(double factor) const;
    bool all_zero() const;
};

struct SuiteResult {
    std::string name;
    int total = 0;
    int failures = 0;
    double seconds = 0.0;
    std::string first_failure;  // scenario JSON or case description of the first failure
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    VerifyCounts counts;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Runs the eight verification suites, printing one pass/fail line per suite.
// Deterministic for a fixed seed. Returns the per-suite results.
std::vector<SuiteResult> run_verification(const VerifyOptions& opts, std::ostream& out);

// Convenience wrapper: prints the summary and returns the process exit code
// (0 all pass, 1 first failure with its scenario dump).
int verify_main(const VerifyOptions& opts, std::ostream& out);

}  // namespace ssqw

#endif
