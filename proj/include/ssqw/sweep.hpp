#ifndef SSQW_SWEEP_HPP
#define SSQW_SWEEP_HPP

#include <iosfwd>
#include <string>

#include "ssqw/analysis.hpp"

namespace ssqw {

struct GridRange {
    double lo = 0.0;
    double hi = 0.0;
    double step = 1.0;

    static GridRange parse(const std::string& text);  // "lo:hi:step"
    std::vector<double> values() const;               // lo, lo+step, ..., <= hi (+ half step)
};

struct SweepOptions {
    GridRange p;
    GridRange a_plus;
    double a_minus = 0.0;
    double b_phase = 0.0;  // b(+-inf) = e^{i phase} sqrt(1 - a^2)
    bool run_transfer = false;
    bool run_spectral = false;
    Window window{-150, 150, Boundary::Open};
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct SweepSummary {
    int total = 0;
    int agree = 0;
    int disagree = 0;
    int not_fredholm = 0;
};

// One CSV row per grid point, in grid order regardless of worker completion order,
// followed by a summary comment line.
SweepSummary run_sweep(const SweepOptions& opts, std::ostream& csv);

}  // namespace ssqw

#endif
