#ifndef SSQW_TRANSFER_HPP
#define SSQW_TRANSFER_HPP

#include <vector>

#include "ssqw/model.hpp"

namespace ssqw {

struct KernelCount {
    int dim_ker = 0;    // dim ker of the supercharge band
    int dim_coker = 0;  // dim ker of its adjoint
    int witten = 0;     // dim_ker - dim_coker
    std::vector<double> decay_rates;  // moduli of the geometric modes used
};

// Exact kernel/cokernel dimensions of the supercharge band for piecewise-constant coins,
// by matching geometric solutions of the three-term recurrence across breakpoints.
// Requires both unbounded regions' symbols to be root-free on the unit circle within tol
// (CircleRootError otherwise); throws NotPiecewiseConstantError for tanh profiles.
KernelCount kernel_by_matching(const WalkSpec& spec, double tol = 1e-8);

}  // namespace ssqw

#endif
