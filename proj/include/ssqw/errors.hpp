#ifndef SSQW_ERRORS_HPP
#define SSQW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ssqw {

// Parameter constraints (p^2+|q|^2=1, a^2+|b|^2=1) violated beyond the acceptance band.
struct NormalizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scenario JSON violates the schema (unknown key, missing field, inconsistent values).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All three coefficients of z*F vanish; only happens at |p| = |a| = 1 (non-Fredholm).
struct ZeroPolynomialError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Symbol modulus below threshold at a sampled circle point.
struct CircleZeroError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A single-step phase increment exceeded pi/2: sampling too coarse for the margin.
struct UnwrapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |p| = |a| within tolerance: the case table (and the index) is undefined.
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WindowTooSmallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// hardy_conjugate found off-diagonal mass; indicates an assembly bug upstream.
struct NonBlockDiagonalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPiecewiseConstantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An unbounded region's symbol has a root on (or within tol of) the unit circle.
struct CircleRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No clean spectral gap around eps_cut; enlarge the window.
struct AmbiguousCutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ssqw

#endif
