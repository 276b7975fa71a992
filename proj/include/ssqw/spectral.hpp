#ifndef SSQW_SPECTRAL_HPP
#define SSQW_SPECTRAL_HPP

#include <vector>

#include "ssqw/operators.hpp"

namespace ssqw {

struct ModeInfo {
    double value = 0.0;         // <psi, Q psi>
    double localization = 0.0;  // probability weight in the central half-window
    double chirality = 0.0;     // Re <psi, Gamma psi>
};

struct SpectralEstimate {
    std::vector<double> near_zero_values;  // smallest |eigenvalues|, ascending
    std::vector<ModeInfo> modes;           // near-kernel modes after de-mixing
    int estimated_index = 0;
    double residual = 0.0;  // |chirality sum - estimated_index|
    Window window;
};

// Chirality-weighted count of near-zero modes of Q on an open window (>= 200 sites,
// interfaces within the central third). Modes with |lambda| < eps_cut are rotated into the
// eigenbasis of the central-window localization operator; directions with weight above
// loc_threshold contribute their chirality. Throws AmbiguousCutError when some |lambda|
// lies within a factor of 2 of eps_cut.
SpectralEstimate index_by_chirality(const WalkSpec& spec, const Window& w,
                                    double eps_cut = 1e-6, double loc_threshold = 0.9);

// k smallest singular values, ascending.
std::vector<double> near_kernel_svd(const BandedMatrix& mat, int k);

struct EdgeMode {
    complexd eigenvalue;
    double localization = 0.0;  // central half-window weight
};

// Eigenpairs of the open-window evolution U within tol_eig of +1 or -1, sorted by distance
// to the nearer of the two. Empty result is a valid return.
std::vector<EdgeMode> edge_state_detector(const WalkSpec& spec, const Window& w,
                                          double tol_eig = 1e-6);

}  // namespace ssqw

#endif
