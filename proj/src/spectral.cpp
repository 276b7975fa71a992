#include "ssqw/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ssqw/errors.hpp"

namespace ssqw {

namespace {

// Indicator of the central half-window (site-major, `components` entries per site).
Eigen::VectorXd central_indicator(const Window& w, int components) {
    const int n = w.sites();
    const int quarter = n / 4;
    Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(components) * n);
    for (int i = quarter; i <= n - 1 - quarter; ++i)
        for (int c = 0; c < components; ++c) d(components * i + c) = 1.0;
    return d;
}

double localization_weight(const Eigen::VectorXcd& v, const Eigen::VectorXd& d) {
    double num = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) num += d(i) * std::norm(v(i));
    const double den = v.squaredNorm();
    return den > 0.0 ? num / den : 0.0;
}

void check_interfaces_central(const WalkSpec& spec, const Window& w) {
    const int n = w.sites();
    const int third = n / 3;
    const int lo = w.lo + third, hi = w.hi - third;
    auto inside = [&](int x) { return x >= lo && x <= hi; };
    if (spec.coin.piecewise_constant()) {
        for (const auto& bp : spec.coin.breakpoints())
            if (!inside(bp.x))
                throw std::invalid_argument("coin interface outside the central third of the window");
    } else if (!inside(0)) {
        throw std::invalid_argument("tanh interface (x=0) outside the central third of the window");
    }
}

}  // namespace

SpectralEstimate index_by_chirality(const WalkSpec& spec, const Window& w, double eps_cut,
                                    double loc_threshold) {
    if (w.boundary != Boundary::Open)
        throw std::invalid_argument("index_by_chirality needs an open-boundary window");
    if (w.sites() < 200)
        throw std::invalid_argument("index_by_chirality needs a window of >= 200 sites");
    check_interfaces_central(spec, w);

    const auto [u, q] = assemble_evolution_and_supercharge(spec, w);
    const BandedMatrix gamma = assemble_gamma(spec.shift, w);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(q.block);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition of Q failed");
    const Eigen::VectorXd& ev = es.eigenvalues();

    SpectralEstimate out;
    out.window = w;
    std::vector<double> magnitudes(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) magnitudes[i] = std::abs(ev(i));
    std::sort(magnitudes.begin(), magnitudes.end());
    out.near_zero_values.assign(magnitudes.begin(),
                                magnitudes.begin() + std::min<std::size_t>(magnitudes.size(), 12));

    for (double m : magnitudes)
        if (m >= 0.5 * eps_cut && m <= 2.0 * eps_cut) {
            std::ostringstream os;
            os << "|eigenvalue| " << m << " within a factor of 2 of eps_cut " << eps_cut
               << ": no clean gap, enlarge the window";
            throw AmbiguousCutError(os.str());
        }

    std::vector<Eigen::Index> cluster;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (std::abs(ev(i)) < eps_cut) cluster.push_back(i);
    if (cluster.empty()) {
        out.estimated_index = 0;
        out.residual = 0.0;
        return out;
    }

    const Eigen::Index m = static_cast<Eigen::Index>(cluster.size());
    Eigen::MatrixXcd v(q.block.rows(), m);
    for (Eigen::Index j = 0; j < m; ++j) v.col(j) = es.eigenvectors().col(cluster[j]);

    // Rotate the near-kernel cluster into the eigenbasis of the localization operator:
    // genuine interface modes and truncation-edge modes are numerically degenerate, so the
    // raw eigenvectors may mix them arbitrarily.
    const Eigen::VectorXd d = central_indicator(w, 2);
    const Eigen::MatrixXcd vd = d.asDiagonal() * v;
    Eigen::MatrixXcd mloc = v.adjoint() * vd;
    mloc = 0.5 * (mloc + mloc.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> esl(mloc);
    const Eigen::MatrixXcd rotated = v * esl.eigenvectors();

    double chirality_sum = 0.0;
    for (Eigen::Index j = m - 1; j >= 0; --j) {  // descending localization
        const Eigen::VectorXcd mode = rotated.col(j);
        const double loc = std::clamp(esl.eigenvalues()(j), 0.0, 1.0);
        ModeInfo info;
        info.value = std::real(mode.dot(q.block * mode));
        info.localization = loc;
        info.chirality = std::real(mode.dot(gamma.block * mode));
        out.modes.push_back(info);
        if (loc > loc_threshold) chirality_sum += info.chirality;
    }
    out.estimated_index = static_cast<int>(std::llround(chirality_sum));
    out.residual = std::abs(chirality_sum - out.estimated_index);
    return out;
}

std::vector<double> near_kernel_svd(const BandedMatrix& mat, int k) {
    if (k < 1) throw std::invalid_argument("near_kernel_svd needs k >= 1");
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(mat.block);
    const Eigen::VectorXd& sv = svd.singularValues();  // descending
    const int count = std::min<int>(k, static_cast<int>(sv.size()));
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) out[i] = sv(sv.size() - 1 - i);
    return out;
}

std::vector<EdgeMode> edge_state_detector(const WalkSpec& spec, const Window& w, double tol_eig) {
    if (w.boundary != Boundary::Open)
        throw std::invalid_argument("edge_state_detector needs an open-boundary window");
    const auto [u, q] = assemble_evolution_and_supercharge(spec, w);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(u.block);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition of U failed");

    const Eigen::VectorXd d = central_indicator(w, 2);
    std::vector<EdgeMode> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const complexd lambda = es.eigenvalues()(i);
        const double dist = std::min(std::abs(lambda - 1.0), std::abs(lambda + 1.0));
        if (dist >= tol_eig) continue;
        EdgeMode mode;
        mode.eigenvalue = lambda;
        mode.localization = localization_weight(es.eigenvectors().col(i), d);
        out.push_back(mode);
    }
    std::sort(out.begin(), out.end(), [](const EdgeMode& a, const EdgeMode& b) {
        const double da = std::min(std::abs(a.eigenvalue - 1.0), std::abs(a.eigenvalue + 1.0));
        const double db = std::min(std::abs(b.eigenvalue - 1.0), std::abs(b.eigenvalue + 1.0));
        if (da != db) return da < db;
        if (a.eigenvalue.real() != b.eigenvalue.real())
            return a.eigenvalue.real() < b.eigenvalue.real();
        return a.eigenvalue.imag() < b.eigenvalue.imag();
    });
    return out;
}

}  // namespace ssqw
