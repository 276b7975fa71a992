#include "ssqw/transfer.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ssqw/errors.hpp"
#include "ssqw/symbol.hpp"
#include "ssqw/winding.hpp"

namespace ssqw {

namespace {

// Parameters are unit-normalized, so band coefficients are O(1) and an absolute threshold
// distinguishes structural zeros from round-off.
constexpr double kBandZero = 1e-13;

using Pair = Eigen::Vector2cd;

struct RegionPoly {
    complexd c0, c1, c2;  // c2 z^2 + c1 z + c0, read off a constant-coin row
};

RegionPoly region_poly(const ShiftParams& shift, const CoinSite& site) {
    const SymbolPoly s = symbol_from_limit(shift, site, Side::Plus);
    return RegionPoly{s.c0, s.c1, s.c2};
}

int poly_degree(const RegionPoly& p) {
    if (p.c2 != complexd(0.0, 0.0)) return 2;
    if (p.c1 != complexd(0.0, 0.0)) return 1;
    if (p.c0 != complexd(0.0, 0.0)) return 0;
    return -1;
}

std::vector<complexd> poly_roots(const RegionPoly& p) {
    SymbolPoly s;
    s.c0 = p.c0;
    s.c1 = p.c1;
    s.c2 = p.c2;
    return roots_closed_form(s);
}

struct BasisSet {
    std::vector<Pair> vecs;
    std::vector<double> rates;  // moduli of the nonzero geometric modes used
};

bool effectively_double(const std::vector<complexd>& roots) {
    return roots.size() == 2 &&
           std::abs(roots[0] - roots[1]) <= 1e-7 * std::max(1.0, std::abs(roots[0]));
}

// Pairs (psi(s-1), psi(s)) extendable to a solution of all rows right of the interface that
// decays at +infinity: span of z^x for roots |z| < 1. A root at 0 contributes the truncated
// mode (1, 0); a double root contributes the Jordan companion, whose pair-span is (0, 1).
BasisSet right_decaying_basis(const RegionPoly& p) {
    BasisSet out;
    std::vector<complexd> inside;
    for (const complexd& z : poly_roots(p))
        if (std::abs(z) < 1.0) inside.push_back(z);
    if (inside.size() == 2 && effectively_double(inside)) {
        out.vecs.push_back(Pair(1.0, inside[0]));
        out.vecs.push_back(Pair(0.0, 1.0));
    } else {
        for (const complexd& z : inside) out.vecs.push_back(Pair(1.0, z));
    }
    for (const complexd& z : inside)
        if (z != complexd(0.0, 0.0)) out.rates.push_back(std::abs(z));
    return out;
}

// Pairs (psi(m-1), psi(m)) extendable to a solution of all rows left of the interface that
// decays at -infinity: roots |z| > 1, plus one (0,1) / (1,0) mode per missing degree
// (degree deficits play the role of roots at infinity).
BasisSet left_decaying_basis(const RegionPoly& p) {
    BasisSet out;
    std::vector<complexd> outside;
    for (const complexd& z : poly_roots(p))
        if (std::abs(z) > 1.0) outside.push_back(z);
    if (outside.size() == 2 && effectively_double(outside)) {
        out.vecs.push_back(Pair(1.0, outside[0]));
        out.vecs.push_back(Pair(0.0, 1.0));
    } else {
        for (const complexd& z : outside) out.vecs.push_back(Pair(1.0, z));
    }
    const int deficit = 2 - poly_degree(p);
    if (deficit >= 1) out.vecs.push_back(Pair(0.0, 1.0));
    if (deficit >= 2) out.vecs.push_back(Pair(1.0, 0.0));
    for (const complexd& z : outside) out.rates.push_back(std::abs(z));
    return out;
}

struct BandRows {
    // Interface rows x in [row_lo, row_lo + sup.size() - 1]; rows below are governed by
    // `left`, rows above by `right`.
    int row_lo = 0;
    std::vector<complexd> sup, dia, sub;
    RegionPoly left, right;
};

void orthonormalize_columns(Eigen::MatrixXcd& m) {
    if (m.cols() == 1) {
        m.col(0).normalize();
        return;
    }
    m.col(0).normalize();
    m.col(1) -= m.col(0) * (m.col(0).dot(m.col(1)));
    const double n = m.col(1).norm();
    if (n > 1e-300) {
        m.col(1) /= n;
    } else {
        m.col(1) = Pair(-std::conj(m.col(0)(1)), std::conj(m.col(0)(0)));
    }
}

int subspace_intersection_dim(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
    Eigen::MatrixXcd joint(2, a.cols() + b.cols());
    joint << a, b;
    for (Eigen::Index c = 0; c < joint.cols(); ++c) joint.col(c).normalize();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(joint);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol) ++rank;
    const int dim = static_cast<int>(a.cols() + b.cols()) - rank;
    return std::clamp(dim, 0, static_cast<int>(std::min(a.cols(), b.cols())));
}

// Orthonormal complement of the span of the given pair vectors, as rows annihilating it.
Eigen::MatrixXcd complement_rows(const std::vector<Pair>& vecs) {
    Eigen::MatrixXcd m(2, std::max<std::size_t>(vecs.size(), 1));
    m.setZero();
    for (std::size_t i = 0; i < vecs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vecs[i];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-12) ++rank;
    Eigen::MatrixXcd rows(2 - rank, 2);
    for (int i = rank; i < 2; ++i) rows.row(i - rank) = svd.matrixU().col(i).adjoint();
    return rows;
}

// Kernel dimension via the finite null-space system: interface rows plus annihilator rows
// pinning the boundary pairs to the decaying subspaces. Handles degenerate bands (vanishing
// super/sub coefficients) that the transfer product cannot.
int kernel_dim_nullspace(const BandRows& band, const BasisSet& left, const BasisSet& right,
                         double tol) {
    const int n_rows = static_cast<int>(band.sup.size());
    const int n_unknown = n_rows + 2;  // sites row_lo-1 .. row_lo+n_rows
    const Eigen::MatrixXcd left_ann = complement_rows(left.vecs);
    const Eigen::MatrixXcd right_ann = complement_rows(right.vecs);

    Eigen::MatrixXcd sys(n_rows + left_ann.rows() + right_ann.rows(), n_unknown);
    sys.setZero();
    int r = 0;
    for (int i = 0; i < n_rows; ++i) {
        Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(n_unknown);
        row(i) = band.sub[i];
        row(i + 1) = band.dia[i];
        row(i + 2) = band.sup[i];
        const double n = row.norm();
        if (n < 1e-300) continue;  // structurally empty row constrains nothing
        sys.row(r++) = row / n;
    }
    for (Eigen::Index i = 0; i < left_ann.rows(); ++i) {
        sys.row(r).setZero();
        sys(r, 0) = left_ann(i, 0);
        sys(r, 1) = left_ann(i, 1);
        ++r;
    }
    for (Eigen::Index i = 0; i < right_ann.rows(); ++i) {
        sys.row(r).setZero();
        sys(r, n_unknown - 2) = right_ann(i, 0);
        sys(r, n_unknown - 1) = right_ann(i, 1);
        ++r;
    }
    if (r == 0) return n_unknown;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys.topRows(r));
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol) ++rank;
    return n_unknown - rank;
}

int kernel_dimension(const BandRows& band, double tol, std::vector<double>* rates) {
    const BasisSet left = left_decaying_basis(band.left);
    const BasisSet right = right_decaying_basis(band.right);
    if (rates) {
        rates->insert(rates->end(), left.rates.begin(), left.rates.end());
        rates->insert(rates->end(), right.rates.begin(), right.rates.end());
    }

    bool generic = true;
    for (std::size_t i = 0; i < band.sup.size(); ++i)
        if (std::abs(band.sup[i]) <= kBandZero || std::abs(band.sub[i]) <= kBandZero)
            generic = false;

    if (!generic) return kernel_dim_nullspace(band, left, right, tol);

    // Generic path: propagate the left decaying subspace across the interface with 2x2
    // transfer steps, re-orthonormalizing each step, then intersect with the right subspace.
    if (left.vecs.empty() || right.vecs.empty()) return 0;
    Eigen::MatrixXcd l(2, static_cast<Eigen::Index>(left.vecs.size()));
    for (std::size_t i = 0; i < left.vecs.size(); ++i) l.col(static_cast<Eigen::Index>(i)) = left.vecs[i];
    orthonormalize_columns(l);
    for (std::size_t i = 0; i < band.sup.size(); ++i) {
        const Eigen::RowVectorXcd top = l.row(1);
        const Eigen::RowVectorXcd bot =
            -(band.dia[i] * l.row(1) + band.sub[i] * l.row(0)) / band.sup[i];
        l.row(0) = top;
        l.row(1) = bot;
        orthonormalize_columns(l);
    }
    Eigen::MatrixXcd rmat(2, static_cast<Eigen::Index>(right.vecs.size()));
    for (std::size_t i = 0; i < right.vecs.size(); ++i)
        rmat.col(static_cast<Eigen::Index>(i)) = right.vecs[i];
    return subspace_intersection_dim(l, rmat, tol);
}

void check_unbounded_region(const RegionPoly& p, double tol, const char* side) {
    std::vector<complexd> roots;
    try {
        roots = poly_roots(p);
    } catch (const ZeroPolynomialError&) {
        std::ostringstream os;
        os << side << " symbol is identically zero (|p| = |a| = 1): not Fredholm";
        throw CircleRootError(os.str());
    }
    for (const complexd& z : roots)
        if (std::abs(std::abs(z) - 1.0) < tol) {
            std::ostringstream os;
            os << side << " symbol has a root of modulus " << std::abs(z)
               << " within " << tol << " of the unit circle: not Fredholm";
            throw CircleRootError(os.str());
        }
}

}  // namespace

KernelCount kernel_by_matching(const WalkSpec& spec, double tol) {
    if (!spec.coin.piecewise_constant())
        throw NotPiecewiseConstantError(
            "kernel_by_matching needs a piecewise-constant coin profile (flatten it first)");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    const ShiftParams& shift = spec.shift;
    const RegionPoly p_minus = region_poly(shift, spec.coin.limit_minus());
    const RegionPoly p_plus = region_poly(shift, spec.coin.limit_plus());
    check_unbounded_region(p_minus, tol, "minus-side");
    check_unbounded_region(p_plus, tol, "plus-side");

    KernelCount out;
    const auto& bps = spec.coin.breakpoints();
    if (bps.empty()) {
        // translation invariant: no solution can decay on both ends
        for (const complexd& z : poly_roots(p_plus))
            if (z != complexd(0.0, 0.0)) out.decay_rates.push_back(std::abs(z));
        return out;
    }

    const int row_lo = bps.front().x - 1;
    const int row_hi = bps.back().x - 1;

    BandRows orig;
    orig.row_lo = row_lo;
    orig.left = p_minus;
    orig.right = p_plus;
    BandRows adj;  // conjugate-transpose band: super <-> conj(sub of the row below)
    adj.row_lo = row_lo;
    adj.left = RegionPoly{std::conj(p_minus.c2), std::conj(p_minus.c1), std::conj(p_minus.c0)};
    adj.right = RegionPoly{std::conj(p_plus.c2), std::conj(p_plus.c1), std::conj(p_plus.c0)};
    for (int x = row_lo; x <= row_hi; ++x) {
        const CoinSite here = spec.coin.at(x);
        const CoinSite next = spec.coin.at(x + 1);
        orig.sup.push_back(band_super(shift, next.b));
        orig.dia.push_back(band_diag(shift, here.a, next.a));
        orig.sub.push_back(band_sub(shift, here.b));
        adj.sup.push_back(std::conj(band_sub(shift, next.b)));
        adj.dia.push_back(std::conj(band_diag(shift, here.a, next.a)));
        adj.sub.push_back(std::conj(band_super(shift, here.b)));
    }

    out.dim_ker = kernel_dimension(orig, tol, &out.decay_rates);
    out.dim_coker = kernel_dimension(adj, tol, nullptr);
    out.witten = out.dim_ker - out.dim_coker;
    return out;
}

}  // namespace ssqw
