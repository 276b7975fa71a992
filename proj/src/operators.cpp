#include "ssqw/operators.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ssqw/errors.hpp"

namespace ssqw {

namespace {

void check_window(const Window& w) {
    if (w.hi - w.lo < 8) throw std::invalid_argument("window needs hi - lo >= 8");
}

int wrap_index(int i, int n) {
    const int r = i % n;
    return r < 0 ? r + n : r;
}

}  // namespace

BandedMatrix assemble_gamma(const ShiftParams& shift, const Window& w) {
    check_window(w);
    const int n = w.sites();
    const bool periodic = w.boundary == Boundary::Periodic;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        m(2 * i, 2 * i) = shift.p;
        m(2 * i + 1, 2 * i + 1) = -shift.p;
        if (i + 1 < n || periodic) m(2 * i, 2 * wrap_index(i + 1, n) + 1) = shift.q;
        if (i - 1 >= 0 || periodic) m(2 * i + 1, 2 * wrap_index(i - 1, n)) = std::conj(shift.q);
    }
    return BandedMatrix{w, std::move(m), 1, OperatorKind::Gamma};
}

BandedMatrix assemble_coin(const CoinProfile& coin, const Window& w) {
    check_window(w);
    const int n = w.sites();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        const CoinSite c = coin.at(w.lo + i);
        m(2 * i, 2 * i) = c.a;
        m(2 * i, 2 * i + 1) = std::conj(c.b);
        m(2 * i + 1, 2 * i) = c.b;
        m(2 * i + 1, 2 * i + 1) = -c.a;
    }
    return BandedMatrix{w, std::move(m), 0, OperatorKind::Coin};
}

std::pair<BandedMatrix, BandedMatrix> assemble_evolution_and_supercharge(const WalkSpec& spec,
                                                                         const Window& w) {
    const BandedMatrix gamma = assemble_gamma(spec.shift, w);
    const BandedMatrix coin = assemble_coin(spec.coin, w);
    Eigen::MatrixXcd u = gamma.block * coin.block;
    // (U - U*) / 2i as multiplication by -i/2: exact sign flips and halvings, so Q stays
    // Hermitian bitwise.
    Eigen::MatrixXcd q = (u - u.adjoint()) * complexd(0.0, -0.5);
    return {BandedMatrix{w, std::move(u), 1, OperatorKind::Evolution},
            BandedMatrix{w, std::move(q), 1, OperatorKind::Supercharge}};
}

BandedMatrix assemble_q_plus(const WalkSpec& spec, const Window& w) {
    check_window(w);
    const int n = w.sites();
    const bool periodic = w.boundary == Boundary::Periodic;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const int x = w.lo + i;
        const CoinSite here = spec.coin.at(x);
        const CoinSite next = spec.coin.at(x + 1);
        m(i, i) = band_diag(spec.shift, here.a, next.a);
        if (i + 1 < n || periodic) m(i, wrap_index(i + 1, n)) = band_super(spec.shift, next.b);
        if (i - 1 >= 0 || periodic) m(i, wrap_index(i - 1, n)) = band_sub(spec.shift, here.b);
    }
    return BandedMatrix{w, std::move(m), 1, OperatorKind::QPlus};
}

TrigPoly::TrigPoly(int min_degree, std::vector<complexd> coeffs)
    : min_m_(min_degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(complexd(0.0, 0.0));
}

TrigPoly TrigPoly::constant(complexd c) { return TrigPoly(0, {c}); }

TrigPoly TrigPoly::monomial(int m, complexd c) { return TrigPoly(m, {c}); }

TrigPoly TrigPoly::from_symbol(const SymbolPoly& sym) {
    return TrigPoly(-1, {sym.c0, sym.c1, sym.c2});
}

complexd TrigPoly::coeff(int m) const {
    const int idx = m - min_m_;
    if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return complexd(0.0, 0.0);
    return coeffs_[idx];
}

int TrigPoly::band() const {
    int b = 0;
    for (int m = min_degree(); m <= max_degree(); ++m)
        if (coeff(m) != complexd(0.0, 0.0)) b = std::max(b, std::abs(m));
    return b;
}

complexd TrigPoly::eval(complexd z) const {
    complexd acc(0.0, 0.0);
    for (int m = min_degree(); m <= max_degree(); ++m) {
        if (coeff(m) == complexd(0.0, 0.0)) continue;
        acc += coeff(m) * std::pow(z, m);
    }
    return acc;
}

TrigPoly TrigPoly::reflected() const {
    std::vector<complexd> rev(coeffs_.rbegin(), coeffs_.rend());
    return TrigPoly(-max_degree(), std::move(rev));
}

TrigPoly TrigPoly::product(const TrigPoly& other) const {
    const int lo = min_degree() + other.min_degree();
    const int hi = max_degree() + other.max_degree();
    std::vector<complexd> out(static_cast<std::size_t>(hi - lo + 1), complexd(0.0, 0.0));
    for (int m = min_degree(); m <= max_degree(); ++m)
        for (int k = other.min_degree(); k <= other.max_degree(); ++k)
            out[static_cast<std::size_t>(m + k - lo)] += coeff(m) * other.coeff(k);
    return TrigPoly(lo, std::move(out));
}

BandedMatrix assemble_piecewise(const TrigPoly& f, const TrigPoly& g, const Window& w,
                                PiecewiseVariant variant) {
    check_window(w);
    if (w.boundary != Boundary::Open)
        throw std::invalid_argument("piecewise operators are defined on open windows");
    const int m_band = std::max(f.band(), g.band());
    if (w.lo > -m_band - 1 || w.hi < m_band + 1) {
        std::ostringstream os;
        os << "window [" << w.lo << ", " << w.hi << "] must contain [" << -m_band - 1 << ", "
           << m_band + 1 << "]";
        throw WindowTooSmallError(os.str());
    }
    const int n = w.sites();
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n, n);
    for (int col = 0; col < n; ++col) {
        const int x = w.lo + col;
        const TrigPoly& h = x >= 0 ? g : f;
        for (int m = h.min_degree(); m <= h.max_degree(); ++m) {
            const int row_site = x - m;  // h(L)|x> has amplitude coeff(m) at |x-m>
            if (row_site < w.lo || row_site > w.hi) continue;
            if (variant == PiecewiseVariant::B) {
                const bool keep = x >= 0 ? row_site >= 0 : row_site <= -1;
                if (!keep) continue;
            }
            mat(row_site - w.lo, col) += h.coeff(m);
        }
    }
    return BandedMatrix{w, std::move(mat), m_band,
                        variant == PiecewiseVariant::A ? OperatorKind::PiecewiseA
                                                       : OperatorKind::PiecewiseB};
}

BandedMatrix assemble_toeplitz(const TrigPoly& h, int n) {
    if (n <= 2 * h.band()) throw std::invalid_argument("Toeplitz truncation needs n > 2*degree");
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) mat(j, k) = h.coeff(j - k);
    return BandedMatrix{Window{0, n - 1, Boundary::Open}, std::move(mat), h.band(),
                        OperatorKind::Toeplitz};
}

std::pair<BandedMatrix, BandedMatrix> hardy_conjugate(const BandedMatrix& mat) {
    if (mat.kind != OperatorKind::PiecewiseB)
        throw std::invalid_argument("hardy_conjugate expects a variant-B piecewise matrix");
    const Window& w = mat.window;
    if (w.lo > -1 || w.hi < 0)
        throw std::invalid_argument("hardy_conjugate needs lo <= -1 < 0 <= hi");
    const int n_plus = w.hi + 1;
    const int n_minus = -w.lo;

    double off_mass = 0.0;
    for (int j = 0; j < w.sites(); ++j)
        for (int k = 0; k < w.sites(); ++k) {
            const bool row_plus = w.lo + j >= 0;
            const bool col_plus = w.lo + k >= 0;
            if (row_plus != col_plus) off_mass = std::max(off_mass, std::abs(mat.block(j, k)));
        }
    if (off_mass > 1e-12) {
        std::ostringstream os;
        os << "off-diagonal block entry " << off_mass << " exceeds 1e-12";
        throw NonBlockDiagonalError(os.str());
    }

    Eigen::MatrixXcd t1(n_plus, n_plus);   // sites x >= 0 at block position x
    for (int j = 0; j < n_plus; ++j)
        for (int k = 0; k < n_plus; ++k) t1(j, k) = mat.block(j - w.lo, k - w.lo);
    Eigen::MatrixXcd t2(n_minus, n_minus);  // sites x <= -1 at block position -x-1
    for (int j = 0; j < n_minus; ++j)
        for (int k = 0; k < n_minus; ++k) t2(j, k) = mat.block(-j - 1 - w.lo, -k - 1 - w.lo);

    return {BandedMatrix{Window{0, n_plus - 1, Boundary::Open}, std::move(t1), mat.bandwidth,
                         OperatorKind::Toeplitz},
            BandedMatrix{Window{0, n_minus - 1, Boundary::Open}, std::move(t2), mat.bandwidth,
                         OperatorKind::Toeplitz}};
}

void dump_nonzero_csv(const BandedMatrix& mat, std::ostream& out) {
    out << "row,col,re,im\n";
    char buf[80];
    for (Eigen::Index j = 0; j < mat.block.rows(); ++j)
        for (Eigen::Index k = 0; k < mat.block.cols(); ++k) {
            const complexd v = mat.block(j, k);
            if (v == complexd(0.0, 0.0)) continue;
            std::snprintf(buf, sizeof(buf), "%lld,%lld,%.17g,%.17g\n",
                          static_cast<long long>(j), static_cast<long long>(k), v.real(),
                          v.imag());
            out << buf;
        }
}

}  // namespace ssqw
