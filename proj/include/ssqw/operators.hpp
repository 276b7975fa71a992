#ifndef SSQW_OPERATORS_HPP
#define SSQW_OPERATORS_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "ssqw/model.hpp"
#include "ssqw/symbol.hpp"

namespace ssqw {

enum class Boundary { Open, Periodic };

// Inclusive site range [lo, hi]; finite section of the lattice. hi - lo >= 8.
struct Window {
    int lo = 0;
    int hi = 0;
    Boundary boundary = Boundary::Open;

    int sites() const { return hi - lo + 1; }
};

enum class OperatorKind {
    Gamma,
    Coin,
    Evolution,
    Supercharge,
    QPlus,
    PiecewiseA,
    PiecewiseB,
    Toeplitz,
};

// Dense realization of a finite section. Two-component operators (Gamma, Coin, Evolution,
// Supercharge) use the site-major layout: index = 2*(x - lo) + component. Scalar operators
// (QPlus, piecewise, Toeplitz) use index = x - lo.
struct BandedMatrix {
    Window window;
    Eigen::MatrixXcd block;
    int bandwidth = 1;  // in sites; validation only, storage is dense
    OperatorKind kind = OperatorKind::Gamma;
};

BandedMatrix assemble_gamma(const ShiftParams& shift, const Window& w);
BandedMatrix assemble_coin(const CoinProfile& coin, const Window& w);

// U = Gamma * Coin and Q = (U - U*) / 2i.
std::pair<BandedMatrix, BandedMatrix> assemble_evolution_and_supercharge(const WalkSpec& spec,
                                                                         const Window& w);

// Scalar band of the supercharge: row x has super = band_super(b(x+1)),
// diag = band_diag(a(x), a(x+1)), sub = band_sub(b(x)).
BandedMatrix assemble_q_plus(const WalkSpec& spec, const Window& w);

// Trigonometric polynomial h(z) = sum_{m} coeff(m) z^m on the unit circle.
class TrigPoly {
public:
    TrigPoly() : min_m_(0), coeffs_{complexd(0.0, 0.0)} {}
    TrigPoly(int min_degree, std::vector<complexd> coeffs);

    static TrigPoly constant(complexd c);
    static TrigPoly monomial(int m, complexd c = complexd(1.0, 0.0));
    // F(z) = c2 z + c1 + c0 z^{-1} from the stored z*F coefficients.
    static TrigPoly from_symbol(const SymbolPoly& sym);

    complexd coeff(int m) const;
    int min_degree() const { return min_m_; }
    int max_degree() const { return min_m_ + static_cast<int>(coeffs_.size()) - 1; }
    int band() const;  // M = max(|min_degree|, |max_degree|) over nonzero coefficients

    complexd eval(complexd z) const;  // z on the unit circle
    TrigPoly reflected() const;       // z -> zbar, i.e. coeff(m) -> coeff(-m)
    TrigPoly product(const TrigPoly& other) const;

private:
    int min_m_;
    std::vector<complexd> coeffs_;
};

enum class PiecewiseVariant { A, B };

// Column x is g(L)|x> for x >= 0 and f(L)|x> for x <= -1, with L|x> = |x-1>.
// Variant B projects each column back onto its own half-line. Window must contain
// [-M-1, M+1] (throws WindowTooSmallError) and be open.
BandedMatrix assemble_piecewise(const TrigPoly& f, const TrigPoly& g, const Window& w,
                                PiecewiseVariant variant);

// n x n compression of multiplication by h to span{z^0..z^{n-1}}: entry (j,k) = hat h(j-k).
// Requires n > 2*band(h).
BandedMatrix assemble_toeplitz(const TrigPoly& h, int n);

// Permutes a variant-B matrix to the Hardy-space basis (x >= 0 -> first block position x,
// x <= -1 -> second block position -x-1) and returns the two diagonal blocks
// (T_{g(zbar)}, T_f). Throws NonBlockDiagonalError if any off-diagonal entry exceeds 1e-12.
std::pair<BandedMatrix, BandedMatrix> hardy_conjugate(const BandedMatrix& mat);

// CSV dump of nonzero entries: "row,col,re,im" lines, 17 significant digits.
void dump_nonzero_csv(const BandedMatrix& mat, std::ostream& out);

}  // namespace ssqw

#endif
