#ifndef SSQW_WINDING_HPP
#define SSQW_WINDING_HPP

#include <vector>

#include "ssqw/symbol.hpp"

namespace ssqw {

struct WindingResult {
    int wn_f = 0;     // winding of F
    int wn_zf = 0;    // winding of z*F = wn_f + 1 (when fredholm)
    bool fredholm = false;
    std::vector<double> root_moduli;
    double margin = 0.0;  // min over roots of | |z|-1 |; +inf when no roots
};

// All roots of c2 z^2 + c1 z + c0, via the cancellation-safe quadratic (larger-magnitude
// root first, the other from the product c0/c2). Throws ZeroPolynomialError when all three
// coefficients vanish.
std::vector<complexd> roots_closed_form(const SymbolPoly& sym);

// Winding by root counting: wn_zf = #roots in the open unit disc; fredholm iff no root
// modulus falls in [1 - tol_circle, 1 + tol_circle].
WindingResult winding_by_roots(const SymbolPoly& sym, double tol_circle = 1e-9);

struct ArgumentWinding {
    double raw = 0.0;  // (1/2pi) * sum of principal phase increments of P(e^{it})
    int wn = 0;        // nearest integer; counts winding of z*F
};

// Argument-principle cross-check on `samples` uniform circle points. Throws CircleZeroError
// if |P| < 1e-12 at a sample, UnwrapError if a single phase step exceeds pi/2.
ArgumentWinding winding_by_argument(const SymbolPoly& sym, int samples = 4096);

// Closed-form case table for wn(z*F) from (p, a) alone:
//   2 if |a| < p,  1 if |p| < |a| (including |a| = 1),  0 if |a| < -p.
// Throws DegenerateError when |p| = |a| within 1e-12.
int winding_table_case(const ShiftParams& shift, const CoinSite& limit);

}  // namespace ssqw

#endif
