#ifndef SSQW_SYMBOL_HPP
#define SSQW_SYMBOL_HPP

#include "ssqw/model.hpp"

namespace ssqw {

enum class Side { Plus, Minus };

// Coefficients of P(z) = c2 z^2 + c1 z + c0 where P(z) = z * F(z) on the unit circle.
// F is the boundary symbol of the supercharge band: storing z*F keeps root counting exact.
struct SymbolPoly {
    complexd c0{0.0, 0.0};
    complexd c1{0.0, 0.0};
    complexd c2{0.0, 0.0};
    Side side = Side::Plus;
};

// Band coefficients of the supercharge at one row. These helpers are the single source of
// truth shared by the symbol, the banded assembly and the transfer recurrence, so that a
// constant-coin row reproduces the symbol coefficients bit for bit.
complexd band_super(const ShiftParams& shift, complexd b_next);        // coeff of psi(x+1)
complexd band_diag(const ShiftParams& shift, double a_here, double a_next);
complexd band_sub(const ShiftParams& shift, complexd b_here);          // coeff of psi(x-1)

// Symbol of a homogeneous region with coin value `limit` (side is a label only).
SymbolPoly symbol_from_limit(const ShiftParams& shift, const CoinSite& limit, Side side);

SymbolPoly build_symbol(const WalkSpec& spec, Side side);

// F(e^{it}) = P(e^{it}) e^{-it}.
complexd eval_on_circle(const SymbolPoly& sym, double t);

}  // namespace ssqw

#endif
