#include "ssqw/symbol.hpp"

#include <cmath>

namespace ssqw {

// The fixed association below keeps constant-region band entries and symbol coefficients
// bit-identical, which the finite-rank support checks rely on.

complexd band_super(const ShiftParams& shift, complexd b_next) {
    return complexd(0.0, 0.5) * (1.0 + shift.p) * std::polar(1.0, shift.theta) * b_next;
}

complexd band_diag(const ShiftParams& shift, double a_here, double a_next) {
    return complexd(0.0, 0.5) * std::abs(shift.q) * (a_next + a_here);
}

complexd band_sub(const ShiftParams& shift, complexd b_here) {
    return -(complexd(0.0, 0.5) * (1.0 - shift.p) * std::polar(1.0, -shift.theta) *
             std::conj(b_here));
}

SymbolPoly symbol_from_limit(const ShiftParams& shift, const CoinSite& limit, Side side) {
    SymbolPoly sym;
    sym.c2 = band_super(shift, limit.b);
    sym.c1 = band_diag(shift, limit.a, limit.a);
    sym.c0 = band_sub(shift, limit.b);
    sym.side = side;
    return sym;
}

SymbolPoly build_symbol(const WalkSpec& spec, Side side) {
    const CoinSite& limit =
        side == Side::Plus ? spec.coin.limit_plus() : spec.coin.limit_minus();
    return symbol_from_limit(spec.shift, limit, side);
}

complexd eval_on_circle(const SymbolPoly& sym, double t) {
    const complexd z = std::polar(1.0, t);
    const complexd p = (sym.c2 * z + sym.c1) * z + sym.c0;
    return p * std::conj(z);
}

}  // namespace ssqw
