#include "ssqw/winding.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ssqw/errors.hpp"

namespace ssqw {

std::vector<complexd> roots_closed_form(const SymbolPoly& sym) {
    const complexd c0 = sym.c0, c1 = sym.c1, c2 = sym.c2;
    if (c2 != complexd(0.0, 0.0)) {
        complexd disc = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
        // pick the sign aligned with c1 so |c1 + disc| never cancels
        if (std::real(std::conj(c1) * disc) < 0.0) disc = -disc;
        const complexd qq = -0.5 * (c1 + disc);
        if (qq == complexd(0.0, 0.0)) return {complexd(0.0, 0.0), complexd(0.0, 0.0)};
        return {qq / c2, c0 / qq};
    }
    if (c1 != complexd(0.0, 0.0)) return {-c0 / c1};
    if (c0 != complexd(0.0, 0.0)) return {};
    throw ZeroPolynomialError("z*F is identically zero (reachable only at |p| = |a| = 1)");
}

WindingResult winding_by_roots(const SymbolPoly& sym, double tol_circle) {
    if (!(tol_circle > 0.0)) throw std::invalid_argument("tol_circle must be positive");
    const auto roots = roots_closed_form(sym);
    WindingResult out;
    out.fredholm = true;
    out.margin = std::numeric_limits<double>::infinity();
    int inside = 0;
    for (const complexd& z : roots) {
        const double m = std::abs(z);
        out.root_moduli.push_back(m);
        out.margin = std::min(out.margin, std::abs(m - 1.0));
        if (m >= 1.0 - tol_circle && m <= 1.0 + tol_circle) out.fredholm = false;
        if (m < 1.0) ++inside;
    }
    out.wn_zf = inside;
    out.wn_f = inside - 1;
    return out;
}

ArgumentWinding winding_by_argument(const SymbolPoly& sym, int samples) {
    if (samples < 16) throw std::invalid_argument("winding_by_argument needs samples >= 16");
    constexpr double kZeroTol = 1e-12;
    const double dt = 2.0 * std::numbers::pi / samples;

    auto poly_at = [&](int j) {
        const complexd z = std::polar(1.0, dt * j);
        return (sym.c2 * z + sym.c1) * z + sym.c0;
    };

    complexd prev = poly_at(0);
    if (std::abs(prev) < kZeroTol)
        throw CircleZeroError("symbol vanishes at sampled circle point t=0");
    double total = 0.0;
    for (int j = 1; j <= samples; ++j) {
        const complexd cur = poly_at(j % samples);
        if (std::abs(cur) < kZeroTol) {
            std::ostringstream os;
            os << "symbol vanishes at sampled circle point t=" << dt * (j % samples);
            throw CircleZeroError(os.str());
        }
        const double step = std::arg(cur * std::conj(prev));  // principal increment
        if (std::abs(step) > 0.5 * std::numbers::pi) {
            std::ostringstream os;
            os << "phase step " << step << " at sample " << j
               << " exceeds pi/2; increase samples";
            throw UnwrapError(os.str());
        }
        total += step;
        prev = cur;
    }
    ArgumentWinding out;
    out.raw = total / (2.0 * std::numbers::pi);
    out.wn = static_cast<int>(std::llround(out.raw));
    return out;
}

int winding_table_case(const ShiftParams& shift, const CoinSite& limit) {
    const double p = shift.p;
    const double abs_a = std::abs(limit.a);
    if (std::abs(std::abs(p) - abs_a) < 1e-12) {
        std::ostringstream os;
        os << "|p| = |a| = " << abs_a << ": not Fredholm, case table undefined";
        throw DegenerateError(os.str());
    }
    if (abs_a < std::abs(p)) return p > 0.0 ? 2 : 0;
    return 1;
}

}  // namespace ssqw
