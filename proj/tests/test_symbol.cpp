#include <doctest.h>

#include <cmath>
#include <random>

#include "ssqw/symbol.hpp"

using namespace ssqw;

namespace {

// direct evaluation of the defining formula, independent of the polynomial route
complexd symbol_direct(const ShiftParams& s, const CoinSite& limit, double t) {
    const complexd z = std::polar(1.0, t);
    return complexd(0.0, 0.5) *
           ((1.0 + s.p) * std::polar(1.0, s.theta) * limit.b * z -
            (1.0 - s.p) * std::polar(1.0, -s.theta) * std::conj(limit.b) * std::conj(z) +
            2.0 * std::abs(s.q) * limit.a);
}

WalkSpec step_spec(double p, complexd q, double am, complexd bm, double ap, complexd bp) {
    return WalkSpec{make_shift(p, q),
                    CoinProfile::step(make_coin_site(am, bm), make_coin_site(ap, bp), 0)};
}

}  // namespace

TEST_CASE("build_symbol coefficients for the reference parameters") {
    const WalkSpec spec = step_spec(0.5, std::sqrt(3.0) / 2.0, 0.9, std::sqrt(0.19), 0.0, 1.0);
    const SymbolPoly sp = build_symbol(spec, Side::Plus);
    CHECK(sp.c2 == doctest::Approx(0.0).epsilon(0));  // real part
    CHECK(sp.c2.imag() == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(std::abs(sp.c1) == doctest::Approx(0.0));
    CHECK(sp.c0.imag() == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("build_symbol degenerate shift cases") {
    const complexd b_plus = std::polar(1.0, 0.7);
    SUBCASE("p = 1: only the z^2 term survives") {
        const WalkSpec spec = step_spec(1.0, 0.0, 0.0, 1.0, 0.0, b_plus);
        const SymbolPoly s = build_symbol(spec, Side::Plus);
        CHECK(std::abs(s.c2 - complexd(0.0, 1.0) * b_plus) <= 1e-15);
        CHECK(s.c1 == complexd(0.0, 0.0));
        CHECK(s.c0 == complexd(0.0, 0.0));
    }
    SUBCASE("p = -1: only the constant survives") {
        const WalkSpec spec = step_spec(-1.0, 0.0, 0.0, 1.0, 0.0, b_plus);
        const SymbolPoly s = build_symbol(spec, Side::Plus);
        CHECK(s.c2 == complexd(0.0, 0.0));
        CHECK(s.c1 == complexd(0.0, 0.0));
        CHECK(std::abs(s.c0 - complexd(0.0, -1.0) * std::conj(b_plus)) <= 1e-15);
    }
}

TEST_CASE("eval_on_circle reference values") {
    const WalkSpec spec = step_spec(0.5, std::sqrt(3.0) / 2.0, 0.9, std::sqrt(0.19), 0.0, 1.0);
    const SymbolPoly sp = build_symbol(spec, Side::Plus);
    CHECK(std::abs(eval_on_circle(sp, 0.0) - complexd(0.0, 0.5)) <= 1e-15);

    SymbolPoly constant;
    constant.c0 = complexd(0.0, -1.0);
    for (double t : {0.0, 0.3, 2.2}) {
        CHECK(std::abs(eval_on_circle(constant, t) -
                       complexd(0.0, -1.0) * std::polar(1.0, -t)) <= 1e-15);
    }

    const WalkSpec spec2 = step_spec(0.0, 1.0, 0.0, 1.0, 0.0, 1.0);
    const SymbolPoly s2 = build_symbol(spec2, Side::Plus);
    CHECK(std::abs(eval_on_circle(s2, M_PI / 2) - complexd(-1.0, 0.0)) <= 1e-14);
}

TEST_CASE("symbol matches the direct formula and obeys the triangle bound") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> ua(-1.0, 1.0), uphi(0.0, 2 * M_PI);
    for (int rep = 0; rep < 200; ++rep) {
        const double p = ua(gen);
        const ShiftParams shift =
            make_shift(p, std::polar(std::sqrt(1.0 - p * p), uphi(gen)));
        const double a = ua(gen);
        const CoinSite limit = make_coin_site(a, std::polar(std::sqrt(1.0 - a * a), uphi(gen)));
        const SymbolPoly sym = symbol_from_limit(shift, limit, Side::Plus);
        const double bound = std::abs(limit.b) + std::abs(shift.q) * std::abs(limit.a);
        for (int j = 0; j < 16; ++j) {
            const double t = uphi(gen);
            const complexd via_poly = eval_on_circle(sym, t);
            CHECK(std::abs(via_poly - symbol_direct(shift, limit, t)) <= 1e-12);
            CHECK(std::abs(via_poly) <= bound + 1e-12);
        }
    }
}

TEST_CASE("swapping the coin limits swaps the plus/minus symbols") {
    const WalkSpec spec = step_spec(0.3, std::polar(std::sqrt(1 - 0.09), 0.4), 0.9,
                                    std::polar(std::sqrt(0.19), 1.1), -0.2,
                                    std::polar(std::sqrt(0.96), 2.0));
    const WalkSpec swapped{spec.shift, CoinProfile::step(spec.coin.limit_plus(),
                                                         spec.coin.limit_minus(), 0)};
    const SymbolPoly plus = build_symbol(spec, Side::Plus);
    const SymbolPoly minus_of_swapped = build_symbol(swapped, Side::Minus);
    CHECK(plus.c0 == minus_of_swapped.c0);
    CHECK(plus.c1 == minus_of_swapped.c1);
    CHECK(plus.c2 == minus_of_swapped.c2);
}

TEST_CASE("symbol coefficients reconstruct from the producing spec") {
    const double p = 0.3, a = -0.7;
    const complexd q = std::polar(std::sqrt(1 - p * p), 1.9);
    const complexd b = std::polar(std::sqrt(1 - a * a), -0.6);
    const ShiftParams shift = make_shift(p, q);
    const CoinSite limit = make_coin_site(a, b);
    const SymbolPoly s = symbol_from_limit(shift, limit, Side::Minus);
    const double theta = std::arg(q);
    CHECK(std::abs(s.c2 - complexd(0, 0.5) * (1.0 + p) * std::polar(1.0, theta) * b) <= 1e-12);
    CHECK(std::abs(s.c1 - complexd(0, 1.0) * std::abs(q) * a) <= 1e-12);
    CHECK(std::abs(s.c0 + complexd(0, 0.5) * (1.0 - p) * std::polar(1.0, -theta) *
                              std::conj(b)) <= 1e-12);
}
