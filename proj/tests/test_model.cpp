#include <doctest.h>

#include <cmath>
#include <random>

#include "ssqw/errors.hpp"
#include "ssqw/model.hpp"

using namespace ssqw;

TEST_CASE("make_shift sets theta per the q rule") {
    CHECK(make_shift(1.0, 0.0).theta == 0.0);
    CHECK(make_shift(0.5, std::sqrt(3.0) / 2.0).theta == 0.0);
    CHECK(make_shift(0.0, complexd(0.0, 1.0)).theta == doctest::Approx(M_PI / 2).epsilon(1e-15));
}

TEST_CASE("make_shift renormalizes within the acceptance band and rejects beyond") {
    const ShiftParams s = make_shift(0.6 + 3e-10, 0.8);
    CHECK(s.p * s.p + std::norm(s.q) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(make_shift(0.6, 0.9), NormalizationError);
    CHECK_THROWS_AS(make_coin_site(1.0, 0.1), NormalizationError);
}

TEST_CASE("step profile evaluation is piecewise") {
    const CoinSite minus = make_coin_site(1.0, 0.0);
    const CoinSite plus = make_coin_site(0.0, 1.0);
    const CoinProfile profile = CoinProfile::step(minus, plus, 0);
    CHECK(profile.at(-5).a == 1.0);
    CHECK(profile.at(-5).b == complexd(0.0, 0.0));
    CHECK(profile.at(0).a == 0.0);
    CHECK(profile.at(0).b == complexd(1.0, 0.0));
    CHECK(profile.at(7).a == 0.0);
}

TEST_CASE("multi-step profile uses breakpoint values between cuts") {
    const CoinSite minus = make_coin_site(0.8, 0.6);
    const CoinSite mid = make_coin_site(0.0, complexd(0.0, 1.0));
    const CoinSite plus = make_coin_site(-0.6, 0.8);
    const CoinProfile profile =
        CoinProfile::multi_step(minus, plus, {Breakpoint{-3, mid}, Breakpoint{2, plus}});
    CHECK(profile.at(-4).a == minus.a);
    CHECK(profile.at(-3).a == mid.a);
    CHECK(profile.at(1).a == mid.a);
    CHECK(profile.at(2).a == plus.a);
    CHECK_THROWS_AS(CoinProfile::multi_step(minus, plus, {Breakpoint{2, mid}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        CoinProfile::multi_step(minus, plus, {Breakpoint{3, plus}, Breakpoint{3, plus}}),
        std::invalid_argument);
}

TEST_CASE("tanh profile midpoint and limits") {
    const CoinProfile profile = CoinProfile::tanh_profile(-0.8, 0.8, 4.0, 0.0);
    const CoinSite mid = profile.at(0);
    CHECK(mid.a == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(mid.b.real() == doctest::Approx(1.0).epsilon(1e-15));
    // converges to the limits
    CHECK(profile.at(200).a == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(profile.at(-200).a == doctest::Approx(-0.8).epsilon(1e-12));
}

TEST_CASE("coin sites stay on the unit sphere for every profile kind") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> ua(-1.0, 1.0), uphi(0.0, 2 * M_PI);
    for (int rep = 0; rep < 50; ++rep) {
        const double am = ua(gen), ap = ua(gen);
        auto site = [&](double a) {
            return make_coin_site(a, std::polar(std::sqrt(1.0 - a * a), uphi(gen)));
        };
        const CoinProfile step = CoinProfile::step(site(am), site(ap), 0);
        const CoinProfile tanh = CoinProfile::tanh_profile(am, ap, 1.0 + 7.0 * ua(gen) * ua(gen),
                                                           uphi(gen));
        for (int x = -30; x <= 30; ++x) {
            for (const CoinProfile* p : {&step, &tanh}) {
                const CoinSite c = p->at(x);
                CHECK(c.a * c.a + std::norm(c.b) == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("flatten produces the two-limit step profile and is idempotent") {
    const CoinSite minus = make_coin_site(-0.8, 0.6);
    const CoinSite plus = make_coin_site(0.8, 0.6);

    SUBCASE("step profile at 0 is unchanged") {
        const CoinProfile p = CoinProfile::step(minus, plus, 0);
        const CoinProfile f = flatten(p, 0);
        for (int x = -10; x <= 10; ++x) {
            CHECK(f.at(x).a == p.at(x).a);
            CHECK(f.at(x).b == p.at(x).b);
        }
    }

    SUBCASE("tanh profile flattens to its limits") {
        const CoinProfile p = CoinProfile::tanh_profile(-0.8, 0.8, 3.0);
        const CoinProfile f = flatten(p, 0);
        CHECK(f.kind() == ProfileKind::Step);
        CHECK(f.at(-1).a == doctest::Approx(-0.8));
        CHECK(f.at(0).a == doctest::Approx(0.8));
    }

    SUBCASE("multi-step profile keeps only the limits") {
        const CoinSite mid = make_coin_site(0.0, 1.0);
        const CoinProfile p =
            CoinProfile::multi_step(minus, plus, {Breakpoint{-3, mid}, Breakpoint{2, plus}});
        const CoinProfile f = flatten(p, 0);
        CHECK(f.at(-1).a == minus.a);
        CHECK(f.at(0).a == plus.a);
    }

    SUBCASE("idempotence, sitewise") {
        const CoinProfile p = CoinProfile::tanh_profile(-0.6, 0.9, 5.0, 0.3);
        const CoinProfile once = flatten(p, 4);
        const CoinProfile twice = flatten(once, 4);
        for (int x = -12; x <= 12; ++x) {
            CHECK(once.at(x).a == twice.at(x).a);
            CHECK(once.at(x).b == twice.at(x).b);
        }
    }
}

TEST_CASE("tanh flattening error decays exponentially") {
    const double width = 4.0;
    const CoinProfile p = CoinProfile::tanh_profile(-0.8, 0.8, width, 0.0);
    const CoinProfile f = flatten(p, 0);
    for (int x = -40; x <= 40; ++x) {
        if (std::abs(x) < 1) continue;
        const double err = std::abs(p.at(x).a - f.at(x).a);
        CHECK(err <= 2.0 * std::exp(-2.0 * std::abs(x) / width) + 1e-15);
    }
}
