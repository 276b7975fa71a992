#include "ssqw/verify.hpp"

#include <Eigen/SVD>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "ssqw/analysis.hpp"
#include "ssqw/detail/parallel.hpp"
#include "ssqw/errors.hpp"
#include "ssqw/scenario.hpp"
#include "ssqw/spectral.hpp"
#include "ssqw/symbol.hpp"
#include "ssqw/transfer.hpp"
#include "ssqw/winding.hpp"

namespace ssqw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform deviates built from the raw mt19937_64 stream so output is identical across
// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

CoinSite draw_site(Rng& rng, double bound) {
    const double a = rng.uniform(-bound, bound);
    return make_coin_site(a, std::polar(std::sqrt(std::max(0.0, 1.0 - a * a)),
                                        rng.uniform(0.0, kTwoPi)));
}

ShiftParams draw_shift(Rng& rng, double bound) {
    const double p = rng.uniform(-bound, bound);
    return make_shift(p, std::polar(std::sqrt(std::max(0.0, 1.0 - p * p)),
                                    rng.uniform(0.0, kTwoPi)));
}

struct DrawnPair {
    ShiftParams shift;
    CoinSite limit_minus, limit_plus;
};

// Rejection sampling away from |p| = |a| and from circle-adjacent symbol roots.
DrawnPair draw_fredholm_pair(Rng& rng, double param_margin, double root_margin,
                             double bound = 0.98) {
    for (int tries = 0; tries < 200000; ++tries) {
        const ShiftParams shift = draw_shift(rng, bound);
        const CoinSite lm = draw_site(rng, bound);
        const CoinSite lp = draw_site(rng, bound);
        const double p_abs = std::abs(shift.p);
        if (std::abs(p_abs - std::abs(lm.a)) < param_margin) continue;
        if (std::abs(p_abs - std::abs(lp.a)) < param_margin) continue;
        const WindingResult wm = winding_by_roots(symbol_from_limit(shift, lm, Side::Minus));
        const WindingResult wp = winding_by_roots(symbol_from_limit(shift, lp, Side::Plus));
        if (wm.margin < root_margin || wp.margin < root_margin) continue;
        return DrawnPair{shift, lm, lp};
    }
    throw std::runtime_error("fredholm sampler exhausted");
}

std::string failure_case(const std::string& what, const WalkSpec& spec) {
    return what + "\nscenario: " + scenario_to_json(spec).dump();
}

struct SuiteAccumulator {
    int total = 0;
    int failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& detail) {
        ++total;
        if (ok) return;
        if (failures == 0) first_failure = detail;
        ++failures;
    }
};

SuiteResult finish_suite(std::string name, const SuiteAccumulator& acc,
                         std::chrono::steady_clock::time_point t0) {
    SuiteResult r;
    r.name = std::move(name);
    r.total = acc.total;
    r.failures = acc.failures;
    r.first_failure = acc.first_failure;
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// 1. case formula against winding numbers on the fixed parameter grid.
SuiteResult suite_formula_grid() {
    const auto t0 = std::chrono::steady_clock::now();
    const double ps[] = {-0.9, -0.5, -0.2, 0.0, 0.3, 0.8};
    const double as[] = {-0.95, -0.6, -0.3, 0.0, 0.4, 0.7, 0.9};
    const double phases[] = {0.0, std::numbers::pi / 3.0};
    SuiteAccumulator acc;
    for (double p : ps)
        for (double am : as)
            for (double ap : as)
                for (double phm : phases)
                    for (double php : phases) {
                        if (std::abs(std::abs(p) - std::abs(am)) < 0.02) continue;
                        if (std::abs(std::abs(p) - std::abs(ap)) < 0.02) continue;
                        const ShiftParams shift =
                            make_shift(p, std::sqrt(std::max(0.0, 1.0 - p * p)));
                        const CoinSite lm = make_coin_site(
                            am, std::polar(std::sqrt(std::max(0.0, 1.0 - am * am)), phm));
                        const CoinSite lp = make_coin_site(
                            ap, std::polar(std::sqrt(std::max(0.0, 1.0 - ap * ap)), php));
                        const FormulaResult fr = formula_index(shift, lm, lp);
                        const WindingResult wp =
                            winding_by_roots(symbol_from_limit(shift, lp, Side::Plus));
                        const WindingResult wm =
                            winding_by_roots(symbol_from_limit(shift, lm, Side::Minus));
                        const bool ok = fr.fredholm && wp.fredholm && wm.fredholm &&
                                        wp.wn_zf - wm.wn_zf == fr.index;
                        std::ostringstream detail;
                        detail << "grid point p=" << p << " a-=" << am << " a+=" << ap
                               << ": formula " << fr.index << " winding "
                               << wp.wn_zf - wm.wn_zf;
                        acc.record(ok, detail.str());
                    }
    return finish_suite("case formula vs winding numbers (fixed grid)", acc, t0);
}

// 2. winding by roots == winding by argument principle == case table.
SuiteResult suite_winding_agreement(std::uint64_t seed, int draws) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed ^ 0x5eedf00d01ULL);
    SuiteAccumulator acc;
    for (int i = 0; i < draws; ++i) {
        const DrawnPair d = draw_fredholm_pair(rng, 0.02, 0.01);
        const WalkSpec spec{d.shift, CoinProfile::step(d.limit_minus, d.limit_plus, 0)};
        bool ok = true;
        std::ostringstream detail;
        for (Side side : {Side::Plus, Side::Minus}) {
            const CoinSite& limit = side == Side::Plus ? d.limit_plus : d.limit_minus;
            const SymbolPoly sym = symbol_from_limit(d.shift, limit, side);
            const WindingResult wr = winding_by_roots(sym);
            try {
                const ArgumentWinding aw = winding_by_argument(sym, 4096);
                const int table = winding_table_case(d.shift, limit);
                if (wr.wn_zf != aw.wn || std::abs(aw.raw - aw.wn) >= 1e-4 || table != wr.wn_zf) {
                    ok = false;
                    detail << "side " << (side == Side::Plus ? '+' : '-') << ": roots "
                           << wr.wn_zf << " argument " << aw.wn << " (raw " << aw.raw
                           << ") table " << table;
                }
            } catch (const std::exception& e) {
                ok = false;
                detail << "winding error: " << e.what();
            }
        }
        acc.record(ok, failure_case(detail.str(), spec));
    }
    return finish_suite("winding by roots vs argument principle vs case table", acc, t0);
}

// 3. closed-form quadratic roots against the textbook root expressions.
SuiteResult suite_root_fidelity(std::uint64_t seed, int draws) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed ^ 0x5eedf00d02ULL);
    SuiteAccumulator acc;
    auto rel = [](complexd u, complexd v) {
        return std::abs(u - v) / std::max(std::abs(v), 1e-300);
    };
    for (int i = 0; i < draws; ++i) {
        const ShiftParams shift = draw_shift(rng, 0.99);
        const CoinSite limit = draw_site(rng, 0.99);
        const SymbolPoly sym = symbol_from_limit(shift, limit, Side::Plus);
        const auto roots = roots_closed_form(sym);
        const complexd denom =
            (1.0 + shift.p) * std::polar(1.0, shift.theta) * limit.b;
        const complexd z1 = std::abs(shift.q) * (1.0 - limit.a) / denom;
        const complexd z2 = -std::abs(shift.q) * (1.0 + limit.a) / denom;
        bool ok = roots.size() == 2;
        if (ok) {
            const double direct = std::max(rel(roots[0], z1), rel(roots[1], z2));
            const double swapped = std::max(rel(roots[0], z2), rel(roots[1], z1));
            ok = std::min(direct, swapped) <= 1e-9;
        }
        std::ostringstream detail;
        detail << "p=" << shift.p << " a=" << limit.a << " roots mismatch";
        acc.record(ok, detail.str());
    }
    return finish_suite("closed-form roots vs textbook root expressions", acc, t0);
}

// 4. transfer-matrix kernel counts against winding differences.
SuiteResult suite_transfer(std::uint64_t seed, int singles, int multis) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed ^ 0x5eedf00d04ULL);
    SuiteAccumulator acc;
    auto expected_index = [](const WalkSpec& spec) {
        const WindingResult wp = winding_by_roots(build_symbol(spec, Side::Plus));
        const WindingResult wm = winding_by_roots(build_symbol(spec, Side::Minus));
        return wp.wn_zf - wm.wn_zf;
    };
    for (int i = 0; i < singles; ++i) {
        const DrawnPair d = draw_fredholm_pair(rng, 0.02, 0.02);
        const int cut = rng.uniform_int(-5, 5);
        const WalkSpec spec{d.shift, CoinProfile::step(d.limit_minus, d.limit_plus, cut)};
        std::ostringstream detail;
        bool ok = false;
        try {
            const KernelCount kc = kernel_by_matching(spec, 1e-8);
            ok = kc.witten == expected_index(spec) && kc.witten == kc.dim_ker - kc.dim_coker;
            detail << "single breakpoint: transfer " << kc.witten << " (ker " << kc.dim_ker
                   << ", coker " << kc.dim_coker << ") expected " << expected_index(spec);
        } catch (const std::exception& e) {
            detail << "transfer error: " << e.what();
        }
        acc.record(ok, failure_case(detail.str(), spec));
    }
    for (int i = 0; i < multis; ++i) {
        const DrawnPair d = draw_fredholm_pair(rng, 0.02, 0.02);
        const int k = rng.uniform_int(2, 3);
        std::set<int> xs;
        while (static_cast<int>(xs.size()) < k) xs.insert(rng.uniform_int(-8, 8));
        std::vector<Breakpoint> bps;
        for (int x : xs) bps.push_back(Breakpoint{x, CoinSite{}});
        for (int j = 0; j + 1 < k; ++j) {
            if (rng.uniform() < 0.15) {
                // degenerate middle band: |a| = 1, b = 0
                bps[j].value = CoinSite{rng.uniform() < 0.5 ? 1.0 : -1.0, complexd(0.0, 0.0)};
            } else {
                bps[j].value = draw_site(rng, 0.98);
            }
        }
        bps.back().value = d.limit_plus;
        const WalkSpec spec{d.shift,
                            CoinProfile::multi_step(d.limit_minus, d.limit_plus, bps)};
        std::ostringstream detail;
        bool ok = false;
        try {
            const KernelCount kc = kernel_by_matching(spec, 1e-8);
            ok = kc.witten == expected_index(spec);
            detail << "multi breakpoint: transfer " << kc.witten << " expected "
                   << expected_index(spec);
        } catch (const std::exception& e) {
            detail << "transfer error: " << e.what();
        }
        acc.record(ok, failure_case(detail.str(), spec));
    }
    return finish_suite("transfer-matrix kernel count vs winding difference", acc, t0);
}

double min_circle_modulus(const SymbolPoly& sym, int samples = 512) {
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j < samples; ++j)
        m = std::min(m, std::abs(eval_on_circle(sym, kTwoPi * j / samples)));
    return m;
}

// Seeded spec family for the spectral and edge-state suites: strong decay margins so
// interface modes resolve at window [-150, 150] / eps 1e-6.
std::vector<WalkSpec> make_spectral_specs(std::uint64_t seed, int n) {
    Rng rng(seed ^ 0x5eedf00d05ULL);
    const int target_minus = n / 3;
    const int target_plus = n / 3;
    const int target_zero = n - target_minus - target_plus;
    int got_minus = 0, got_plus = 0, got_zero = 0;
    std::vector<WalkSpec> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < n) {
        if (++attempts > 500000) throw std::runtime_error("spectral spec sampler exhausted");
        const bool want_tanh = out.size() % 3 == 2;
        const double p = rng.uniform(-0.9, 0.9);
        const double am = rng.uniform(-0.95, 0.95);
        const double ap = rng.uniform(-0.95, 0.95);
        if (std::abs(std::abs(p) - std::abs(am)) < 0.05) continue;
        if (std::abs(std::abs(p) - std::abs(ap)) < 0.05) continue;
        const ShiftParams shift =
            make_shift(p, std::polar(std::sqrt(std::max(0.0, 1.0 - p * p)),
                                     rng.uniform(0.0, kTwoPi)));
        WalkSpec spec{shift, CoinProfile::step(CoinSite{}, CoinSite{}, 0)};
        if (want_tanh) {
            const double width = rng.uniform(2.0, 8.0);
            const double phi = rng.uniform(0.0, kTwoPi);
            spec.coin = CoinProfile::tanh_profile(am, ap, width, phi);
        } else {
            const CoinSite lm = make_coin_site(
                am, std::polar(std::sqrt(std::max(0.0, 1.0 - am * am)),
                               rng.uniform(0.0, kTwoPi)));
            const CoinSite lp = make_coin_site(
                ap, std::polar(std::sqrt(std::max(0.0, 1.0 - ap * ap)),
                               rng.uniform(0.0, kTwoPi)));
            spec.coin = CoinProfile::step(lm, lp, rng.uniform_int(-3, 3));
        }
        const SymbolPoly sp = build_symbol(spec, Side::Plus);
        const SymbolPoly sm = build_symbol(spec, Side::Minus);
        const WindingResult wp = winding_by_roots(sp);
        const WindingResult wm = winding_by_roots(sm);
        bool margins_ok = wp.fredholm && wm.fredholm;
        for (const WindingResult* w : {&wp, &wm})
            for (double m : w->root_moduli)
                if (m > 0.85 && m < 1.0 / 0.85) margins_ok = false;
        if (!margins_ok) continue;
        if (min_circle_modulus(sp) < 0.05 || min_circle_modulus(sm) < 0.05) continue;
        const int wit = wp.wn_zf - wm.wn_zf;
        if (wit == -1 && got_minus < target_minus) {
            ++got_minus;
        } else if (wit == 1 && got_plus < target_plus) {
            ++got_plus;
        } else if (wit == 0 && got_zero < target_zero) {
            ++got_zero;
        } else {
            continue;
        }
        out.push_back(spec);
    }
    return out;
}

// 5. chirality-weighted spectral count against the winding index.
SuiteResult suite_spectral(const std::vector<WalkSpec>& specs, unsigned threads) {
    const auto t0 = std::chrono::steady_clock::now();
    const Window window{-150, 150, Boundary::Open};
    const int n = static_cast<int>(specs.size());
    std::vector<std::string> details(n);
    std::vector<char> oks(n, 0);
    detail::parallel_for(n, threads, [&](int i) {
        const WalkSpec& spec = specs[i];
        const WindingResult wp = winding_by_roots(build_symbol(spec, Side::Plus));
        const WindingResult wm = winding_by_roots(build_symbol(spec, Side::Minus));
        const int expected = wp.wn_zf - wm.wn_zf;
        std::ostringstream detail;
        try {
            const SpectralEstimate est = index_by_chirality(spec, window);
            oks[i] = est.estimated_index == expected && est.residual < 0.05;
            detail << "spectral " << est.estimated_index << " (residual " << est.residual
                   << ") expected " << expected;
        } catch (const std::exception& e) {
            detail << "spectral error: " << e.what();
        }
        details[i] = failure_case(detail.str(), spec);
    });
    SuiteAccumulator acc;
    for (int i = 0; i < n; ++i) acc.record(oks[i] != 0, details[i]);
    return finish_suite("chirality-weighted spectral count vs winding index", acc, t0);
}

// 6. Toeplitz finite-section law: |k| near-zero singular values at n = 400.
SuiteResult suite_toeplitz(std::uint64_t seed, int symbols, unsigned threads) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed ^ 0x5eedf00d06ULL);
    const int windings[] = {-2, -1, 0, 1, 2};
    struct Case {
        TrigPoly h;
        int k;
    };
    std::vector<Case> cases;
    for (int i = 0; i < symbols; ++i) {
        const int k = windings[i % 5];
        TrigPoly h = TrigPoly::constant(std::polar(rng.uniform(0.5, 2.0),
                                                   rng.uniform(0.0, kTwoPi)));
        const int inside = k >= 0 ? k : k + 2;
        const int outside = 2 - inside;
        for (int j = 0; j < inside; ++j) {
            const complexd r = std::polar(rng.uniform(0.2, 0.85), rng.uniform(0.0, kTwoPi));
            h = h.product(TrigPoly(0, {-r, complexd(1.0, 0.0)}));
        }
        for (int j = 0; j < outside; ++j) {
            const complexd s = std::polar(rng.uniform(1.15, 3.0), rng.uniform(0.0, kTwoPi));
            h = h.product(TrigPoly(0, {complexd(1.0, 0.0), -1.0 / s}));
        }
        if (k < 0) h = h.product(TrigPoly::monomial(-2));
        cases.push_back(Case{h, k});
    }
    const int n = static_cast<int>(cases.size());
    std::vector<std::string> details(n);
    std::vector<char> oks(n, 0);
    detail::parallel_for(n, threads, [&](int i) {
        const int k = cases[i].k;
        const int ak = std::abs(k);
        const BandedMatrix t = assemble_toeplitz(cases[i].h, 400);
        const std::vector<double> sv = near_kernel_svd(t, ak + 1);
        bool ok = true;
        for (int j = 0; j < ak; ++j) ok = ok && sv[j] < 1e-6;
        ok = ok && sv[ak] >= 1e-6;
        if (ak >= 1) ok = ok && sv[ak] / std::max(sv[ak - 1], 1e-300) >= 1e3;
        std::ostringstream detail;
        detail << "winding " << k << ": smallest singular values";
        for (double s : sv) detail << ' ' << s;
        details[i] = detail.str();
        oks[i] = ok;
    });
    SuiteAccumulator acc;
    for (int i = 0; i < n; ++i) acc.record(oks[i] != 0, details[i]);
    return finish_suite("Toeplitz finite-section law at n=400", acc, t0);
}

// 7. protected edge eigenstates of U at +-1 for every nonzero-index spectral spec.
SuiteResult suite_edge_states(const std::vector<WalkSpec>& specs, unsigned threads) {
    const auto t0 = std::chrono::steady_clock::now();
    const Window window{-150, 150, Boundary::Open};
    std::vector<const WalkSpec*> nonzero;
    for (const WalkSpec& spec : specs) {
        const WindingResult wp = winding_by_roots(build_symbol(spec, Side::Plus));
        const WindingResult wm = winding_by_roots(build_symbol(spec, Side::Minus));
        if (wp.wn_zf != wm.wn_zf) nonzero.push_back(&spec);
    }
    const int n = static_cast<int>(nonzero.size());
    std::vector<std::string> details(n);
    std::vector<char> oks(n, 0);
    detail::parallel_for(n, threads, [&](int i) {
        const WalkSpec& spec = *nonzero[i];
        std::ostringstream detail;
        try {
            const auto modes = edge_state_detector(spec, window, 1e-6);
            bool ok = false;
            for (const EdgeMode& m : modes) ok = ok || m.localization > 0.9;
            oks[i] = ok;
            detail << "edge modes within 1e-6 of +-1: " << modes.size()
                   << (modes.empty() ? "" : ", best localization ")
                   << (modes.empty() ? 0.0 : modes.front().localization);
        } catch (const std::exception& e) {
            detail << "edge detector error: " << e.what();
        }
        details[i] = failure_case(detail.str(), spec);
    });
    SuiteAccumulator acc;
    for (int i = 0; i < n; ++i) acc.record(oks[i] != 0, details[i]);
    return finish_suite("edge eigenstates at +-1 for nonzero index", acc, t0);
}

// 8. exact finite-rank support: A - B columns and the band-vs-piecewise difference.
SuiteResult suite_finite_rank(std::uint64_t seed, int draws) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed ^ 0x5eedf00d08ULL);
    SuiteAccumulator acc;
    const Window w{-12, 12, Boundary::Open};
    for (int i = 0; i < draws; ++i) {
        const int m_band = rng.uniform_int(1, 3);
        auto random_poly = [&] {
            std::vector<complexd> c;
            for (int m = -m_band; m <= m_band; ++m)
                c.push_back(complexd(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)));
            return TrigPoly(-m_band, std::move(c));
        };
        const TrigPoly f = random_poly();
        const TrigPoly g = random_poly();
        const int m_eff = std::max(f.band(), g.band());
        const BandedMatrix a = assemble_piecewise(f, g, w, PiecewiseVariant::A);
        const BandedMatrix b = assemble_piecewise(f, g, w, PiecewiseVariant::B);
        const Eigen::MatrixXcd d = a.block - b.block;
        bool ok = true;
        for (int x = w.lo; x <= w.hi; ++x) {
            if (std::abs(x) < m_eff + 1) continue;
            if (d.col(x - w.lo).cwiseAbs().maxCoeff() != 0.0) ok = false;
        }
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(d);
        int rank = 0;
        for (Eigen::Index j = 0; j < svd.singularValues().size(); ++j)
            if (svd.singularValues()(j) > 1e-10) ++rank;
        ok = ok && rank <= 2 * m_eff + 1;
        std::ostringstream detail;
        detail << "A-B support: band " << m_eff << " rank " << rank;
        acc.record(ok, detail.str());
    }
    for (int i = 0; i < draws; ++i) {
        const DrawnPair dd = draw_fredholm_pair(rng, 0.02, 0.01);
        const WalkSpec spec{dd.shift, CoinProfile::step(dd.limit_minus, dd.limit_plus, 0)};
        const BandedMatrix qp = assemble_q_plus(spec, w);
        const BandedMatrix a =
            assemble_piecewise(TrigPoly::from_symbol(build_symbol(spec, Side::Minus)),
                               TrigPoly::from_symbol(build_symbol(spec, Side::Plus)), w,
                               PiecewiseVariant::A);
        const Eigen::MatrixXcd d = qp.block - a.block;
        bool ok = true;
        for (int col = 0; col < w.sites(); ++col) {
            const int x = w.lo + col;
            for (int row = 0; row < w.sites(); ++row) {
                const int y = w.lo + row;
                const bool allowed = x == -1 && y >= -1 && y <= 0;
                if (!allowed && d(row, col) != complexd(0.0, 0.0)) ok = false;
            }
        }
        acc.record(ok, failure_case("band vs piecewise support not confined to x=-1", spec));
    }
    return finish_suite("exact finite-rank support checks", acc, t0);
}

}  // namespace

VerifyCounts VerifyCounts::scaled(double factor) const {
    auto s = [&](int v) { return static_cast<int>(std::llround(v * factor)); };
    VerifyCounts out;
    out.winding_draws = s(winding_draws);
    out.root_draws = s(root_draws);
    out.transfer_single = s(transfer_single);
    out.transfer_multi = s(transfer_multi);
    out.spectral_specs = s(spectral_specs);
    out.toeplitz_symbols = s(toeplitz_symbols);
    out.finite_rank_draws = s(finite_rank_draws);
    return out;
}

bool VerifyCounts::all_zero() const {
    return winding_draws == 0 && root_draws == 0 && transfer_single == 0 &&
           transfer_multi == 0 && spectral_specs == 0 && toeplitz_symbols == 0 &&
           finite_rank_draws == 0;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& opts, std::ostream& out) {
    std::vector<SuiteResult> results;
    const VerifyCounts& c = opts.counts;

    results.push_back(suite_formula_grid());
    results.push_back(suite_winding_agreement(opts.seed, c.winding_draws));
    results.push_back(suite_root_fidelity(opts.seed, c.root_draws));
    results.push_back(suite_transfer(opts.seed, c.transfer_single, c.transfer_multi));
    const std::vector<WalkSpec> spectral_set = make_spectral_specs(opts.seed, c.spectral_specs);
    results.push_back(suite_spectral(spectral_set, opts.threads));
    results.push_back(suite_toeplitz(opts.seed, c.toeplitz_symbols, opts.threads));
    results.push_back(suite_edge_states(spectral_set, opts.threads));
    results.push_back(suite_finite_rank(opts.seed, c.finite_rank_draws));

    for (std::size_t i = 0; i < results.size(); ++i) {
        const SuiteResult& r = results[i];
        out << (r.failures == 0 ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << r.name << " ("
            << r.total << " cases";
        if (r.failures != 0) out << ", " << r.failures << " failures";
        out << ")\n";
    }
    return results;
}

int verify_main(const VerifyOptions& opts, std::ostream& out) {
    if (opts.counts.all_zero()) {
        out << "[WARN] all suite counts are zero: vacuous pass\n";
        return 0;
    }
    const std::vector<SuiteResult> results = run_verification(opts, out);
    for (const SuiteResult& r : results) {
        if (r.failures == 0) continue;
        out << "FAILED: " << r.name << "\nfirst failing case: " << r.first_failure << "\n";
        return 1;
    }
    out << "all " << results.size() << " suites passed\n";
    return 0;
}

}  // namespace ssqw
