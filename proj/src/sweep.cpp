#include "ssqw/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "ssqw/detail/parallel.hpp"
#include "ssqw/errors.hpp"

namespace ssqw {

GridRange GridRange::parse(const std::string& text) {
    GridRange r;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &r.lo, &r.hi, &r.step) != 3)
        throw std::invalid_argument("grid range must have the form lo:hi:step, got '" + text + "'");
    if (!(r.step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (r.hi < r.lo) throw std::invalid_argument("grid range needs hi >= lo");
    return r;
}

std::vector<double> GridRange::values() const {
    std::vector<double> out;
    for (double v = lo; v <= hi + 0.5 * step; v += step) out.push_back(v);
    return out;
}

SweepSummary run_sweep(const SweepOptions& opts, std::ostream& csv) {
    const std::vector<double> ps = opts.p.values();
    const std::vector<double> as = opts.a_plus.values();
    for (double p : ps)
        if (std::abs(p) > 1.0) throw std::invalid_argument("sweep p values must stay in [-1, 1]");
    for (double a : as)
        if (std::abs(a) > 1.0)
            throw std::invalid_argument("sweep a_plus values must stay in [-1, 1]");
    if (std::abs(opts.a_minus) > 1.0)
        throw std::invalid_argument("sweep a_minus must stay in [-1, 1]");

    auto coin_limit = [&](double a) {
        return make_coin_site(a, std::polar(std::sqrt(std::max(0.0, 1.0 - a * a)), opts.b_phase));
    };
    const CoinSite minus = coin_limit(opts.a_minus);

    const int total = static_cast<int>(ps.size() * as.size());
    std::vector<IndexReport> reports(total);
    AnalyzeOptions aopts;
    aopts.run_transfer = opts.run_transfer;
    aopts.run_spectral = opts.run_spectral;
    aopts.window = opts.window;

    detail::parallel_for(total, opts.threads, [&](int i) {
        const double p = ps[static_cast<std::size_t>(i) / as.size()];
        const double a_plus = as[static_cast<std::size_t>(i) % as.size()];
        const ShiftParams shift = make_shift(p, std::sqrt(std::max(0.0, 1.0 - p * p)));
        const WalkSpec spec{shift, CoinProfile::step(minus, coin_limit(a_plus), 0)};
        reports[i] = analyze(spec, aopts);
    });

    SweepSummary sum;
    sum.total = total;
    csv << csv_header() << '\n';
    for (const IndexReport& rep : reports) {
        csv << csv_row(rep) << '\n';
        if (!rep.fredholm)
            ++sum.not_fredholm;
        else if (rep.methods_agree)
            ++sum.agree;
        else
            ++sum.disagree;
    }
    csv << "# total=" << sum.total << " agree=" << sum.agree << " disagree=" << sum.disagree
        << " not_fredholm=" << sum.not_fredholm << '\n';
    return sum;
}

}  // namespace ssqw
