#include "ssqw/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ssqw/errors.hpp"

namespace ssqw {

namespace {

constexpr double kAcceptTol = 1e-9;  // renormalize within this band, reject beyond

std::string deviation_message(const char* what, double norm2) {
    std::ostringstream os;
    os << what << " violates the unit constraint: deviation " << std::abs(norm2 - 1.0)
       << " exceeds " << kAcceptTol;
    return os.str();
}

}  // namespace

ShiftParams make_shift(double p, complexd q) {
    const double n2 = p * p + std::norm(q);
    if (std::abs(n2 - 1.0) > kAcceptTol) throw NormalizationError(deviation_message("(p, q)", n2));
    const double scale = std::sqrt(n2);
    ShiftParams out;
    out.p = p / scale;
    out.q = q / scale;
    out.theta = (out.q == complexd(0.0, 0.0)) ? 0.0 : std::arg(out.q);
    return out;
}

CoinSite make_coin_site(double a, complexd b) {
    const double n2 = a * a + std::norm(b);
    if (std::abs(n2 - 1.0) > kAcceptTol) throw NormalizationError(deviation_message("(a, b)", n2));
    const double scale = std::sqrt(n2);
    return CoinSite{a / scale, b / scale};
}

namespace {

bool same_site(const CoinSite& u, const CoinSite& v) {
    return std::abs(u.a - v.a) <= 1e-12 && std::abs(u.b - v.b) <= 1e-12;
}

}  // namespace

CoinProfile CoinProfile::step(const CoinSite& minus, const CoinSite& plus, int cut) {
    CoinProfile p;
    p.kind_ = ProfileKind::Step;
    p.limit_minus_ = minus;
    p.limit_plus_ = plus;
    p.breakpoints_ = {Breakpoint{cut, plus}};
    return p;
}

CoinProfile CoinProfile::multi_step(const CoinSite& minus, const CoinSite& plus,
                                    std::vector<Breakpoint> breakpoints) {
    if (breakpoints.empty()) throw std::invalid_argument("multi_step needs at least one breakpoint");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
        if (breakpoints[i - 1].x >= breakpoints[i].x)
            throw std::invalid_argument("breakpoints must be strictly increasing in x");
    if (!same_site(breakpoints.back().value, plus))
        throw std::invalid_argument("last breakpoint value must equal limit_plus");
    CoinProfile p;
    p.kind_ = ProfileKind::MultiStep;
    p.limit_minus_ = minus;
    p.limit_plus_ = plus;
    p.breakpoints_ = std::move(breakpoints);
    return p;
}

CoinProfile CoinProfile::tanh_profile(double a_minus, double a_plus, double width, double phi) {
    if (!(width > 0.0)) throw std::invalid_argument("tanh profile needs width > 0");
    if (std::abs(a_minus) > 1.0 + 1e-12 || std::abs(a_plus) > 1.0 + 1e-12)
        throw std::invalid_argument("tanh profile needs |a(+-inf)| <= 1");
    const complexd phase = std::polar(1.0, phi);
    CoinProfile p;
    p.kind_ = ProfileKind::Tanh;
    p.limit_minus_ = CoinSite{a_minus, phase * std::sqrt(std::max(0.0, 1.0 - a_minus * a_minus))};
    p.limit_plus_ = CoinSite{a_plus, phase * std::sqrt(std::max(0.0, 1.0 - a_plus * a_plus))};
    p.width_ = width;
    p.phi_ = phi;
    return p;
}

CoinSite CoinProfile::at(int x) const {
    if (kind_ == ProfileKind::Tanh) {
        const double mid = 0.5 * (limit_plus_.a + limit_minus_.a);
        const double amp = 0.5 * (limit_plus_.a - limit_minus_.a);
        const double a = mid + amp * std::tanh(static_cast<double>(x) / width_);
        const double b_mod = std::sqrt(std::max(0.0, 1.0 - a * a));
        return CoinSite{a, std::polar(1.0, phi_) * b_mod};
    }
    CoinSite value = limit_minus_;
    for (const auto& bp : breakpoints_) {
        if (x < bp.x) break;
        value = bp.value;
    }
    return value;
}

CoinSite eval_coin(const CoinProfile& profile, int x) { return profile.at(x); }

CoinProfile flatten(const CoinProfile& profile, int cut) {
    return CoinProfile::step(profile.limit_minus(), profile.limit_plus(), cut);
}

}  // namespace ssqw
