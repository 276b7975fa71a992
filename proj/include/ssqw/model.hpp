#ifndef SSQW_MODEL_HPP
#define SSQW_MODEL_HPP

#include <complex>
#include <vector>

namespace ssqw {

using complexd = std::complex<double>;

// Shift scalars (p, q) with p^2 + |q|^2 = 1 and the derived phase theta = arg(q) (0 when q = 0).
struct ShiftParams {
    double p = 1.0;
    complexd q{0.0, 0.0};
    double theta = 0.0;
};

// Renormalizes (p, q) onto the unit sphere when within 1e-9; throws NormalizationError beyond.
ShiftParams make_shift(double p, complexd q);

// One site of the coin: a real, b complex, a^2 + |b|^2 = 1.
struct CoinSite {
    double a = 1.0;
    complexd b{0.0, 0.0};
};

CoinSite make_coin_site(double a, complexd b);

enum class ProfileKind { Step, MultiStep, Tanh };

struct Breakpoint {
    int x;
    CoinSite value;
};

// Site-dependent coin with limits at +-infinity. Profiles are evaluation rules, not stored
// arrays, so any window can be materialized lazily.
//
// Piecewise kinds: value is limit_minus below the first breakpoint; from breakpoint x_i
// (inclusive) up to the next breakpoint the value is that breakpoint's coin; the last
// breakpoint's value must equal limit_plus.
//
// Tanh kind: a(x) = (a+ + a-)/2 + (a+ - a-)/2 * tanh(x/w), b(x) = e^{i phi} sqrt(1 - a(x)^2).
class CoinProfile {
public:
    static CoinProfile step(const CoinSite& minus, const CoinSite& plus, int cut = 0);
    static CoinProfile multi_step(const CoinSite& minus, const CoinSite& plus,
                                  std::vector<Breakpoint> breakpoints);
    static CoinProfile tanh_profile(double a_minus, double a_plus, double width,
                                    double phi = 0.0);

    CoinSite at(int x) const;

    ProfileKind kind() const { return kind_; }
    bool piecewise_constant() const { return kind_ != ProfileKind::Tanh; }
    const CoinSite& limit_minus() const { return limit_minus_; }
    const CoinSite& limit_plus() const { return limit_plus_; }
    const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
    double width() const { return width_; }
    double phi() const { return phi_; }

private:
    CoinProfile() = default;

    ProfileKind kind_ = ProfileKind::Step;
    CoinSite limit_minus_;
    CoinSite limit_plus_;
    std::vector<Breakpoint> breakpoints_;  // empty for tanh
    double width_ = 1.0;
    double phi_ = 0.0;
};

CoinSite eval_coin(const CoinProfile& profile, int x);

// Piecewise-constant reduction keeping only the limits: limit_plus for x >= cut,
// limit_minus for x <= cut-1.
CoinProfile flatten(const CoinProfile& profile, int cut = 0);

struct WalkSpec {
    ShiftParams shift;
    CoinProfile coin;
};

}  // namespace ssqw

#endif
