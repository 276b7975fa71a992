#include "ssqw/analysis.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ssqw/errors.hpp"
#include "ssqw/spectral.hpp"
#include "ssqw/symbol.hpp"
#include "ssqw/transfer.hpp"
#include "ssqw/winding.hpp"

namespace ssqw {

const char* to_string(FormulaCase c) {
    switch (c) {
        case FormulaCase::PlusSgnP: return "plus_sgn_p";
        case FormulaCase::MinusSgnP: return "minus_sgn_p";
        case FormulaCase::Zero: return "zero";
        case FormulaCase::NotFredholm: return "not_fredholm";
    }
    return "unknown";
}

FormulaResult formula_index(const ShiftParams& shift, const CoinSite& limit_minus,
                            const CoinSite& limit_plus) {
    constexpr double kDegenerate = 1e-12;
    const double p_abs = std::abs(shift.p);
    const double a_minus = std::abs(limit_minus.a);
    const double a_plus = std::abs(limit_plus.a);
    FormulaResult r;
    if (std::abs(p_abs - a_plus) < kDegenerate || std::abs(p_abs - a_minus) < kDegenerate) {
        r.fredholm = false;
        r.kase = FormulaCase::NotFredholm;
        return r;
    }
    r.fredholm = true;
    const int sgn_p = shift.p > 0.0 ? 1 : (shift.p < 0.0 ? -1 : 0);
    if (a_plus < p_abs && p_abs < a_minus) {
        r.index = sgn_p;
        r.kase = FormulaCase::PlusSgnP;
    } else if (a_minus < p_abs && p_abs < a_plus) {
        r.index = -sgn_p;
        r.kase = FormulaCase::MinusSgnP;
    } else {
        r.index = 0;
        r.kase = FormulaCase::Zero;
    }
    return r;
}

namespace {

void flag_disagreement(IndexReport& rep, const std::string& what) {
    rep.methods_agree = false;
    if (!rep.disagreement.empty()) rep.disagreement += "; ";
    rep.disagreement += what;
}

Window doubled(const Window& w) {
    const int half = (w.hi - w.lo + 1) / 2;
    return Window{w.lo - half, w.hi + half, w.boundary};
}

}  // namespace

IndexReport analyze(const WalkSpec& spec, const AnalyzeOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    IndexReport rep;
    rep.spec = spec;

    const FormulaResult fr =
        formula_index(spec.shift, spec.coin.limit_minus(), spec.coin.limit_plus());
    rep.formula_case = fr.kase;
    rep.witten_formula = fr.index;

    const SymbolPoly sym_plus = build_symbol(spec, Side::Plus);
    const SymbolPoly sym_minus = build_symbol(spec, Side::Minus);
    WindingResult wplus, wminus;
    bool zero_poly = false;
    try {
        wplus = winding_by_roots(sym_plus);
        wminus = winding_by_roots(sym_minus);
    } catch (const ZeroPolynomialError&) {
        zero_poly = true;
    }

    auto finish = [&] {
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        return rep;
    };

    if (zero_poly) {
        rep.fredholm = false;
        rep.reason = "symbol identically zero (|p| = |a| = 1)";
        rep.margin = 0.0;
        rep.formula_case = FormulaCase::NotFredholm;
        return finish();
    }

    rep.margin = std::min(wplus.margin, wminus.margin);
    rep.fredholm = fr.fredholm && wplus.fredholm && wminus.fredholm;
    if (!rep.fredholm) {
        std::ostringstream os;
        if (!wplus.fredholm) os << "plus-side symbol has a root on the unit circle";
        if (!wminus.fredholm)
            os << (os.str().empty() ? "" : "; ") << "minus-side symbol has a root on the unit circle";
        if (os.str().empty()) os << "|p| matches |a| on one side";
        rep.reason = os.str();
        rep.formula_case = FormulaCase::NotFredholm;
        return finish();
    }

    rep.wn_plus = wplus.wn_f;
    rep.wn_minus = wminus.wn_f;
    rep.witten_winding = wplus.wn_zf - wminus.wn_zf;

    // argument-principle cross-check of the root count
    const ArgumentWinding aplus = winding_by_argument(sym_plus);
    const ArgumentWinding aminus = winding_by_argument(sym_minus);
    if (aplus.wn != wplus.wn_zf || aminus.wn != wminus.wn_zf) {
        std::ostringstream os;
        os << "winding methods disagree: roots (" << wplus.wn_zf << ", " << wminus.wn_zf
           << ") vs argument (" << aplus.wn << ", " << aminus.wn << ")";
        flag_disagreement(rep, os.str());
    }

    if (rep.witten_formula != rep.witten_winding) {
        std::ostringstream os;
        os << "formula index " << rep.witten_formula << " != winding index " << rep.witten_winding;
        flag_disagreement(rep, os.str());
    }

    if (opts.run_transfer && spec.coin.piecewise_constant()) {
        const KernelCount kc = kernel_by_matching(spec);
        rep.witten_transfer = kc.witten;
        if (kc.witten != rep.witten_winding) {
            std::ostringstream os;
            os << "transfer index " << kc.witten << " != winding index " << rep.witten_winding;
            flag_disagreement(rep, os.str());
        }
    }

    if (opts.run_spectral) {
        SpectralEstimate est;
        try {
            est = index_by_chirality(spec, opts.window, opts.eps_cut, opts.loc_threshold);
        } catch (const AmbiguousCutError&) {
            est = index_by_chirality(spec, doubled(opts.window), opts.eps_cut, opts.loc_threshold);
        }
        rep.witten_spectral = est.estimated_index;
        rep.residual = est.residual;
        if (est.estimated_index != rep.witten_winding) {
            std::ostringstream os;
            os << "spectral index " << est.estimated_index << " != winding index "
               << rep.witten_winding;
            flag_disagreement(rep, os.str());
        }
    }

    return finish();
}

std::string format_g17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_header() {
    return "p,q_re,q_im,a_minus,b_minus_re,b_minus_im,a_plus,b_plus_re,b_plus_im,fredholm,"
           "wn_plus,wn_minus,witten_formula,witten_winding,witten_transfer,witten_spectral,"
           "case,margin,residual";
}

std::string csv_row(const IndexReport& rep) {
    const ShiftParams& s = rep.spec.shift;
    const CoinSite lm = rep.spec.coin.limit_minus();
    const CoinSite lp = rep.spec.coin.limit_plus();
    std::ostringstream os;
    os << format_g17(s.p) << ',' << format_g17(s.q.real()) << ',' << format_g17(s.q.imag()) << ','
       << format_g17(lm.a) << ',' << format_g17(lm.b.real()) << ',' << format_g17(lm.b.imag())
       << ',' << format_g17(lp.a) << ',' << format_g17(lp.b.real()) << ','
       << format_g17(lp.b.imag()) << ',';
    os << (rep.fredholm ? "true" : "false") << ',';
    if (rep.fredholm) {
        os << rep.wn_plus << ',' << rep.wn_minus << ',' << rep.witten_formula << ','
           << rep.witten_winding << ',';
        if (rep.witten_transfer) os << *rep.witten_transfer;
        os << ',';
        if (rep.witten_spectral) os << *rep.witten_spectral;
        os << ',';
    } else {
        os << ",,,,,,";
    }
    os << to_string(rep.formula_case) << ',' << format_g17(rep.margin) << ',';
    if (rep.witten_spectral) os << format_g17(rep.residual);
    return os.str();
}

}  // namespace ssqw
