#ifndef SSQW_ANALYSIS_HPP
#define SSQW_ANALYSIS_HPP

#include <optional>
#include <string>

#include "ssqw/model.hpp"
#include "ssqw/operators.hpp"

namespace ssqw {

enum class FormulaCase { PlusSgnP, MinusSgnP, Zero, NotFredholm };

const char* to_string(FormulaCase c);

struct FormulaResult {
    bool fredholm = false;
    int index = 0;
    FormulaCase kase = FormulaCase::NotFredholm;
};

// Closed-form case formula: Fredholm iff |p| != |a(+-inf)|; index is sgn(p) when
// |a(+inf)| < |p| < |a(-inf)|, -sgn(p) when |a(-inf)| < |p| < |a(+inf)|, else 0.
FormulaResult formula_index(const ShiftParams& shift, const CoinSite& limit_minus,
                            const CoinSite& limit_plus);

struct AnalyzeOptions {
    bool run_formula = true;   // formula/winding always run; flags kept for symmetry
    bool run_winding = true;
    bool run_transfer = false;
    bool run_spectral = false;
    Window window{-150, 150, Boundary::Open};  // spectral window
    double eps_cut = 1e-6;
    double loc_threshold = 0.9;
};

struct IndexReport {
    WalkSpec spec;
    bool fredholm = false;
    std::string reason;  // which side degenerates, when not Fredholm
    int wn_plus = 0;     // winding of F+, valid iff fredholm
    int wn_minus = 0;
    int witten_formula = 0;
    int witten_winding = 0;
    std::optional<int> witten_transfer;
    std::optional<int> witten_spectral;
    FormulaCase formula_case = FormulaCase::NotFredholm;
    double margin = 0.0;     // min over sides of the root-circle margin
    double residual = 0.0;   // spectral residual, meaningful when witten_spectral is set
    double elapsed_ms = 0.0;
    bool methods_agree = true;
    std::string disagreement;  // non-empty exactly when methods_agree is false
};

// Runs the enabled methods and cross-checks them. Disagreements are flagged, never
// reconciled. Transfer is skipped (left absent) for non-piecewise-constant coins.
// An AmbiguousCutError from the spectral estimator is retried once on a doubled window.
IndexReport analyze(const WalkSpec& spec, const AnalyzeOptions& opts);

std::string csv_header();
std::string csv_row(const IndexReport& report);

// 17-significant-digit float formatting used by every CSV writer.
std::string format_g17(double v);

}  // namespace ssqw

#endif
