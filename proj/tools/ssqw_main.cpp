// Command-line front end: scenario analysis, phase-diagram sweeps, spectrum dumps,
// operator dumps and the cross-method verification suite.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "ssqw/analysis.hpp"
#include "ssqw/errors.hpp"
#include "ssqw/operators.hpp"
#include "ssqw/scenario.hpp"
#include "ssqw/spectral.hpp"
#include "ssqw/sweep.hpp"
#include "ssqw/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;

struct MethodFlags {
    bool formula = true;
    bool winding = true;
    bool transfer = false;
    bool spectral = false;
};

MethodFlags parse_methods(const std::string& text) {
    MethodFlags flags;
    flags.transfer = false;
    flags.spectral = false;
    std::stringstream ss(text);
    std::string item;
    bool formula = false, winding = false;
    while (std::getline(ss, item, ',')) {
        if (item == "formula") {
            formula = true;
        } else if (item == "winding") {
            winding = true;
        } else if (item == "transfer") {
            flags.transfer = true;
        } else if (item == "spectral") {
            flags.spectral = true;
        } else if (!item.empty()) {
            throw ssqw::SchemaError("unknown method '" + item +
                                    "' (expected formula,winding,transfer,spectral)");
        }
    }
    // formula and winding always run; listing them is allowed but not required
    (void)formula;
    (void)winding;
    return flags;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

int run_analyze(const std::string& config, const std::string& methods,
                const std::string& out_path, int window) {
    const ssqw::WalkSpec spec = ssqw::load_scenario_file(config);
    const MethodFlags flags = parse_methods(methods);
    ssqw::AnalyzeOptions opts;
    opts.run_transfer = flags.transfer;
    opts.run_spectral = flags.spectral;
    opts.window = ssqw::Window{-window, window, ssqw::Boundary::Open};
    const ssqw::IndexReport rep = ssqw::analyze(spec, opts);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_output(out_path);
        out = &file;
    }
    *out << ssqw::csv_header() << '\n' << ssqw::csv_row(rep) << '\n';

    if (!rep.fredholm) {
        std::cerr << "not Fredholm: " << rep.reason << "\n";
        return kExitOk;
    }
    if (!rep.methods_agree) {
        std::cerr << "METHOD DISAGREEMENT: " << rep.disagreement << "\n";
        return kExitDisagreement;
    }
    std::cerr << "witten index " << rep.witten_winding << " (" << ssqw::to_string(rep.formula_case)
              << "), methods agree\n";
    return kExitOk;
}

int run_sweep_cmd(const std::string& p_range, const std::string& a_plus_range, double a_minus,
                  double b_phase, const std::string& methods, const std::string& out_path,
                  unsigned threads) {
    const MethodFlags flags = parse_methods(methods);
    ssqw::SweepOptions opts;
    opts.p = ssqw::GridRange::parse(p_range);
    opts.a_plus = ssqw::GridRange::parse(a_plus_range);
    opts.a_minus = a_minus;
    opts.b_phase = b_phase;
    opts.run_transfer = flags.transfer;
    opts.run_spectral = flags.spectral;
    opts.threads = threads;

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_output(out_path);
        out = &file;
    }
    const ssqw::SweepSummary sum = ssqw::run_sweep(opts, *out);
    std::cerr << "sweep: " << sum.total << " points, " << sum.agree << " agree, " << sum.disagree
              << " disagree, " << sum.not_fredholm << " not Fredholm\n";
    return sum.disagree == 0 ? kExitOk : kExitDisagreement;
}

int run_spectrum(const std::string& config, int window, const std::string& out_path) {
    const ssqw::WalkSpec spec = ssqw::load_scenario_file(config);
    const ssqw::Window w{-window, window, ssqw::Boundary::Open};
    const auto [u, q] = ssqw::assemble_evolution_and_supercharge(spec, w);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ue(u.block, false);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> qe(q.block, Eigen::EigenvaluesOnly);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_output(out_path);
        out = &file;
    }
    *out << "operator,k,re,im\n";
    for (Eigen::Index i = 0; i < ue.eigenvalues().size(); ++i)
        *out << "u," << i << ',' << ssqw::format_g17(ue.eigenvalues()(i).real()) << ','
             << ssqw::format_g17(ue.eigenvalues()(i).imag()) << '\n';
    for (Eigen::Index i = 0; i < qe.eigenvalues().size(); ++i)
        *out << "q," << i << ',' << ssqw::format_g17(qe.eigenvalues()(i)) << ",0\n";
    return kExitOk;
}

int run_dump(const std::string& config, const std::string& which, int window,
             const std::string& boundary, const std::string& out_path) {
    const ssqw::WalkSpec spec = ssqw::load_scenario_file(config);
    ssqw::Window w{-window, window,
                   boundary == "periodic" ? ssqw::Boundary::Periodic : ssqw::Boundary::Open};
    std::optional<ssqw::BandedMatrix> mat;
    if (which == "gamma") {
        mat = ssqw::assemble_gamma(spec.shift, w);
    } else if (which == "coin") {
        mat = ssqw::assemble_coin(spec.coin, w);
    } else if (which == "u") {
        mat = ssqw::assemble_evolution_and_supercharge(spec, w).first;
    } else if (which == "q") {
        mat = ssqw::assemble_evolution_and_supercharge(spec, w).second;
    } else if (which == "qplus") {
        mat = ssqw::assemble_q_plus(spec, w);
    } else {
        throw ssqw::SchemaError("unknown operator '" + which +
                                "' (expected gamma|coin|u|q|qplus)");
    }
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_output(out_path);
        out = &file;
    }
    ssqw::dump_nonzero_csv(*mat, *out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"split-step quantum walk Witten index toolkit"};
    app.require_subcommand(1);

    std::string config, out_path, methods = "formula,winding,transfer";
    int window = 150;

    auto* analyze = app.add_subcommand("analyze", "analyze one scenario and emit a CSV row");
    analyze->add_option("--config", config, "scenario JSON file")->required();
    analyze->add_option("--methods", methods, "comma list: formula,winding,transfer,spectral");
    analyze->add_option("--out", out_path, "CSV output file (default stdout)");
    analyze->add_option("--window", window, "spectral window half-width (sites)");

    std::string p_range, a_plus_range;
    double a_minus = 0.0, b_phase = 0.0;
    unsigned threads = 0;
    auto* sweep = app.add_subcommand("sweep", "phase-diagram sweep over p and a_plus");
    sweep->add_option("--p", p_range, "p grid lo:hi:step")->required();
    sweep->add_option("--a-plus", a_plus_range, "a(+inf) grid lo:hi:step")->required();
    sweep->add_option("--a-minus", a_minus, "fixed a(-inf)")->required();
    sweep->add_option("--b-phase", b_phase, "phase of b(+-inf) (radians)");
    sweep->add_option("--methods", methods, "comma list: formula,winding,transfer,spectral");
    sweep->add_option("--out", out_path, "CSV output file (default stdout)");
    sweep->add_option("--threads", threads, "worker threads (0 = hardware)");

    std::uint64_t seed = 42;
    double scale = 1.0;
    bool quick = false;
    auto* verify = app.add_subcommand("verify", "run the cross-method verification suites");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--scale", scale, "multiply all random-draw counts (0 = vacuous)");
    verify->add_flag("--quick", quick, "shorthand for --scale 0.1");
    verify->add_option("--threads", threads, "worker threads (0 = hardware)");

    auto* spectrum = app.add_subcommand("spectrum", "dump eigenvalues of U and Q");
    spectrum->add_option("--config", config, "scenario JSON file")->required();
    spectrum->add_option("--window", window, "window half-width (sites)");
    spectrum->add_option("--out", out_path, "CSV output file (default stdout)");

    std::string which = "qplus", boundary = "open";
    auto* dump = app.add_subcommand("dump-operator", "dump nonzero operator entries as CSV");
    dump->add_option("--config", config, "scenario JSON file")->required();
    dump->add_option("--which", which, "gamma|coin|u|q|qplus")->required();
    dump->add_option("--window", window, "window half-width (sites)");
    dump->add_option("--boundary", boundary, "open|periodic");
    dump->add_option("--out", out_path, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(config, methods, out_path, window);
        if (app.got_subcommand(sweep))
            return run_sweep_cmd(p_range, a_plus_range, a_minus, b_phase, methods, out_path,
                                 threads);
        if (app.got_subcommand(verify)) {
            ssqw::VerifyOptions opts;
            opts.seed = seed;
            opts.threads = threads;
            if (quick) scale = 0.1;
            opts.counts = opts.counts.scaled(scale);
            return ssqw::verify_main(opts, std::cout);
        }
        if (app.got_subcommand(spectrum)) return run_spectrum(config, window, out_path);
        if (app.got_subcommand(dump)) return run_dump(config, which, window, boundary, out_path);
    } catch (const ssqw::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
