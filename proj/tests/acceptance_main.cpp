// Acceptance suite: runs every verification criterion at full counts and prints one
// pass/fail line per criterion. Exit code 0 iff everything passes.
#include <CLI11.hpp>
#include <iostream>

#include "ssqw/verify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"acceptance suite"};
    std::uint64_t seed = 42;
    double scale = 1.0;
    unsigned threads = 0;
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--scale", scale, "multiply all random-draw counts");
    app.add_option("--threads", threads, "worker threads (0 = hardware)");
    CLI11_PARSE(app, argc, argv);

    ssqw::VerifyOptions opts;
    opts.seed = seed;
    opts.threads = threads;
    opts.counts = opts.counts.scaled(scale);
    return ssqw::verify_main(opts, std::cout);
}
