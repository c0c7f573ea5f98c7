// Command-line front end: evaluate single bounds, run CSV sweeps, drive the
// Monte Carlo simulator, and run the invariant suite.
//
// Exit codes: 0 success, 2 usage or spec error, 3 invariant-suite failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "helperbounds/checks.hpp"
#include "helperbounds/montecarlo.hpp"
#include "helperbounds/sweep.hpp"

namespace hb = helperbounds;

namespace {

std::map<std::string, double> parse_kv(const std::vector<std::string>& args) {
    std::map<std::string, double> kv;
    for (const auto& a : args) {
        auto eq = a.find('=');
        if (eq == std::string::npos)
            throw hb::sweep::SpecError("expected key=value, got: " + a);
        std::string key = a.substr(0, eq);
        std::string val = a.substr(eq + 1);
        char* end = nullptr;
        double x = std::strtod(val.c_str(), &end);
        if (end == val.c_str() || *end != '\0')
            throw hb::sweep::SpecError("bad number for " + key + ": " + val);
        kv[key] = x;
    }
    return kv;
}

double kv_get(const std::map<std::string, double>& kv, const std::string& k, double fallback) {
    auto it = kv.find(k);
    return it == kv.end() ? fallback : it->second;
}

bool kv_has(const std::map<std::string, double>& kv, const std::string& k) {
    return kv.count(k) != 0;
}

void print_result(const hb::BoundResult& r) {
    std::printf("value=%.12g kind=%s evaluations=%lld", r.value, hb::to_string(r.kind),
                r.evaluations);
    for (const auto& p : r.params) std::printf(" %s=%.12g", p.first.c_str(), p.second);
    if (!r.diagnostic.empty()) std::printf(" diagnostic=\"%s\"", r.diagnostic.c_str());
    std::printf("\n");
}

int run_bound(const std::string& setting, const std::string& bound,
              const std::map<std::string, double>& kv, const hb::sweep::RunOptions& opt) {
    using hb::sweep::Setting;
    Setting st = hb::sweep::setting_from_string(setting);

    // point evaluations for family bounds when their parameters are pinned
    if (st == Setting::gaussian && bound == "prop6" && kv_has(kv, "gamma")) {
        hb::gaussian::GaussianProblem pr(hb::sweep::detail::need(kv, "P"),
                                         hb::sweep::detail::need(kv, "P2"));
        print_result(hb::gaussian::lb_prop6(pr, kv.at("gamma")));
        return 0;
    }
    if (st == Setting::gaussian && bound == "thm7" && kv_has(kv, "gamma")) {
        hb::gaussian::GaussianProblem pr(hb::sweep::detail::need(kv, "P"),
                                         hb::sweep::detail::need(kv, "P2"));
        hb::gaussian::VerduParams vp(kv.at("gamma"), kv_get(kv, "c", 0.0), kv_get(kv, "r", 0.0));
        print_result(hb::gaussian::lb_thm7(pr, vp));
        return 0;
    }
    if (st == Setting::gaussian_sv && bound == "thm9" && kv_has(kv, "alpha")) {
        print_result(hb::gaussiansv::lb_thm9(hb::sweep::detail::mk_sv(kv), {kv.at("alpha")}));
        return 0;
    }
    if (st == Setting::gaussian_sv && bound == "thm10") {
        auto g = hb::gaussiansv::gap_thm10(hb::sweep::detail::mk_sv(kv),
                                           hb::sweep::detail::need(kv, "epsilon"));
        std::printf("threshold=%.12g certified=%d ratio=%.12g epsilon=%.12g\n", g.threshold,
                    g.certified ? 1 : 0, g.ratio, g.epsilon);
        return 0;
    }
    if (st == Setting::binary && bound == "prop3") {
        auto r = hb::binary::dmin_half(hb::sweep::detail::need(kv, "p2"),
                                       hb::sweep::detail::need(kv, "C"));
        print_result(r);
        return 0;
    }

    const auto& reg = hb::sweep::detail::registry().at(st);
    auto it = reg.find(bound);
    if (it == reg.end()) throw hb::sweep::SpecError("unknown bound id: " + bound);
    print_result(it->second.eval(kv, opt));
    return 0;
}

int run_sim(const std::string& scheme, const std::map<std::string, double>& kv,
            std::uint64_t seed) {
    hb::mc::SimConfig cfg;
    cfg.samples = static_cast<long long>(kv_get(kv, "samples", 1000000));
    cfg.seed = seed;
    hb::mc::SimResult r;
    if (scheme == "binary_half") {
        cfg.scheme = hb::mc::SimScheme::binary_half;
        r = hb::mc::sim_binary_half(hb::sweep::detail::need(kv, "p2"),
                                    hb::sweep::detail::need(kv, "C"), cfg);
    } else if (scheme == "erasure") {
        cfg.scheme = hb::mc::SimScheme::erasure;
        auto pr = hb::erasure::ErasureProblem::bernoulli_hamming(
            hb::sweep::detail::need(kv, "p1"), hb::sweep::detail::need(kv, "p2"),
            hb::sweep::detail::need(kv, "C"));
        r = hb::mc::sim_erasure(pr, cfg);
    } else if (scheme == "gaussian_uncoded") {
        cfg.scheme = hb::mc::SimScheme::gaussian_uncoded;
        hb::gaussian::GaussianProblem pr(hb::sweep::detail::need(kv, "P"),
                                         hb::sweep::detail::need(kv, "P2"));
        r = hb::mc::sim_gaussian_uncoded(pr, cfg);
    } else {
        throw hb::sweep::SpecError("unknown scheme: " + scheme);
    }
    std::printf("distortion=%.12g stderr=%.12g cost=%.12g cost_stderr=%.12g samples=%lld seed=%llu\n",
                r.distortion_hat, r.stderr_hat, r.cost_hat, r.cost_stderr, r.samples,
                static_cast<unsigned long long>(seed));
    return 0;
}

int run_check(std::uint64_t seed, double tolerance) {
    auto results = hb::checks::run_all(seed, tolerance);
    int failed = 0;
    for (const auto& c : results) {
        if (c.pass) {
            std::printf("ok %s\n", c.name.c_str());
        } else {
            ++failed;
            std::printf("FAIL %s (%s)\n", c.name.c_str(), c.detail.c_str());
        }
    }
    std::printf("passed %zu/%zu\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distortion-cost bounds for estimation with an interference-aware helper"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    long long budget = 0;
    double tolerance = 0.0;
    std::string out_path;
    app.add_option("--seed", seed, "seed for randomized searches and simulation");
    app.add_option("--budget", budget, "optimizer evaluation budget override");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--tolerance", tolerance, "tolerance override for check comparisons");

    auto* cmd_bound = app.add_subcommand("bound", "evaluate one bound at one point");
    std::string setting, bound_id;
    std::vector<std::string> bound_params;
    cmd_bound->add_option("setting", setting, "binary | gaussian | gaussian_sv | erasure")
        ->required();
    cmd_bound->add_option("bound-id", bound_id, "bound identifier")->required();
    cmd_bound->add_option("params", bound_params, "problem parameters as key=value");

    auto* cmd_sweep = app.add_subcommand("sweep", "run a sweep spec file, emit CSV");
    std::string spec_path;
    cmd_sweep->add_option("spec-file", spec_path, "sweep spec file ('-' for stdin)")->required();

    auto* cmd_sim = app.add_subcommand("sim", "simulate a symbol-by-symbol scheme");
    std::string scheme;
    std::vector<std::string> sim_params;
    cmd_sim->add_option("scheme", scheme, "binary_half | erasure | gaussian_uncoded")->required();
    cmd_sim->add_option("params", sim_params, "scheme parameters as key=value");

    auto* cmd_check = app.add_subcommand("check", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        hb::sweep::RunOptions opt{seed, budget};
        if (!out_path.empty() && !cmd_sweep->parsed()) {
            if (!std::freopen(out_path.c_str(), "wb", stdout)) {
                std::fprintf(stderr, "error: cannot open output file: %s\n", out_path.c_str());
                return 2;
            }
        }
        if (cmd_bound->parsed()) return run_bound(setting, bound_id, parse_kv(bound_params), opt);
        if (cmd_sweep->parsed()) {
            hb::sweep::SweepSpec spec;
            if (spec_path == "-") {
                spec = hb::sweep::parse_spec(std::cin);
            } else {
                std::ifstream in(spec_path);
                if (!in) throw hb::sweep::SpecError("cannot open spec file: " + spec_path);
                spec = hb::sweep::parse_spec(in);
            }
            auto table = hb::sweep::run_sweep(spec, opt);
            std::string csv = hb::sweep::to_csv(table);
            if (out_path.empty()) {
                std::fwrite(csv.data(), 1, csv.size(), stdout);
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw hb::sweep::SpecError("cannot open output file: " + out_path);
                out << csv;
            }
            return 0;
        }
        if (cmd_sim->parsed()) return run_sim(scheme, parse_kv(sim_params), seed);
        if (cmd_check->parsed()) return run_check(seed, tolerance);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
