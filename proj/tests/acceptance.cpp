// Acceptance suite: end-to-end checks of the library against the settings'
// exact regions, closed forms, figure-level orderings, and the CLI's
// determinism. Prints one pass/fail line per criterion; exit code is the
// number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "helperbounds/binary.hpp"
#include "helperbounds/checks.hpp"
#include "helperbounds/erasure.hpp"
#include "helperbounds/gaussian.hpp"
#include "helperbounds/gaussian_sv.hpp"
#include "helperbounds/montecarlo.hpp"
#include "helperbounds/sweep.hpp"

using namespace helperbounds;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int g_failures = 0;

void run(int idx, const std::string& name, double limit_seconds,
         const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = out.pass && secs < limit_seconds;
    if (!pass) ++g_failures;
    std::printf("[%s] %2d %s: %s (%.1fs < %.0fs)\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                out.detail.c_str(), secs, limit_seconds);
    std::fflush(stdout);
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// independent numeric maximizer for MSE(alpha): dense grid + golden polish
double mse_grid_oracle(const gaussiansv::GaussianSVProblem& pr, double alpha, int n = 401) {
    double R1 = std::sqrt(pr.power * pr.p1), R2 = std::sqrt(pr.power * pr.p2);
    double den = pr.p1 + alpha * alpha * pr.p2, A = (1 - alpha) * alpha * pr.p2;
    auto g2 = [&](double r1, double r2) {
        double k = A + alpha * r2 + r1;
        return pr.power + (1 - alpha) * (1 - alpha) * pr.p2 + 2 * (1 - alpha) * r2 + pr.noise -
               k * k / den;
    };
    double best = -1e300, br1 = 0, br2 = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double r1 = -R1 + 2 * R1 * i / (n - 1.0), r2 = -R2 + 2 * R2 * j / (n - 1.0);
            double v = g2(r1, r2);
            if (v > best) { best = v; br1 = r1; br2 = r2; }
        }
    for (int round = 0; round < 4; ++round) {
        double c1 = 2 * R1 / (n - 1.0), c2 = 2 * R2 / (n - 1.0);
        if (R1 > 0)
            br1 = golden_max([&](double r) { return g2(r, br2); },
                             std::max(-R1, br1 - 2 * c1), std::min(R1, br1 + 2 * c1));
        if (R2 > 0)
            br2 = golden_max([&](double r) { return g2(br1, r); },
                             std::max(-R2, br2 - 2 * c2), std::min(R2, br2 + 2 * c2));
    }
    return std::max(best, g2(br1, br2));
}

} // namespace

int main() {
    run(1, "binary exact region at p1=1/2", 10.0, [] {
        SeqRng rng(101, 0);
        double worst = 0.0, worstz = 0.0;
        mc::SimConfig cfg;
        cfg.samples = 1000000;
        for (int i = 0; i < 50; ++i) {
            double p2 = 0.05 + 0.45 * rng.u01();
            double C = p2 * (0.1 + 0.8 * rng.u01());
            double v = binary::lb_thm3(binary::BinaryProblem(0.5, p2, C)).value;
            worst = std::max(worst, std::abs(v - (p2 - C)));
            cfg.seed = 1000 + i;
            auto sim = mc::sim_binary_half(p2, C, cfg);
            worstz = std::max(worstz, std::abs(sim.distortion_hat - (p2 - C)) / sim.stderr_hat);
        }
        Outcome o;
        o.pass = worst <= 1e-6 && worstz <= 3.0;
        o.detail = "max |thm3-(p2-C)|=" + fmt(worst) + ", sim max z=" + fmt(worstz);
        return o;
    });

    run(2, "causal/noncausal separation at (0.1, 0.5, 0.11)", 60.0, [] {
        binary::BinaryProblem pr(0.1, 0.5, 0.11);
        bool nc = binary::zero_dist_noncausal(pr).zero;
        bool cz = binary::causal_zero_necessary(0.1, 0.11);
        auto cs = binary::causal_search(pr, 100000);
        Outcome o;
        o.pass = nc && !cz && cs.value > 0.01;
        o.detail = "noncausal-zero=" + std::string(nc ? "yes" : "no") +
                   ", causal-necessary=" + std::string(cz ? "yes" : "no") +
                   ", causal-search=" + fmt(cs.value);
        return o;
    });

    run(3, "small-cost comparison curves cross / dominate", 300.0, [] {
        double cross_a = -1.0, cross_b = -1.0; // p1 = 0.05: each side must win somewhere
        double dom_margin = 1.0;               // p1 = 0.1: cor2 dominates everywhere
        for (int i = 0; i < 21; ++i) {
            double C = 0.01 + 0.02 * i / 20.0;
            {
                binary::BinaryProblem pr(0.05, 0.1, C);
                double c2 = binary::lb_thm3(pr).value; // regime condition holds on this grid
                double c4 = binary::lb_cor4(pr).value;
                cross_a = std::max(cross_a, c2 - c4);
                cross_b = std::max(cross_b, c4 - c2);
            }
            {
                binary::BinaryProblem pr(0.1, 0.1, C);
                double c2 = binary::lb_thm3(pr).value;
                double c4 = binary::lb_cor4(pr).value;
                dom_margin = std::min(dom_margin, c2 - c4);
            }
        }
        Outcome o;
        o.pass = cross_a > 1e-4 && cross_b > 1e-4 && dom_margin > 0.0;
        o.detail = "p1=0.05 margins " + fmt(cross_a) + "/" + fmt(cross_b) +
                   ", p1=0.1 min margin " + fmt(dom_margin);
        return o;
    });

    run(4, "gaussian zero-distortion regime", 120.0, [] {
        double worst = 0.0;
        int zero_points = 0;
        for (double P : linspace(0.05, 1.0, 10))
            for (double P2 : logspace(0.1, 10.0, 10)) {
                gaussian::GaussianProblem pr(P, P2);
                if (!gaussian::zero_dist_gaussian(pr)) continue;
                ++zero_points;
                worst = std::max(worst, gaussian::ach_thm5(pr, 10000).value);
            }
        double hi_ach = gaussian::ach_thm5(gaussian::GaussianProblem(1.05, 1e6)).value;
        double hi_gs = gaussian::lb_gs(gaussian::GaussianProblem(0.8, 1e6)).value;
        Outcome o;
        o.pass = zero_points > 0 && worst <= 1e-3 && hi_ach <= 1e-2 && hi_gs > 1e-3;
        o.detail = std::to_string(zero_points) + " zero-dist points, worst ach=" + fmt(worst) +
                   "; P2=1e6: ach(1.05)=" + fmt(hi_ach) + ", gs(0.8)=" + fmt(hi_gs);
        return o;
    });

    run(5, "specialization identities", 30.0, [] {
        double w7 = 0.0;
        gaussian::GaussianProblem gp(0.1, 1.0);
        for (double g : linspace(1.0 + 1e-6, 80.0, 50))
            w7 = std::max(w7, std::abs(gaussian::lb_thm7(gp, gaussian::VerduParams(g, 0, 0)).value -
                                       gaussian::lb_prop6(gp, g).value));
        SeqRng rng(505, 0);
        double w9a = 0.0, w9b = 0.0;
        for (int i = 0; i < 50; ++i) {
            double P1 = std::exp(rng.uniform(std::log(0.8), std::log(1.25)));
            double P2 = std::exp(rng.uniform(std::log(0.5), std::log(4.0)));
            double P = std::exp(rng.uniform(std::log(0.8), std::log(1.25)));
            double N = std::exp(rng.uniform(std::log(0.8), std::log(1.25)));
            gaussiansv::GaussianSVProblem pr(P1, P2, P, N);
            w9a = std::max(w9a, std::abs(gaussiansv::lb_thm9(pr, {1.0}).value -
                                         gaussiansv::lb_prop7(pr).value));
            double p8 = gaussiansv::lb_prop8(pr).value;
            w9b = std::max(w9b, std::abs(gaussiansv::lb_thm9(pr, {1e3}).value - p8) / p8);
        }
        Outcome o;
        o.pass = w7 <= 1e-9 && w9a <= 1e-9 && w9b <= 1e-3;
        o.detail = "thm7|c0r0 vs prop6 " + fmt(w7) + ", thm9(1) vs prop7 " + fmt(w9a) +
                   ", thm9(1e3) vs prop8 rel " + fmt(w9b);
        return o;
    });

    run(6, "gaussian bound orderings and the discretized-bound crossing", 600.0, [] {
        double worst_order = -1.0, worst_family = 1.0;
        double cross_a = -1.0, cross_b = -1.0;
        for (double P2 : {0.1, 1.0, 10.0, 100.0}) {
            for (double P : linspace(0.0, 1.0, 51)) {
                gaussian::GaussianProblem pr(P, P2);
                double ach = gaussian::ach_thm5(pr).value;
                double gs = gaussian::lb_gs(pr).value;
                double p6 = gaussian::lb_prop6_max(pr).value;
                double t7 = gaussian::lb_thm7_max(pr).value;
                double gw = gaussian::lb_gws(pr).value;
                for (double lo : {gs, p6, t7, gw}) worst_order = std::max(worst_order, lo - ach);
                worst_family = std::min(worst_family, t7 - p6);
                if (P2 == 100.0) {
                    cross_a = std::max(cross_a, t7 - gw);
                    cross_b = std::max(cross_b, gw - t7);
                }
            }
        }
        Outcome o;
        o.pass = worst_order <= 1e-6 && worst_family >= -1e-9 && cross_a > 1e-4 && cross_b > 1e-4;
        o.detail = "max lower-upper gap " + fmt(worst_order) + ", min thm7-prop6 " +
                   fmt(worst_family) + ", P2=100 crossings " + fmt(cross_a) + "/" + fmt(cross_b);
        return o;
    });

    run(7, "box quadratic oracle equivalence and the thm9 gap", 120.0, [] {
        SeqRng rng(2024, 0);
        double worst_rel = 0.0;
        for (int i = 0; i < 100; ++i) {
            double P1 = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
            double P2 = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
            double P = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
            double N = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
            double al = (rng.u01() < 0.5 ? -1 : 1) *
                        std::exp(rng.uniform(std::log(0.2), std::log(4.0)));
            gaussiansv::GaussianSVProblem pr(P1, P2, P, N);
            double a = gaussiansv::mse_alpha(pr, al).mse;
            double orc = mse_grid_oracle(pr, al);
            worst_rel = std::max(worst_rel, std::abs(a - orc) / std::abs(orc));
        }
        double worst_dom = 1.0, best_gap = -1.0;
        for (double P2 : linspace(0.2, 8.0, 40)) {
            gaussiansv::GaussianSVProblem pr(1, P2, 1, 1);
            double t9 = gaussiansv::lb_thm9(pr).value;
            double simple = std::max(gaussiansv::lb_prop7(pr).value,
                                     gaussiansv::lb_prop8(pr).value);
            worst_dom = std::min(worst_dom, t9 - simple);
            best_gap = std::max(best_gap, t9 - simple);
        }
        Outcome o;
        o.pass = worst_rel <= 1e-6 && worst_dom >= -1e-6 && best_gap > 1e-4;
        o.detail = "mse oracle rel " + fmt(worst_rel) + ", min thm9-simple " + fmt(worst_dom) +
                   ", max gap " + fmt(best_gap);
        return o;
    });

    run(8, "multiplicative gap certificate", 120.0, [] {
        Outcome o;
        double worst = -1.0;
        int certified = 0;
        for (double eps : {0.01, 0.05}) {
            auto probe = gaussiansv::gap_thm10(gaussiansv::GaussianSVProblem(1, 1, 1, 1), eps);
            for (int i = 1; i <= 50; ++i) {
                double sp2 = probe.threshold * (1.0 + 0.06 * i);
                auto g = gaussiansv::gap_thm10(gaussiansv::GaussianSVProblem(1, sp2 * sp2, 1, 1),
                                               eps);
                if (!g.certified) { o.pass = false; continue; }
                ++certified;
                worst = std::max(worst, g.ratio - 1.0 / (1.0 - eps));
            }
        }
        o.pass = o.pass && certified == 100 && worst <= 1e-6;
        o.detail = std::to_string(certified) + "/100 certified, worst ratio excess " + fmt(worst);
        return o;
    });

    run(9, "erasure exactness vs simulation", 30.0, [] {
        SeqRng rng(909, 0);
        mc::SimConfig cfg;
        cfg.samples = 1000000;
        double worstz = 0.0, worst_zero = 0.0;
        for (int i = 0; i < 20; ++i) {
            double p1 = 0.05 + 0.4 * rng.u01();
            double p2 = 0.1 + 0.4 * rng.u01();
            double C = 0.9 * p2 * rng.u01();
            auto pr = erasure::ErasureProblem::bernoulli_hamming(p1, p2, C);
            cfg.seed = 9000 + i;
            auto sim = mc::sim_erasure(pr, cfg);
            double exact = erasure::dmin_erasure(pr).value;
            worstz = std::max(worstz, std::abs(sim.distortion_hat - exact) /
                                          std::max(sim.stderr_hat, 1e-12));
        }
        for (int i = 0; i < 10; ++i) {
            double p1 = 0.05 + 0.4 * rng.u01();
            double p2 = 0.1 + 0.4 * rng.u01();
            double C = p2 + (1.0 - p2) * rng.u01();
            worst_zero = std::max(worst_zero, erasure::dmin_erasure(
                erasure::ErasureProblem::bernoulli_hamming(p1, p2, C)).value);
        }
        Outcome o;
        o.pass = worstz <= 3.0 && worst_zero == 0.0;
        o.detail = "max z " + fmt(worstz) + ", value past p2 " + fmt(worst_zero);
        return o;
    });

    run(10, "paired reconstruction counts coincide", 5.0, [] {
        mc::SimConfig cfg;
        cfg.samples = 100000;
        cfg.seed = 10;
        auto a = mc::claim2_paired_counts(0.1, 0.3, 0.05, cfg);
        auto b = mc::claim2_paired_counts(0.4, 0.5, 0.3, cfg);
        Outcome o;
        o.pass = a.s1_errors == a.z_errors && b.s1_errors == b.z_errors;
        o.detail = "counts " + std::to_string(a.s1_errors) + "==" + std::to_string(a.z_errors) +
                   ", " + std::to_string(b.s1_errors) + "==" + std::to_string(b.z_errors);
        return o;
    });

    run(11, "CLI determinism: check and sweeps byte-identical per seed", 300.0, [] {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / "helperbounds-acceptance";
        fs::create_directories(dir);
        fs::path spec1 = dir / "sweep_binary.spec";
        {
            std::ofstream f(spec1);
            f << "setting = binary\nsweep = C\nlo = 0.01\nhi = 0.05\nsteps = 4\n"
                 "p1 = 0.1\np2 = 0.2\nbounds = thm3, thm4, cor4, thm2\n";
        }
        fs::path spec2 = dir / "sweep_gaussian.spec";
        {
            std::ofstream f(spec2);
            f << "setting = gaussian\nsweep = P\nlo = 0\nhi = 0.6\nsteps = 4\n"
                 "P2 = 1\nbounds = thm5, thm6, prop6, thm7\n";
        }
        const std::string cli = HB_CLI_PATH;
        auto sh = [&](const std::string& cmd) { return std::system(cmd.c_str()) == 0; };
        bool ok = true;
        ok &= sh(cli + " --seed 7 --budget 400 sweep " + spec1.string() + " --out " +
                 (dir / "b1.csv").string());
        ok &= sh(cli + " --seed 7 --budget 400 sweep " + spec1.string() + " --out " +
                 (dir / "b2.csv").string());
        ok &= sh(cli + " --seed 7 sweep " + spec2.string() + " --out " + (dir / "g1.csv").string());
        ok &= sh(cli + " --seed 7 sweep " + spec2.string() + " --out " + (dir / "g2.csv").string());
        ok &= sh(cli + " --seed 7 check > " + (dir / "c1.txt").string());
        ok &= sh(cli + " --seed 7 check > " + (dir / "c2.txt").string());
        bool same_b = read_file(dir / "b1.csv") == read_file(dir / "b2.csv");
        bool same_g = read_file(dir / "g1.csv") == read_file(dir / "g2.csv");
        bool same_c = read_file(dir / "c1.txt") == read_file(dir / "c2.txt");
        bool nonempty = !read_file(dir / "b1.csv").empty() && !read_file(dir / "g1.csv").empty() &&
                        !read_file(dir / "c1.txt").empty();
        int usage_rc = std::system(
            (cli + " bound binary nosuchbound p1=0.1 p2=0.1 C=0.1 2> /dev/null").c_str());
        bool usage_exit2 = WIFEXITED(usage_rc) && WEXITSTATUS(usage_rc) == 2;
        Outcome o;
        o.pass = ok && same_b && same_g && same_c && nonempty && usage_exit2;
        o.detail = std::string("runs ok=") + (ok ? "yes" : "no") + ", binary-sweep same=" +
                   (same_b ? "yes" : "no") + ", gaussian-sweep same=" + (same_g ? "yes" : "no") +
                   ", check same=" + (same_c ? "yes" : "no") + ", usage exit=2 " +
                   (usage_exit2 ? "yes" : "no");
        return o;
    });

    std::printf("%s: %d criterion failure(s)\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                g_failures);
    return g_failures;
}
