#ifndef HELPERBOUNDS_CHECKS_HPP
#define HELPERBOUNDS_CHECKS_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "binary.hpp"
#include "entropy.hpp"
#include "erasure.hpp"
#include "gaussian.hpp"
#include "gaussian_sv.hpp"
#include "montecarlo.hpp"

// The `check` subcommand's invariant suite: fast, deterministic given the
// seed, one result per named invariant.

namespace helperbounds::checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace detail

// tolerance <= 0 keeps each check's default
inline std::vector<CheckResult> run_all(std::uint64_t seed, double tolerance = 0.0) {
    std::vector<CheckResult> out;
    auto add = [&](const std::string& name, bool pass, double worst, double tol) {
        out.push_back({name, pass, "worst " + detail::fmt(worst) + " tol " + detail::fmt(tol)});
    };
    auto tol_or = [&](double def) { return tolerance > 0.0 ? tolerance : def; };

    { // binary entropy symmetry and concavity on a 1e3 grid
        double tol = tol_or(1e-12), worst = 0.0;
        bool ok = true;
        for (int i = 0; i <= 1000; ++i) {
            double p = i / 1000.0;
            worst = std::max(worst, std::abs(h2(p) - h2(1.0 - p)));
            if (i > 0 && i < 1000) {
                double mid = h2(p);
                double chord = 0.5 * (h2(p - 1e-3) + h2(p + 1e-3));
                if (mid + 1e-12 < chord) ok = false;
            }
        }
        add("h2-symmetric-concave", ok && worst <= tol, worst, tol);
    }
    { // h2(h2_inv(t)) = t
        double tol = tol_or(1e-9), worst = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            double t = i / 1000.0;
            worst = std::max(worst, std::abs(h2(h2_inv(t)) - t));
        }
        add("h2-inverse-roundtrip", worst <= tol, worst, tol);
    }
    { // binary convolution is commutative and associative
        double tol = tol_or(1e-12), worst = 0.0;
        SeqRng rng(seed, 11);
        for (int i = 0; i < 200; ++i) {
            double a = rng.u01(), b = rng.u01(), c = rng.u01();
            worst = std::max(worst, std::abs(bconv(a, b) - bconv(b, a)));
            worst = std::max(worst, std::abs(bconv(bconv(a, b), c) - bconv(a, bconv(b, c))));
        }
        add("bconv-commutative-associative", worst <= tol, worst, tol);
    }
    { // p1 = 1/2: the first lower bound collapses to the exact region
        double tol = tol_or(1e-9), worst = 0.0;
        for (double p2 : {0.15, 0.3, 0.5})
            for (double C : {0.05, 0.1, 0.12}) {
                auto r = binary::lb_thm3(binary::BinaryProblem(0.5, p2, C));
                worst = std::max(worst, std::abs(r.value - binary::dmin_half(p2, C).value));
            }
        add("binary-half-exact-region", worst <= tol, worst, tol);
    }
    { // C > p1 certifies zero noncausal distortion
        bool ok = true;
        int n = 0;
        for (double p1 : {0.05, 0.15, 0.25, 0.35})
            for (double p2 : {0.1, 0.3, 0.5})
                for (double C : {0.06, 0.2, 0.4})
                    if (C > p1) {
                        ++n;
                        ok = ok && binary::zero_dist_noncausal(binary::BinaryProblem(p1, p2, C)).zero;
                    }
        add("binary-zero-dist-when-cost-exceeds-p1", ok, ok ? 0.0 : 1.0, 0.0);
    }
    { // lower bounds never exceed achievability searches
        double tol = tol_or(1e-6), worst = -1.0;
        for (double p1 : {0.1, 0.3, 0.5})
            for (double p2 : {0.1, 0.3, 0.5})
                for (double C : {0.02, 0.1, 0.3}) {
                    binary::BinaryProblem pr(p1, p2, C);
                    double lo = std::max({binary::lb_thm3(pr).value,
                                          binary::lb_thm4(pr, 0, seed).value,
                                          binary::lb_cor4(pr, binary::GpOptions{0, 0}, seed).value});
                    double hi = std::min(binary::causal_search(pr, 500, seed).value,
                                         binary::ach_thm2_binary(pr, 500, seed).value);
                    worst = std::max(worst, lo - hi);
                }
        add("binary-lower-below-upper", worst <= tol, worst, tol);
    }
    { // the easy-to-compute corollary never beats the full bound
        double tol = tol_or(1e-6), worst = -1.0;
        for (double p1 : {0.05, 0.2, 0.4})
            for (double p2 : {0.1, 0.4})
                for (double C : {0.02, 0.15}) {
                    binary::BinaryProblem pr(p1, p2, C);
                    worst = std::max(worst, binary::lb_cor4(pr, binary::GpOptions{0, 0}, seed).value -
                                            binary::lb_thm4(pr, 0, seed).value);
                }
        add("binary-cor4-below-thm4", worst <= tol, worst, tol);
    }
    { // GP capacity with cost reaches the presubtraction witness value
        double tol = tol_or(1e-9), worst = 0.0;
        for (double p2 : {0.1, 0.5})
            for (double C : {0.05, 0.11}) {
                auto gp = binary::gp_capacity_cost(binary::BinaryProblem(0.1, p2, C),
                                                   binary::GpOptions{0, 0}, seed);
                worst = std::max(worst, h2(C) - gp.value);
            }
        add("binary-gp-reaches-witness", worst <= tol, worst, tol);
    }
    { // the c = r = 0 member of the mismatch family
        double tol = tol_or(1e-12), worst = 0.0;
        gaussian::GaussianProblem pr(0.1, 1.0);
        for (double g : linspace(1.0 + 1e-6, 50.0, 50))
            worst = std::max(worst, std::abs(gaussian::lb_prop6(pr, g).value -
                                             gaussian::lb_thm7(pr, gaussian::VerduParams(g, 0, 0)).value));
        add("gaussian-prop6-is-thm7-slice", worst <= tol, worst, tol);
    }
    { // silent helper: both sides tight at P = 0
        double tol = tol_or(1e-6), worst = 0.0;
        for (double P2 : {0.2, 1.0, 5.0}) {
            gaussian::GaussianProblem pr(0.0, P2);
            double mmse = P2 / (1.0 + P2);
            worst = std::max(worst, std::abs(gaussian::lb_gs(pr).value - mmse));
            worst = std::max(worst, std::abs(gaussian::ach_thm5(pr).value - mmse));
        }
        add("gaussian-tight-at-zero-power", worst <= tol, worst, tol);
    }
    { // lower bounds below achievability
        double tol = tol_or(1e-6), worst = -1.0;
        for (double P : {0.1, 0.5, 0.9})
            for (double P2 : {0.5, 2.0, 20.0}) {
                gaussian::GaussianProblem pr(P, P2);
                double lo = std::max({gaussian::lb_gs(pr).value,
                                      gaussian::lb_prop6_max(pr).value,
                                      gaussian::lb_thm7_max(pr).value,
                                      gaussian::lb_gws(pr, 101).value});
                worst = std::max(worst, lo - gaussian::ach_thm5(pr, 4000).value);
            }
        add("gaussian-lower-below-upper", worst <= tol, worst, tol);
    }
    { // alpha = 1 and alpha -> infinity recover the two simple bounds
        double tol9 = tol_or(1e-9), tol3 = tol_or(1e-3);
        double w1 = 0.0, w2 = 0.0;
        for (double P2 : {0.5, 1.0, 3.0}) {
            gaussiansv::GaussianSVProblem pr(1.0, P2, 1.0, 1.0);
            w1 = std::max(w1, std::abs(gaussiansv::lb_thm9(pr, {1.0}).value -
                                       gaussiansv::lb_prop7(pr).value));
            double p8 = gaussiansv::lb_prop8(pr).value;
            w2 = std::max(w2, std::abs(gaussiansv::lb_thm9(pr, {1e3}).value - p8) / p8);
        }
        add("sv-alpha1-recovers-prop7", w1 <= tol9, w1, tol9);
        add("sv-alpha-inf-recovers-prop8", w2 <= tol3, w2, tol3);
    }
    { // closed-form box quadratic vs a small grid-refine oracle
        double tol = tol_or(1e-6), worst = 0.0;
        SeqRng rng(seed, 23);
        for (int i = 0; i < 5; ++i) {
            double P1 = 0.5 + 1.5 * rng.u01(), P2 = 0.5 + 1.5 * rng.u01();
            double P = 0.5 + 1.5 * rng.u01(), N = 0.5 + 1.5 * rng.u01();
            double al = (rng.u01() < 0.5 ? -1 : 1) * (0.3 + 2.0 * rng.u01());
            gaussiansv::GaussianSVProblem pr(P1, P2, P, N);
            double R1 = std::sqrt(P * P1), R2 = std::sqrt(P * P2);
            double den = P1 + al * al * P2, A = (1 - al) * al * P2;
            auto g2 = [&](double r1, double r2) {
                double k = A + al * r2 + r1;
                return P + (1 - al) * (1 - al) * P2 + 2 * (1 - al) * r2 + N - k * k / den;
            };
            double best = -1e300, br1 = 0, br2 = 0;
            const int n = 201;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    double r1 = -R1 + 2 * R1 * a / (n - 1.0), r2 = -R2 + 2 * R2 * b / (n - 1.0);
                    double v = g2(r1, r2);
                    if (v > best) { best = v; br1 = r1; br2 = r2; }
                }
            for (int round = 0; round < 4; ++round) {
                double c1 = 2 * R1 / (n - 1.0), c2 = 2 * R2 / (n - 1.0);
                br1 = golden_max([&](double r) { return g2(r, br2); },
                                 std::max(-R1, br1 - 2 * c1), std::min(R1, br1 + 2 * c1));
                br2 = golden_max([&](double r) { return g2(br1, r); },
                                 std::max(-R2, br2 - 2 * c2), std::min(R2, br2 + 2 * c2));
            }
            best = std::max(best, g2(br1, br2));
            double a = gaussiansv::mse_alpha(pr, al).mse;
            worst = std::max(worst, std::abs(a - best) / std::abs(best));
        }
        add("sv-mse-alpha-matches-grid-oracle", worst <= tol, worst, tol);
    }
    { // lower below upper on the source-at-helper setting
        double tol = tol_or(1e-6), worst = -1.0;
        for (double P2 : {0.3, 1.0, 5.0})
            for (double P : {0.2, 1.0, 4.0}) {
                gaussiansv::GaussianSVProblem pr(1.0, P2, P, 1.0);
                double lo = std::max({gaussiansv::lb_prop7(pr).value,
                                      gaussiansv::lb_prop8(pr).value,
                                      gaussiansv::lb_thm9(pr).value});
                worst = std::max(worst, lo - gaussiansv::ach_thm8(pr).value);
            }
        add("sv-lower-below-upper", worst <= tol, worst, tol);
    }
    { // multiplicative gap certificate above the interference threshold
        double tol = tol_or(1e-6);
        gaussiansv::GaussianSVProblem probe(1.0, 4.0, 1.0, 1.0);
        auto g0 = gaussiansv::gap_thm10(probe, 0.05);
        double sp2 = g0.threshold + 0.25;
        auto g = gaussiansv::gap_thm10(gaussiansv::GaussianSVProblem(1.0, sp2 * sp2, 1.0, 1.0), 0.05);
        bool ok = g.certified && g.ratio <= 1.0 / 0.95 + tol;
        add("sv-gap-certificate", ok, g.ratio - 1.0 / 0.95, tol);
    }
    { // erasure closed form vs simulation, and monotonicity in C
        mc::SimConfig cfg;
        cfg.samples = 100000;
        cfg.seed = seed;
        double worst_sigma = 0.0;
        bool mono = true;
        double prev = 1e300;
        for (double C : {0.0, 0.1, 0.2, 0.4, 0.6}) {
            auto pr = erasure::ErasureProblem::bernoulli_hamming(0.1, 0.5, C);
            double exact = erasure::dmin_erasure(pr).value;
            if (exact > prev + 1e-12) mono = false;
            prev = exact;
            auto sim = mc::sim_erasure(pr, cfg);
            double se = std::max(sim.stderr_hat, 1e-12);
            worst_sigma = std::max(worst_sigma, std::abs(sim.distortion_hat - exact) / se);
        }
        add("erasure-exact-matches-sim", worst_sigma <= 3.0 && mono, worst_sigma, 3.0);
    }
    { // randomized cancellation achieves p2 - C at p1 = 1/2
        mc::SimConfig cfg;
        cfg.samples = 100000;
        cfg.seed = seed;
        auto sim = mc::sim_binary_half(0.3, 0.1, cfg);
        double z = std::abs(sim.distortion_hat - 0.2) / sim.stderr_hat;
        add("binary-half-sim-matches-exact", z <= 3.0, z, 3.0);
    }
    { // uncoded Gaussian cancellation matches the scalar MMSE value
        mc::SimConfig cfg;
        cfg.samples = 100000;
        cfg.seed = seed;
        auto sim = mc::sim_gaussian_uncoded(gaussian::GaussianProblem(0.25, 1.0), cfg);
        double z = std::abs(sim.distortion_hat - 0.2) / sim.stderr_hat;
        add("gaussian-uncoded-sim-matches-mmse", z <= 3.0, z, 3.0);
    }
    { // paired optimal reconstructions of S1 and X^S2 have identical counts
        mc::SimConfig cfg;
        cfg.samples = 100000;
        cfg.seed = seed;
        auto pc = mc::claim2_paired_counts(0.1, 0.3, 0.05, cfg);
        add("claim2-paired-counts-identical", pc.s1_errors == pc.z_errors,
            double(pc.s1_errors - pc.z_errors), 0.0);
    }
    return out;
}

} // namespace helperbounds::checks

#endif
