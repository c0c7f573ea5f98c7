#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "helperbounds/gaussian_sv.hpp"
#include "helperbounds/rng.hpp"

using namespace helperbounds;
using gaussiansv::GaussianSVProblem;

namespace {

// independent numeric route: dense grid with coordinate golden polish,
// touching only the raw objective
double mse_grid_oracle(const GaussianSVProblem& pr, double alpha, int n = 401) {
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
            double r1 = n == 1 ? 0.0 : -R1 + 2 * R1 * i / (n - 1.0);
            double r2 = n == 1 ? 0.0 : -R2 + 2 * R2 * j / (n - 1.0);
            double v = g2(r1, r2);
            if (v > best) { best = v; br1 = r1; br2 = r2; }
        }
    for (int round = 0; round < 4; ++round) {
        double c1 = 2 * R1 / std::max(1, n - 1), c2 = 2 * R2 / std::max(1, n - 1);
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

TEST_CASE("problem validation") {
    CHECK_THROWS_AS(GaussianSVProblem(0.0, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(GaussianSVProblem(1, -1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(GaussianSVProblem(1, 1, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(GaussianSVProblem(1, 1, 1, 0.0), std::invalid_argument);
}

TEST_CASE("ach_thm8 at alpha = beta = 0 matches the separation value") {
    GaussianSVProblem pr(1, 4, 1, 1);
    double sep = pr.p1 / ((1.0 + pr.p1 / (pr.p2 + pr.power + pr.noise)) *
                          (1.0 + pr.power / pr.noise));
    CHECK(gaussiansv::ach_thm8_eval(pr, 0.0, 0.0) == doctest::Approx(sep).epsilon(1e-12));
    auto r = gaussiansv::ach_thm8(pr);
    CHECK(r.value <= sep + 1e-12);
    // also no worse than the gap certificate's witness point
    double g = std::sqrt(0.05 * 2.0 / 2.0);
    CHECK(r.value <= gaussiansv::ach_thm8_eval(pr, g, -g) + 1e-12);
}

TEST_CASE("separation is optimal as interference grows") {
    GaussianSVProblem pr(1, 1e6, 1, 1);
    CHECK(gaussiansv::ach_thm8(pr).value == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(gaussiansv::lb_prop7(pr).value == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("lb_prop7 closed form") {
    CHECK(gaussiansv::lb_prop7(GaussianSVProblem(1, 1, 1, 1)).value == doctest::Approx(0.25));
    CHECK(gaussiansv::lb_prop7(GaussianSVProblem(1, 1, 0, 1)).value == doctest::Approx(0.5));
    auto d = gaussiansv::lb_prop7(GaussianSVProblem(1, 0, 1, 1));
    CHECK(d.value == 0.0);
    CHECK(!d.diagnostic.empty());
}

TEST_CASE("lb_prop8 closed form") {
    CHECK(gaussiansv::lb_prop8(GaussianSVProblem(1, 1, 1, 1)).value == doctest::Approx(0.2));
    CHECK(gaussiansv::lb_prop8(GaussianSVProblem(1, 1, 0, 1)).value == doctest::Approx(0.5));
    CHECK(gaussiansv::lb_prop8(GaussianSVProblem(1, 1, 4, 1)).value == doctest::Approx(0.1));
}

TEST_CASE("mse_alpha rejects alpha = 0 and collapses when P = 0") {
    GaussianSVProblem pr(1, 2, 0, 1);
    CHECK_THROWS_AS(gaussiansv::mse_alpha(pr, 0.0), std::invalid_argument);
    for (double a : {0.5, 1.0, -2.0}) {
        auto q = gaussiansv::mse_alpha(pr, a);
        CHECK(q.rho_xs1 == 0.0);
        CHECK(q.rho_xs2 == 0.0);
        double A = (1 - a) * a * pr.p2;
        double expect = (1 - a) * (1 - a) * pr.p2 + pr.noise - A * A / (pr.p1 + a * a * pr.p2);
        CHECK(q.mse == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("mse_alpha matches the grid oracle on random instances") {
    SeqRng rng(2024, 0);
    for (int i = 0; i < 100; ++i) {
        double P1 = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
        double P2 = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
        double P = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
        double N = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
        double al = (rng.u01() < 0.5 ? -1 : 1) * std::exp(rng.uniform(std::log(0.2), std::log(4.0)));
        GaussianSVProblem pr(P1, P2, P, N);
        double a = gaussiansv::mse_alpha(pr, al).mse;
        double o = mse_grid_oracle(pr, al, 201);
        INFO("P1=" << P1 << " " << "P2=" << P2 << " " << "P=" << P << " " << "N=" << N << " " << "al=" << al);
        CHECK(std::abs(a - o) <= 1e-6 * std::abs(o));
    }
}

TEST_CASE("lb_thm9 recovers the two simple bounds at the ends of the alpha range") {
    SeqRng rng(99, 0);
    for (int i = 0; i < 25; ++i) {
        double P1 = std::exp(rng.uniform(std::log(0.8), std::log(1.25)));
        double P2 = std::exp(rng.uniform(std::log(0.5), std::log(4.0)));
        double P = std::exp(rng.uniform(std::log(0.8), std::log(1.25)));
        double N = std::exp(rng.uniform(std::log(0.8), std::log(1.25)));
        GaussianSVProblem pr(P1, P2, P, N);
        CHECK(gaussiansv::lb_thm9(pr, {1.0}).value ==
              doctest::Approx(gaussiansv::lb_prop7(pr).value).epsilon(1e-9));
        double p8 = gaussiansv::lb_prop8(pr).value;
        CHECK(std::abs(gaussiansv::lb_thm9(pr, {1e3}).value - p8) <= 1e-3 * p8);
    }
}

TEST_CASE("lb_thm9 dominates the simple bounds and beats them at moderate alpha") {
    double best_gap = -1.0;
    for (double P2 : linspace(0.2, 8.0, 25)) {
        GaussianSVProblem pr(1, P2, 1, 1);
        double t9 = gaussiansv::lb_thm9(pr).value;
        double simple = std::max(gaussiansv::lb_prop7(pr).value, gaussiansv::lb_prop8(pr).value);
        CHECK(t9 >= simple - 1e-6);
        best_gap = std::max(best_gap, t9 - simple);
    }
    CHECK(best_gap > 1e-4);
}

TEST_CASE("bound ordering on the (P1, P2, P, N) grid") {
    auto axis = [](double lo, double hi) { return logspace(lo, hi, 15); };
    for (double P1 : axis(0.25, 4.0))
        for (double P2 : axis(0.1, 10.0))
            for (double P : axis(0.05, 8.0))
                for (double N : axis(0.25, 4.0)) {
                    GaussianSVProblem pr(P1, P2, P, N);
                    double lo = std::max({gaussiansv::lb_prop7(pr).value,
                                          gaussiansv::lb_prop8(pr).value,
                                          gaussiansv::lb_thm9(pr).value});
                    double hi = gaussiansv::ach_thm8(pr, 1200).value;
                    INFO("P1=" << P1 << " " << "P2=" << P2 << " " << "P=" << P << " " << "N=" << N);
                    REQUIRE(lo <= hi + 1e-6);
                }
}

TEST_CASE("gap_thm10 certificate") {
    GaussianSVProblem probe(1, 1, 1, 1);
    CHECK_THROWS_AS(gaussiansv::gap_thm10(probe, 0.0), std::domain_error);
    CHECK_THROWS_AS(gaussiansv::gap_thm10(probe, 0.6), std::domain_error); // > P/(P+N)

    auto below = gaussiansv::gap_thm10(GaussianSVProblem(1, 0.01, 1, 1), 0.05);
    CHECK(!below.certified);

    auto probe_cert = gaussiansv::gap_thm10(probe, 0.05);
    double sp2 = probe_cert.threshold + 0.1;
    auto above = gaussiansv::gap_thm10(GaussianSVProblem(1, sp2 * sp2, 1, 1), 0.05);
    CHECK(above.certified);
    CHECK(above.ratio <= 1.0 / 0.95 + 1e-6);
}
