#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "helperbounds/erasure.hpp"
#include "helperbounds/montecarlo.hpp"
#include "helperbounds/rng.hpp"

using namespace helperbounds;
using erasure::ErasureProblem;

TEST_CASE("problem validation") {
    CHECK_THROWS_AS(ErasureProblem({0.5, 0.4}, 0.3, 0.1, {{0, 1}, {1, 0}}),
                    std::invalid_argument); // mass 0.9
    CHECK_THROWS_AS(ErasureProblem({0.5, 0.5}, 0.3, 0.1, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ErasureProblem({0.5, 0.5}, 0.3, 0.1, {{0, -1}, {1, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ErasureProblem({0.5, 0.5}, 0.3, 0.1, {{0, 1}, {1}}), std::invalid_argument);
}

TEST_CASE("full cancellation gives zero distortion under Hamming") {
    for (double p1 : {0.1, 0.4})
        for (double p2 : {0.1, 0.3}) {
            auto pr = ErasureProblem::bernoulli_hamming(p1, p2, p2 + 0.05);
            CHECK(erasure::dmin_erasure(pr).value == 0.0);
        }
}

TEST_CASE("closed form on the Bernoulli(0.1) example") {
    auto pr = ErasureProblem::bernoulli_hamming(0.1, 0.5, 0.2);
    auto r = erasure::dmin_erasure(pr);
    CHECK(r.value == doctest::Approx(0.03).epsilon(1e-12));
    CHECK(r.kind == BoundKind::exact);
}

TEST_CASE("uniform source at zero cost") {
    auto pr = ErasureProblem::bernoulli_hamming(0.5, 0.4, 0.0);
    CHECK(erasure::dmin_erasure(pr).value == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("covering reproduction alphabet reduces to the erased term") {
    // ternary source, reproduction covers it, non-Hamming costs
    ErasureProblem pr({0.5, 0.3, 0.2}, 0.4, 0.1,
                      {{0, 2, 3}, {2, 0, 1}, {3, 1, 0}});
    double erased = erasure::dmin_erasure(pr).param("erased_term");
    CHECK(erasure::dmin_erasure(pr).value == doctest::Approx(0.3 * erased).epsilon(1e-12));
}

TEST_CASE("monotone nonincreasing in cost, zero past p2") {
    SeqRng rng(5, 0);
    for (int i = 0; i < 25; ++i) {
        double p1 = 0.05 + 0.45 * rng.u01();
        double p2 = 0.05 + 0.45 * rng.u01();
        double prev = 1e300;
        for (double C : {0.0, 0.1, 0.2, 0.4, 0.8}) {
            double v = erasure::dmin_erasure(ErasureProblem::bernoulli_hamming(p1, p2, C)).value;
            CHECK(v <= prev + 1e-12);
            prev = v;
            if (C >= p2) CHECK(v == 0.0);
        }
    }
}

TEST_CASE("closed form matches the scheme simulation within 3 sigma") {
    mc::SimConfig cfg;
    cfg.samples = 100000;
    SeqRng rng(17, 0);
    for (int i = 0; i < 12; ++i) {
        double p1 = 0.05 + 0.4 * rng.u01();
        double p2 = 0.1 + 0.4 * rng.u01();
        double C = 0.8 * p2 * rng.u01();
        auto pr = ErasureProblem::bernoulli_hamming(p1, p2, C);
        cfg.seed = 100 + i;
        auto sim = mc::sim_erasure(pr, cfg);
        double exact = erasure::dmin_erasure(pr).value;
        INFO("p1=" << p1 << " " << "p2=" << p2 << " " << "C=" << C);
        CHECK(std::abs(sim.distortion_hat - exact) <= 3.0 * std::max(sim.stderr_hat, 1e-12));
    }
}
