#ifndef HELPERBOUNDS_MONTECARLO_HPP
#define HELPERBOUNDS_MONTECARLO_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "erasure.hpp"
#include "gaussian.hpp"
#include "rng.hpp"

// Seeded Monte Carlo validation of the symbol-by-symbol schemes. All draws
// are counter-based, so the same (seed, samples) pair reproduces bit-exact
// results and batches can be split deterministically.

namespace helperbounds::mc {

enum class SimScheme { binary_half, erasure, gaussian_uncoded };

struct SimConfig {
    long long samples = 1000000;
    std::uint64_t seed = 0;
    SimScheme scheme = SimScheme::binary_half;

    void validate() const {
        if (samples < 1) throw std::invalid_argument("SimConfig: samples < 1");
    }
};

struct SimResult {
    double distortion_hat = 0.0;
    double stderr_hat = 0.0;
    double cost_hat = 0.0;
    double cost_stderr = 0.0;
    long long samples = 0;
};

// Randomized cancellation policy for the p1 = 1/2 exact region: X = 1 with
// probability C/p2 when S2 = 1, reconstruction shat = Y.
inline SimResult sim_binary_half(double p2, double cost, const SimConfig& cfg) {
    cfg.validate();
    if (!(p2 > cost && cost > 0.0 && p2 <= 0.5))
        throw std::invalid_argument("sim_binary_half: need 0 < C < p2 <= 1/2");
    CounterRng rng{cfg.seed, 0x01};
    const double w = cost / p2;
    long long err = 0, ones = 0;
    for (long long i = 0; i < cfg.samples; ++i) {
        std::uint64_t k = std::uint64_t(i) * 4;
        bool s1 = rng.u01(k) < 0.5;
        bool s2 = rng.u01(k + 1) < p2;
        bool x = s2 && (rng.u01(k + 2) < w);
        bool y = x ^ s2 ^ s1;
        err += (y != s1);
        ones += x;
    }
    SimResult out;
    out.samples = cfg.samples;
    double n = double(cfg.samples);
    out.distortion_hat = double(err) / n;
    out.stderr_hat = std::sqrt(std::max(0.0, out.distortion_hat * (1.0 - out.distortion_hat)) / n);
    out.cost_hat = double(ones) / n;
    out.cost_stderr = std::sqrt(std::max(0.0, out.cost_hat * (1.0 - out.cost_hat)) / n);
    return out;
}

// Erasure scheme: cancel with probability min(1, C/p2) when S2 = 1; copy the
// clear observation, fall back to the prior-optimal symbol on erasure.
inline SimResult sim_erasure(const erasure::ErasureProblem& prob, const SimConfig& cfg) {
    cfg.validate();
    CounterRng rng{cfg.seed, 0x02};
    const double w = prob.p2 > 0.0 ? std::min(1.0, prob.cost / prob.p2) : 0.0;

    std::size_t prior_best = 0;
    prob.prior_optimal_distortion(&prior_best);
    std::vector<double> row_min(prob.source_dist.size());
    std::vector<double> cdf(prob.source_dist.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < prob.source_dist.size(); ++i) {
        row_min[i] = *std::min_element(prob.dmat[i].begin(), prob.dmat[i].end());
        acc += prob.source_dist[i];
        cdf[i] = acc;
    }

    double dist_sum = 0.0, dist_sq = 0.0;
    long long ones = 0;
    for (long long i = 0; i < cfg.samples; ++i) {
        std::uint64_t k = std::uint64_t(i) * 4;
        double u = rng.u01(k);
        std::size_t s1 = std::size_t(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (s1 >= cdf.size()) s1 = cdf.size() - 1;
        bool s2 = rng.u01(k + 1) < prob.p2;
        bool x = s2 && (rng.u01(k + 2) < w);
        bool erased = x ^ s2;
        double d = erased ? prob.dmat[s1][prior_best] : row_min[s1];
        dist_sum += d;
        dist_sq += d * d;
        ones += x;
    }
    SimResult out;
    out.samples = cfg.samples;
    double n = double(cfg.samples);
    out.distortion_hat = dist_sum / n;
    double var = std::max(0.0, dist_sq / n - out.distortion_hat * out.distortion_hat);
    out.stderr_hat = std::sqrt(var / n);
    out.cost_hat = double(ones) / n;
    out.cost_stderr = std::sqrt(std::max(0.0, out.cost_hat * (1.0 - out.cost_hat)) / n);
    return out;
}

// Uncoded partial cancellation X = -min(1, sqrt(P/P2)) S2 with the scalar
// linear-MMSE reconstruction from Y.
inline SimResult sim_gaussian_uncoded(const gaussian::GaussianProblem& prob, const SimConfig& cfg) {
    cfg.validate();
    CounterRng rng{cfg.seed, 0x03};
    const double P = prob.power, P2 = prob.interference_power;
    const double kappa = P2 > 0.0 ? std::min(1.0, std::sqrt(P / P2)) : 0.0;
    const double resid = (1.0 - kappa) * (1.0 - kappa) * P2;
    const double a = 1.0 / (1.0 + resid);
    const double sd2 = std::sqrt(P2);

    double sum = 0.0, sq = 0.0, cost_sum = 0.0, cost_sq = 0.0;
    for (long long i = 0; i < cfg.samples; ++i) {
        std::uint64_t k = std::uint64_t(i) * 2;
        double s1 = rng.normal(k);
        double s2 = sd2 * rng.normal(k + 1);
        double x = -kappa * s2;
        double y = x + s1 + s2;
        double e = s1 - a * y;
        sum += e * e;
        sq += e * e * e * e;
        cost_sum += x * x;
        cost_sq += x * x * x * x;
    }
    SimResult out;
    out.samples = cfg.samples;
    double n = double(cfg.samples);
    out.distortion_hat = sum / n;
    out.stderr_hat = std::sqrt(std::max(0.0, sq / n - out.distortion_hat * out.distortion_hat) / n);
    out.cost_hat = cost_sum / n;
    out.cost_stderr = std::sqrt(std::max(0.0, cost_sq / n - out.cost_hat * out.cost_hat) / n);
    return out;
}

// Paired empirically-optimal reconstructions of S1 and of Z = X^S2 from the
// same simulated batch. The two optimal error counts coincide exactly
// because shat(y) is optimal for S1 iff shat(y)^y is optimal for Z.
struct PairedCounts {
    long long s1_errors = 0;
    long long z_errors = 0;
    long long samples = 0;
};

inline PairedCounts claim2_paired_counts(double p1, double p2, double cost,
                                         const SimConfig& cfg) {
    cfg.validate();
    CounterRng rng{cfg.seed, 0x04};
    const double w = p2 > 0.0 ? std::min(1.0, cost / p2) : 0.0;
    long long joint_s1[2][2] = {{0, 0}, {0, 0}}; // [y][s1]
    long long joint_z[2][2] = {{0, 0}, {0, 0}};  // [y][z]
    for (long long i = 0; i < cfg.samples; ++i) {
        std::uint64_t k = std::uint64_t(i) * 4;
        int s1 = rng.u01(k) < p1;
        int s2 = rng.u01(k + 1) < p2;
        int x = (s2 != 0) && (rng.u01(k + 2) < w);
        int z = x ^ s2;
        int y = z ^ s1;
        joint_s1[y][s1]++;
        joint_z[y][z]++;
    }
    PairedCounts out;
    out.samples = cfg.samples;
    for (int y = 0; y < 2; ++y) {
        out.s1_errors += std::min(joint_s1[y][0], joint_s1[y][1]);
        out.z_errors += std::min(joint_z[y][0], joint_z[y][1]);
    }
    return out;
}

} // namespace helperbounds::mc

#endif
