#ifndef HELPERBOUNDS_ERASURE_HPP
#define HELPERBOUNDS_ERASURE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bound_result.hpp"

// Erasure estimation with helper: S1 ~ p(s1) over a finite alphabet,
// S2 ~ Bern(p2), X in {0,1}; Y = S1 when X^S2 = 0 and an erasure symbol
// otherwise. The distortion-cost region is exact here.

namespace helperbounds::erasure {

struct ErasureProblem {
    std::vector<double> source_dist;         // p(s1)
    double p2;                               // erasure-trigger bias
    double cost;                             // C = budget on E[X]
    std::vector<std::vector<double>> dmat;   // d(s1, shat) >= 0

    ErasureProblem(std::vector<double> dist, double p2_, double cost_,
                   std::vector<std::vector<double>> d)
        : source_dist(std::move(dist)), p2(p2_), cost(cost_), dmat(std::move(d)) {
        if (source_dist.empty()) throw std::invalid_argument("ErasureProblem: empty source");
        double s = 0.0;
        for (double p : source_dist) {
            if (p < 0.0) throw std::invalid_argument("ErasureProblem: negative mass");
            s += p;
        }
        if (std::abs(s - 1.0) > 1e-12) throw std::invalid_argument("ErasureProblem: source does not sum to 1");
        if (!(p2 >= 0.0 && p2 <= 1.0)) throw std::invalid_argument("ErasureProblem: p2 outside [0,1]");
        if (!(cost >= 0.0 && cost <= 1.0)) throw std::invalid_argument("ErasureProblem: cost outside [0,1]");
        if (dmat.size() != source_dist.size())
            throw std::invalid_argument("ErasureProblem: distortion rows != source alphabet");
        std::size_t cols = dmat.front().size();
        if (cols == 0) throw std::invalid_argument("ErasureProblem: empty reconstruction alphabet");
        for (const auto& row : dmat) {
            if (row.size() != cols) throw std::invalid_argument("ErasureProblem: ragged distortion matrix");
            for (double v : row)
                if (v < 0.0) throw std::invalid_argument("ErasureProblem: negative distortion");
        }
    }

    static ErasureProblem bernoulli_hamming(double p1, double p2, double cost) {
        return ErasureProblem({1.0 - p1, p1}, p2, cost, {{0.0, 1.0}, {1.0, 0.0}});
    }

    // best single reconstruction against the prior: min_shat E d(S1, shat)
    double prior_optimal_distortion(std::size_t* arg = nullptr) const {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0;
        for (std::size_t j = 0; j < dmat.front().size(); ++j) {
            double e = 0.0;
            for (std::size_t i = 0; i < source_dist.size(); ++i) e += source_dist[i] * dmat[i][j];
            if (e < best) { best = e; bi = j; }
        }
        if (arg) *arg = bi;
        return best;
    }

    // E[min_shat d(S1, shat)]: per-symbol best once S1 is seen
    double clear_channel_distortion() const {
        double e = 0.0;
        for (std::size_t i = 0; i < source_dist.size(); ++i)
            e += source_dist[i] * *std::min_element(dmat[i].begin(), dmat[i].end());
        return e;
    }
};

// Exact distortion-cost value. Spending the whole budget on cancellation
// minimizes the erasure probability at [p2 - C]^+; erased symbols pay the
// prior-optimal distortion, clear symbols the per-symbol minimum.
inline BoundResult dmin_erasure(const ErasureProblem& prob) {
    BoundResult r;
    r.kind = BoundKind::exact;
    double pe = std::max(0.0, prob.p2 - prob.cost);
    double erased = prob.prior_optimal_distortion();
    double clear = prob.clear_channel_distortion();
    r.value = pe * erased + (1.0 - pe) * clear;
    r.params = {{"p_erase", pe}, {"erased_term", erased}, {"clear_term", clear}};
    r.evaluations = 1;
    return r;
}

} // namespace helperbounds::erasure

#endif
