#ifndef HELPERBOUNDS_BINARY_HPP
#define HELPERBOUNDS_BINARY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bound_result.hpp"
#include "entropy.hpp"
#include "optim.hpp"
#include "rng.hpp"

// Binary estimation-with-helper bounds. The setting: S1 ~ Bern(p1),
// S2 ~ Bern(p2) independent, X in {0,1} chosen by a helper who sees S2,
// Y = X xor S1 xor S2, Hamming distortion on S1, cost E[X] <= C.

namespace helperbounds::binary {

struct BinaryProblem {
    double p1;   // source bias, in [0, 1/2]
    double p2;   // interference bias, in [0, 1/2]
    double cost; // C = budget on E[X], in [0, 1]

    BinaryProblem(double p1_, double p2_, double cost_) : p1(p1_), p2(p2_), cost(cost_) {
        if (!(p1 >= 0.0 && p1 <= 0.5)) throw std::invalid_argument("BinaryProblem: p1 outside [0,1/2]");
        if (!(p2 >= 0.0 && p2 <= 0.5)) throw std::invalid_argument("BinaryProblem: p2 outside [0,1/2]");
        if (!(cost >= 0.0 && cost <= 1.0)) throw std::invalid_argument("BinaryProblem: cost outside [0,1]");
    }
};

// p(x=1 | s2): q0 for s2=0, q1 for s2=1.
struct HelperPolicy {
    double q0 = 0.0;
    double q1 = 0.0;

    double expected_cost(double p2) const { return q0 * (1.0 - p2) + q1 * p2; }
    // crossover of the residual Z = X xor S2
    double residual(double p2) const { return q0 * (1.0 - p2) + (1.0 - q1) * p2; }
};

// Auxiliary U with |U| <= 4, conditional p(u|s2) (one row per s2 value) and
// a deterministic map x = f(u, s2) packed as a bitmask: bit (2u + s2).
struct AuxiliaryPolicy {
    int u_size = 1;
    std::array<std::array<double, 4>, 2> pu_given_s2{{{1, 0, 0, 0}, {1, 0, 0, 0}}};
    std::uint8_t f = 0;

    int x(int u, int s2) const { return (f >> (2 * u + s2)) & 1; }

    void validate() const {
        if (u_size < 1 || u_size > 4) throw std::invalid_argument("AuxiliaryPolicy: u_size outside [1,4]");
        for (int s2 = 0; s2 < 2; ++s2) {
            double s = 0.0;
            for (int u = 0; u < u_size; ++u) {
                if (pu_given_s2[s2][u] < -1e-15) throw std::invalid_argument("AuxiliaryPolicy: negative mass");
                s += pu_given_s2[s2][u];
            }
            if (std::abs(s - 1.0) > 1e-12) throw std::invalid_argument("AuxiliaryPolicy: row not stochastic");
        }
    }
};

// ---------------------------------------------------------------------------
// Joint statistics of (U, S2, Z=X^S2, Y=Z^S1) under an AuxiliaryPolicy
// ---------------------------------------------------------------------------

struct AuxStats {
    double ex = 0.0;      // E[X]
    double pz1 = 0.0;     // P(Z = 1)
    double hz_given_u = 0.0;
    double i_us2 = 0.0;
    double i_uz = 0.0;
    double hy = 0.0;
};

inline AuxStats aux_stats(const BinaryProblem& prob, const AuxiliaryPolicy& pol) {
    const double ps2[2] = {1.0 - prob.p2, prob.p2};
    AuxStats st;
    std::array<double, 4> pu{}, pz1_given_u_num{};
    std::array<std::array<double, 2>, 4> puz{};
    for (int s2 = 0; s2 < 2; ++s2) {
        for (int u = 0; u < pol.u_size; ++u) {
            double m = ps2[s2] * pol.pu_given_s2[s2][u];
            if (m <= 0.0) continue;
            int x = pol.x(u, s2);
            int z = x ^ s2;
            pu[u] += m;
            puz[u][z] += m;
            st.ex += m * x;
            st.pz1 += m * z;
            if (z) pz1_given_u_num[u] += m;
        }
    }
    double hu = 0.0, hu_given_s2 = 0.0, hu_given_z = 0.0;
    for (int u = 0; u < pol.u_size; ++u) {
        if (pu[u] > 0.0) {
            hu -= pu[u] * std::log2(pu[u]);
            st.hz_given_u += pu[u] * h2(pz1_given_u_num[u] / pu[u]);
        }
    }
    for (int s2 = 0; s2 < 2; ++s2) {
        double hrow = entropy_bits(pol.pu_given_s2[s2].begin(),
                                   pol.pu_given_s2[s2].begin() + pol.u_size);
        hu_given_s2 += ps2[s2] * hrow;
    }
    double pz[2] = {1.0 - st.pz1, st.pz1};
    for (int z = 0; z < 2; ++z) {
        if (pz[z] <= 0.0) continue;
        double h = 0.0;
        for (int u = 0; u < pol.u_size; ++u) {
            double c = puz[u][z] / pz[z];
            if (c > 0.0) h -= c * std::log2(c);
        }
        hu_given_z += pz[z] * h;
    }
    st.i_us2 = hu - hu_given_s2;
    st.i_uz = hu - hu_given_z;
    st.hy = h2(bconv(prob.p1, st.pz1));
    return st;
}

// ---------------------------------------------------------------------------
// Exact p1 = 1/2 region and zero-distortion certificates
// ---------------------------------------------------------------------------

// p1 = 1/2 exact region: D(C)min = p2 - C when p2 > C, else 0.
inline BoundResult dmin_half(double p2, double cost) {
    BoundResult r;
    r.kind = BoundKind::exact;
    r.value = std::max(0.0, p2 - cost);
    if (p2 <= cost) r.diagnostic = "cost covers full cancellation";
    return r;
}

struct ZeroDistCertificate {
    bool zero = false;
    double lhs_bits = 0.0; // H2(C)
    double rhs_bits = 0.0; // H(X^S2 | Y) under the Bern(C) witness
    double witness_cost = 0.0;
    std::string witness;
};

// Sufficient test for zero noncausal distortion: either C >= p2 (cancel S2
// outright), or H2(C) > H(X^S2 | Y) with X ~ Bern(C) independent of S2 and
// U = X^S2 decoded from Y.
inline ZeroDistCertificate zero_dist_noncausal(const BinaryProblem& prob) {
    ZeroDistCertificate cert;
    double z = bconv(prob.cost, prob.p2);
    cert.lhs_bits = h2(std::min(prob.cost, 1.0));
    cert.rhs_bits = h2(z) + h2(prob.p1) - h2(bconv(z, prob.p1));
    cert.witness_cost = prob.cost;
    if (prob.cost >= prob.p2) {
        cert.zero = true;
        cert.witness = "symbol-by-symbol cancellation x = s2";
    } else if (cert.lhs_bits > cert.rhs_bits) {
        cert.zero = true;
        cert.witness = "u = x^s2 with x ~ Bern(C) independent of s2";
    }
    return cert;
}

// Necessary condition for zero distortion with causal helper: h2(p1) <= 2C.
// A false return certifies D(C)_min-causal > 0.
inline bool causal_zero_necessary(double p1, double cost) {
    return h2(p1) <= 2.0 * cost;
}

// ---------------------------------------------------------------------------
// First lower bound: min over p(x|s2) of h2_inv(H(S1)+H(S2)-H(Y)) - E[X]
// ---------------------------------------------------------------------------

struct Thm3Options {
    int grid_n = 2001;
    bool force_grid = false;
};

// Closed form of the bound. The residual crossover pz ranges over
// [p2-C, p2+C] clipped to [0,1]; H(Y)=h2(bconv(p1,pz)) is maximized at an
// endpoint when bconv stays on one side of 1/2 over the range, and hits 1
// when the range straddles it. Spending the full budget (E[X]=C) is always
// optimal since the objective is decreasing in E[X].
inline BoundResult lb_cor2(const BinaryProblem& prob) {
    BoundResult r;
    r.kind = BoundKind::lower;
    const double p1 = prob.p1, p2 = prob.p2, C = prob.cost;
    if (C >= p2) {
        r.diagnostic = "vacuous: cost covers full cancellation";
        r.params = {{"pz", 0.0}};
        return r;
    }
    double lo = p2 - C, hi = std::min(1.0, p2 + C);
    double hmax, pz_at;
    if (p1 >= 0.5) {
        hmax = 1.0;
        pz_at = lo;
    } else {
        double pz_star = (0.5 - p1) / (1.0 - 2.0 * p1);
        if (pz_star <= lo) { // bconv >= 1/2 on the whole range
            hmax = h2(bconv(p1, lo));
            pz_at = lo;
        } else if (pz_star >= hi) { // bconv <= 1/2 on the whole range
            hmax = h2(bconv(p1, hi));
            pz_at = hi;
        } else {
            hmax = 1.0;
            pz_at = pz_star;
        }
    }
    r.value = std::max(0.0, h2_inv(h2(p1) + h2(p2) - hmax) - C);
    r.params = {{"pz", pz_at}};
    r.evaluations = 1;
    return r;
}

inline bool cor2_condition_holds(const BinaryProblem& prob) {
    double a = prob.p1 + (1.0 - 2.0 * prob.p1) * (prob.p2 - prob.cost);
    double b = prob.p1 + (1.0 - 2.0 * prob.p1) * (prob.p2 + prob.cost);
    return a >= 0.5 || b <= 0.5;
}

inline BoundResult lb_thm3(const BinaryProblem& prob, const Thm3Options& opt = {}) {
    const double p1 = prob.p1, p2 = prob.p2, C = prob.cost;
    if (!opt.force_grid && (C >= p2 || cor2_condition_holds(prob)))
        return lb_cor2(prob);

    const double h12 = h2(p1) + h2(p2);
    const double q0max = std::min(1.0, (1.0 - p2) > 0.0 ? C / (1.0 - p2) : 0.0);
    const double q1max = p2 > 0.0 ? std::min(1.0, C / p2) : 0.0;

    auto objective = [&](double q0, double q1) {
        HelperPolicy hp{q0, q1};
        double m = hp.expected_cost(p2);
        if (m > C + 1e-15) return std::numeric_limits<double>::infinity();
        // h2(a)+h2(b)-h2(a*b) <= 1; clamp fp overshoot so the inverse does
        // not snap a boundary argument of 1+eps down to 0
        double arg = std::min(1.0, h12 - h2(bconv(p1, hp.residual(p2))));
        return h2_inv(arg) - m;
    };

    BoundResult r;
    r.kind = BoundKind::lower;
    double best = std::numeric_limits<double>::infinity();
    double bq0 = 0.0, bq1 = 0.0;
    long long evals = 0;
    const int n = std::max(2, opt.grid_n);
    const int ni = q0max > 0.0 ? n : 1;
    const int nj = q1max > 0.0 ? n : 1;
    for (int i = 0; i < ni; ++i) {
        double q0 = q0max * double(i) / double(n - 1);
        double base0 = q0 * (1.0 - p2);
        for (int j = 0; j < nj; ++j) {
            double q1 = q1max * double(j) / double(n - 1);
            double m = base0 + q1 * p2;
            if (m > C + 1e-15) break; // m increases with j
            ++evals;
            double pz = base0 + (1.0 - q1) * p2;
            double arg = std::min(1.0, h12 - h2(bconv(p1, pz)));
            // rejection test: candidate beats `best` only if h2_inv(arg) < best+m
            double thresh = best + m;
            if (thresh <= 0.0) continue;
            if (arg >= 1.0) {
                if (0.5 - m >= best) continue;
            } else if (arg > 0.0 && thresh < 0.5 && arg >= h2(thresh)) {
                continue;
            }
            double val = (arg <= 0.0 ? 0.0 : h2_inv(arg)) - m;
            if (val < best) {
                best = val;
                bq0 = q0;
                bq1 = q1;
            }
        }
    }
    // local polish around the best grid cell
    double cell0 = q0max / double(n - 1), cell1 = q1max / double(n - 1);
    for (int round = 0; round < 3; ++round) {
        if (cell0 > 0.0) {
            double a = std::max(0.0, bq0 - 2 * cell0), b = std::min(q0max, bq0 + 2 * cell0);
            bq0 = golden_min([&](double q) { return objective(q, bq1); }, a, b);
        }
        if (cell1 > 0.0) {
            double a = std::max(0.0, bq1 - 2 * cell1), b = std::min(q1max, bq1 + 2 * cell1);
            bq1 = golden_min([&](double q) { return objective(bq0, q); }, a, b);
        }
        evals += 160;
    }
    best = std::min(best, objective(bq0, bq1));
    r.value = std::max(0.0, best);
    HelperPolicy hp{bq0, bq1};
    r.params = {{"q0", bq0}, {"q1", bq1}, {"pz", hp.residual(p2)}};
    r.evaluations = evals;
    return r;
}

// ---------------------------------------------------------------------------
// Gel'fand-Pinsker capacity with cost: max I(U;Z) - I(U;S2), E[X] <= C
// ---------------------------------------------------------------------------

struct GpOptions {
    int starts = 4;     // random restarts per deterministic map class
    int ba_iters = 150; // alternating-maximization iterations
};

namespace detail {

// Canonical classes of deterministic maps f: (u,s2) -> x under relabeling
// of u. Cuts the 256 masks down to the distinct multisets of per-u columns.
inline const std::vector<std::uint8_t>& f_classes() {
    static const std::vector<std::uint8_t> classes = [] {
        std::vector<std::uint8_t> out;
        std::set<std::array<int, 4>> seen;
        for (int f = 0; f < 256; ++f) {
            std::array<int, 4> cols{};
            for (int u = 0; u < 4; ++u)
                cols[u] = ((f >> (2 * u)) & 1) * 2 + ((f >> (2 * u + 1)) & 1);
            std::sort(cols.begin(), cols.end());
            if (seen.insert(cols).second) out.push_back(static_cast<std::uint8_t>(f));
        }
        return out;
    }();
    return classes;
}

// One pass of the alternating maximization for fixed map f and cost
// multiplier lambda. Updates rows in place; returns E[X].
inline double gp_ba_run(const BinaryProblem& prob, AuxiliaryPolicy& pol, double lambda,
                        int iters) {
    const double ps2[2] = {1.0 - prob.p2, prob.p2};
    double ex = 0.0;
    for (int it = 0; it < iters; ++it) {
        // posterior q(u|z)
        std::array<std::array<double, 2>, 4> puz{};
        double pz[2] = {0.0, 0.0};
        for (int s2 = 0; s2 < 2; ++s2)
            for (int u = 0; u < pol.u_size; ++u) {
                double m = ps2[s2] * pol.pu_given_s2[s2][u];
                int z = pol.x(u, s2) ^ s2;
                puz[u][z] += m;
                pz[z] += m;
            }
        // row update r(u|s2) ~ q(u|z(u,s2)) exp(-lambda x(u,s2))
        double delta = 0.0;
        for (int s2 = 0; s2 < 2; ++s2) {
            std::array<double, 4> w{};
            double tot = 0.0;
            for (int u = 0; u < pol.u_size; ++u) {
                int z = pol.x(u, s2) ^ s2;
                double q = pz[z] > 0.0 ? puz[u][z] / pz[z] : 0.0;
                w[u] = q * std::exp(-lambda * pol.x(u, s2));
                tot += w[u];
            }
            if (tot <= 0.0) continue;
            for (int u = 0; u < pol.u_size; ++u) {
                double nv = w[u] / tot;
                delta = std::max(delta, std::abs(nv - pol.pu_given_s2[s2][u]));
                pol.pu_given_s2[s2][u] = nv;
            }
        }
        if (delta < 1e-13) break;
    }
    ex = 0.0;
    for (int s2 = 0; s2 < 2; ++s2)
        for (int u = 0; u < pol.u_size; ++u)
            ex += ps2[s2] * pol.pu_given_s2[s2][u] * pol.x(u, s2);
    return ex;
}

} // namespace detail

// The Bern(C) presubtraction policy achieves exactly h2(min(C,1/2)); the
// alternating maximization explores the rest of the space. The reported
// value is always achieved by an explicit feasible policy.
inline BoundResult gp_capacity_cost(const BinaryProblem& prob, const GpOptions& opt = {},
                                    std::uint64_t seed = 0) {
    BoundResult r;
    r.kind = BoundKind::lower;
    const double C = prob.cost;

    // presubtraction witness u = x^s2, x ~ Bern(c0)
    double c0 = std::min(C, 0.5);
    AuxiliaryPolicy witness;
    witness.u_size = 2;
    witness.pu_given_s2 = {{{1.0 - c0, c0, 0, 0}, {c0, 1.0 - c0, 0, 0}}};
    witness.f = 0b0110; // f(u,s2) = u ^ s2
    AuxStats wst = aux_stats(prob, witness);
    double best = wst.i_uz - wst.i_us2;
    double best_ex = wst.ex;
    long long evals = 1;

    if (opt.starts > 0) {
        const double ps2[2] = {1.0 - prob.p2, prob.p2};
        for (std::uint8_t f : detail::f_classes()) {
            double mincost = 0.0;
            for (int s2 = 0; s2 < 2; ++s2) {
                int m = 1;
                for (int u = 0; u < 4; ++u) m = std::min(m, (f >> (2 * u + s2)) & 1);
                mincost += ps2[s2] * m;
            }
            if (mincost > C + 1e-12) continue;
            for (int s = 0; s < opt.starts; ++s) {
                SeqRng rng(splitmix64(seed ^ 0xc0ffee) ^ (std::uint64_t(f) << 16), s);
                AuxiliaryPolicy pol;
                pol.u_size = 4;
                pol.f = f;
                for (int s2 = 0; s2 < 2; ++s2) {
                    double tot = 0.0;
                    for (int u = 0; u < 4; ++u) {
                        pol.pu_given_s2[s2][u] = -std::log(1.0 - rng.u01());
                        tot += pol.pu_given_s2[s2][u];
                    }
                    for (int u = 0; u < 4; ++u) pol.pu_given_s2[s2][u] /= tot;
                }
                // smallest lambda >= 0 with E[X] <= C
                AuxiliaryPolicy pol0 = pol;
                double ex = detail::gp_ba_run(prob, pol0, 0.0, opt.ba_iters);
                ++evals;
                if (ex > C + 1e-12) {
                    double llo = 0.0, lhi = 60.0;
                    for (int b = 0; b < 40; ++b) {
                        double lam = 0.5 * (llo + lhi);
                        pol0 = pol;
                        ex = detail::gp_ba_run(prob, pol0, lam, opt.ba_iters);
                        ++evals;
                        if (ex > C + 1e-12) llo = lam; else lhi = lam;
                    }
                    pol0 = pol;
                    ex = detail::gp_ba_run(prob, pol0, lhi, opt.ba_iters);
                }
                if (ex > C + 1e-12) continue;
                AuxStats st = aux_stats(prob, pol0);
                double v = st.i_uz - st.i_us2;
                if (v > best) {
                    best = v;
                    best_ex = st.ex;
                }
            }
        }
    }
    // capacity with the state known at both ends caps the GP value at
    // h2(min(C, 1/2)); the witness attains it, so clamp out solver noise
    double cap = h2(c0);
    r.value = std::min(std::max(0.0, best), cap);
    r.params = {{"cost", best_ex}};
    r.evaluations = evals;
    return r;
}

// ---------------------------------------------------------------------------
// Corollary bound built on the GP maximization
// ---------------------------------------------------------------------------

inline BoundResult lb_cor4(const BinaryProblem& prob, const GpOptions& gp_opt = {},
                           std::uint64_t seed = 0) {
    const double p1 = prob.p1, p2 = prob.p2, C = prob.cost;
    double alo = std::max(0.0, p2 - C), ahi = std::min(1.0, p2 + C);
    auto g = [&](double a) { return h2(a) - h2(bconv(a, p1)); };
    double gmin = std::numeric_limits<double>::infinity(), amin = alo;
    const int n = 2001;
    for (int i = 0; i < n; ++i) {
        double a = alo + (ahi - alo) * double(i) / double(n - 1);
        double v = g(a);
        if (v < gmin) { gmin = v; amin = a; }
    }
    if (ahi > alo) {
        double cell = (ahi - alo) / double(n - 1);
        double a = golden_min(g, std::max(alo, amin - 2 * cell), std::min(ahi, amin + 2 * cell));
        if (g(a) < gmin) { gmin = g(a); amin = a; }
    }
    BoundResult gp = gp_capacity_cost(prob, gp_opt, seed);
    BoundResult r;
    r.kind = BoundKind::lower;
    r.value = std::max(0.0, h2_inv(h2(p1) + gmin - gp.value));
    r.params = {{"alpha", amin}, {"gp", gp.value}};
    r.evaluations = n + gp.evaluations;
    return r;
}

// ---------------------------------------------------------------------------
// Second lower bound: min over p(u|s2), x=f(u,s2) of
// h2_inv(H(S1) + H(Z|U) + I(U;S2) - H(Y)), E[X] <= C
// ---------------------------------------------------------------------------

namespace detail {

inline double thm4_arg(const BinaryProblem& prob, const AuxiliaryPolicy& pol) {
    AuxStats st = aux_stats(prob, pol);
    if (st.ex > prob.cost + 1e-12) return std::numeric_limits<double>::infinity();
    return h2(prob.p1) + st.hz_given_u + st.i_us2 - st.hy;
}

inline std::vector<AuxiliaryPolicy> structured_aux_seeds(const BinaryProblem& prob) {
    std::vector<AuxiliaryPolicy> seeds;
    const double p2 = prob.p2, C = prob.cost;
    // helper stays silent
    seeds.push_back(AuxiliaryPolicy{});
    // u tracks s2, x = 0
    {
        AuxiliaryPolicy s;
        s.u_size = 2;
        s.pu_given_s2 = {{{1, 0, 0, 0}, {0, 1, 0, 0}}};
        seeds.push_back(s);
    }
    // partial cancellation: u ~ Bern(w) independent of s2, x = u & s2
    if (p2 > 0.0) {
        for (double frac : {1.0, 0.5}) {
            double w = frac * std::min(1.0, C / p2);
            AuxiliaryPolicy s;
            s.u_size = 2;
            s.pu_given_s2 = {{{1.0 - w, w, 0, 0}, {1.0 - w, w, 0, 0}}};
            s.f = 0b1000; // x = 1 only at (u=1, s2=1)
            seeds.push_back(s);
        }
    }
    // presubtraction witness: u = x^s2, x ~ Bern(c0)
    {
        double c0 = std::min(C, 0.5);
        AuxiliaryPolicy s;
        s.u_size = 2;
        s.pu_given_s2 = {{{1.0 - c0, c0, 0, 0}, {c0, 1.0 - c0, 0, 0}}};
        s.f = 0b0110;
        seeds.push_back(s);
    }
    // full cancellation when affordable
    if (C >= p2) {
        AuxiliaryPolicy s;
        s.f = 0b0010; // x = s2 for u = 0
        seeds.push_back(s);
    }
    return seeds;
}

// Shrinking-step coordinate descent on the rows of p(u|s2).
template <typename Obj>
inline double aux_coordinate_descent(Obj&& obj, AuxiliaryPolicy& pol, double cur,
                                     long long& evals, int max_rounds = 60) {
    double step = 0.25;
    while (step > 1e-6 && max_rounds-- > 0) {
        bool improved = false;
        for (int s2 = 0; s2 < 2; ++s2) {
            for (int ui = 0; ui < pol.u_size; ++ui) {
                for (int uj = 0; uj < pol.u_size; ++uj) {
                    if (ui == uj) continue;
                    double d = std::min(step, pol.pu_given_s2[s2][ui]);
                    if (d <= 0.0) continue;
                    AuxiliaryPolicy cand = pol;
                    cand.pu_given_s2[s2][ui] -= d;
                    cand.pu_given_s2[s2][uj] += d;
                    double v = obj(cand);
                    ++evals;
                    if (v < cur - 1e-15) {
                        cur = v;
                        pol = cand;
                        improved = true;
                    }
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return cur;
}

} // namespace detail

// Heuristic minimization; the reported value can exceed the true minimum of
// the expression (it is still a valid lower bound on D(C)_min, which only
// requires the expression itself to be one).
inline BoundResult lb_thm4(const BinaryProblem& prob, int starts = 64, std::uint64_t seed = 0) {
    BoundResult r;
    r.kind = BoundKind::lower;
    r.diagnostic = "heuristic-min";
    auto obj = [&](const AuxiliaryPolicy& pol) { return detail::thm4_arg(prob, pol); };

    double best = std::numeric_limits<double>::infinity();
    AuxiliaryPolicy best_pol;
    bool arg_above_one = false; // h2_inv clamps arguments > 1 to 0
    long long evals = 0;
    for (const auto& s : detail::structured_aux_seeds(prob)) {
        double v = obj(s);
        ++evals;
        if (std::isfinite(v) && v > 1.0) arg_above_one = true;
        if (v < best) { best = v; best_pol = s; }
    }

    if (starts > 0) {
        const double ps2[2] = {1.0 - prob.p2, prob.p2};
        int runs_per_f = 1 + starts / 32;
        for (std::uint8_t f : detail::f_classes()) {
            double mincost = 0.0;
            for (int s2 = 0; s2 < 2; ++s2) {
                int m = 1;
                for (int u = 0; u < 4; ++u) m = std::min(m, (f >> (2 * u + s2)) & 1);
                mincost += ps2[s2] * m;
            }
            if (mincost > prob.cost + 1e-12) continue;
            for (int run = 0; run < runs_per_f; ++run) {
                SeqRng rng(splitmix64(seed ^ 0x7aa4) ^ (std::uint64_t(f) << 20), run);
                AuxiliaryPolicy pol;
                pol.u_size = 4;
                pol.f = f;
                for (int s2 = 0; s2 < 2; ++s2) {
                    double tot = 0.0;
                    for (int u = 0; u < 4; ++u) {
                        pol.pu_given_s2[s2][u] = run == 0 ? 0.25 : -std::log(1.0 - rng.u01());
                        tot += pol.pu_given_s2[s2][u];
                    }
                    for (int u = 0; u < 4; ++u) pol.pu_given_s2[s2][u] /= tot;
                }
                double v = obj(pol);
                ++evals;
                if (!std::isfinite(v)) continue;
                if (v > 1.0) arg_above_one = true;
                v = detail::aux_coordinate_descent(obj, pol, v, evals);
                if (v < best) { best = v; best_pol = pol; }
            }
        }
        // polish the incumbent
        double v = detail::aux_coordinate_descent(obj, best_pol, best, evals);
        best = std::min(best, v);
    }

    r.value = (arg_above_one || !std::isfinite(best)) ? 0.0 : h2_inv(best);
    r.params = {{"f", double(best_pol.f)}, {"arg", best}};
    for (int s2 = 0; s2 < 2; ++s2)
        for (int u = 0; u < best_pol.u_size; ++u)
            r.params.push_back({"p_u" + std::to_string(u) + "_s" + std::to_string(s2),
                                best_pol.pu_given_s2[s2][u]});
    r.evaluations = evals;
    return r;
}

// ---------------------------------------------------------------------------
// Achievability searches (upper bounds): every evaluated candidate is the
// exact distortion of a feasible single-letter policy.
// ---------------------------------------------------------------------------

struct AchStats {
    double distortion = std::numeric_limits<double>::infinity();
    double ex = 0.0;
    double i_uy = 0.0;
    double i_us2 = 0.0;
    bool feasible = false;
};

// Hybrid-coding achievability: u from p(u|s2), x=f(u,s2), reconstruction
// from (u,y); feasible when I(U;Y) >= I(U;S2) (boundary within 1e-9).
inline AchStats ach_thm2_eval(const BinaryProblem& prob, const AuxiliaryPolicy& pol) {
    const double p1 = prob.p1;
    const double ps2[2] = {1.0 - prob.p2, prob.p2};
    AchStats out;

    std::array<double, 4> pu{};
    std::array<std::array<double, 2>, 4> puy{}, w1{}, w0{};
    double ex = 0.0, hu_given_s2 = 0.0;
    for (int s2 = 0; s2 < 2; ++s2) {
        double hrow = entropy_bits(pol.pu_given_s2[s2].begin(),
                                   pol.pu_given_s2[s2].begin() + pol.u_size);
        hu_given_s2 += ps2[s2] * hrow;
        for (int u = 0; u < pol.u_size; ++u) {
            double m = ps2[s2] * pol.pu_given_s2[s2][u];
            if (m <= 0.0) continue;
            int x = pol.x(u, s2);
            int z = x ^ s2;
            ex += m * x;
            pu[u] += m;
            for (int y = 0; y < 2; ++y) {
                double py = (y == z) ? (1.0 - p1) : p1;
                puy[u][y] += m * py;
                // joint mass with s1 = y ^ z
                if ((y ^ z) == 1) w1[u][y] += m * p1;
                else w0[u][y] += m * (1.0 - p1);
            }
        }
    }
    double hu = 0.0, hy = 0.0, huy = 0.0;
    double py[2] = {0.0, 0.0};
    for (int u = 0; u < pol.u_size; ++u) {
        if (pu[u] > 0.0) hu -= pu[u] * std::log2(pu[u]);
        for (int y = 0; y < 2; ++y) {
            py[y] += puy[u][y];
            if (puy[u][y] > 0.0) huy -= puy[u][y] * std::log2(puy[u][y]);
        }
    }
    for (int y = 0; y < 2; ++y)
        if (py[y] > 0.0) hy -= py[y] * std::log2(py[y]);

    out.ex = ex;
    out.i_uy = hu + hy - huy;
    out.i_us2 = hu - hu_given_s2;
    out.feasible = (ex <= prob.cost + 1e-12) && (out.i_uy >= out.i_us2 - 1e-9);
    if (out.feasible) {
        double d = 0.0;
        for (int u = 0; u < pol.u_size; ++u)
            for (int y = 0; y < 2; ++y) d += std::min(w0[u][y], w1[u][y]);
        out.distortion = d;
    }
    return out;
}

inline BoundResult ach_thm2_binary(const BinaryProblem& prob, long long budget = 20000,
                                   std::uint64_t seed = 0) {
    BoundResult r;
    r.kind = BoundKind::upper;
    double best = std::numeric_limits<double>::infinity();
    AchStats best_st;
    long long evals = 0;
    auto consider = [&](const AuxiliaryPolicy& pol) {
        AchStats st = ach_thm2_eval(prob, pol);
        ++evals;
        if (st.feasible && st.distortion < best) {
            best = st.distortion;
            best_st = st;
        }
    };
    for (const auto& s : detail::structured_aux_seeds(prob)) consider(s);
    // presubtraction witness at a few cost levels
    for (double frac : {1.0, 0.9, 0.5}) {
        double c0 = frac * std::min(prob.cost, 0.5);
        AuxiliaryPolicy s;
        s.u_size = 2;
        s.pu_given_s2 = {{{1.0 - c0, c0, 0, 0}, {c0, 1.0 - c0, 0, 0}}};
        s.f = 0b0110;
        consider(s);
    }
    SeqRng rng(splitmix64(seed ^ 0x5eed2), 0);
    while (evals < budget) {
        AuxiliaryPolicy pol;
        pol.u_size = 1 + int(rng.index(4));
        pol.f = std::uint8_t(rng.index(256));
        for (int s2 = 0; s2 < 2; ++s2) {
            double tot = 0.0;
            for (int u = 0; u < pol.u_size; ++u) {
                pol.pu_given_s2[s2][u] = -std::log(1.0 - rng.u01());
                tot += pol.pu_given_s2[s2][u];
            }
            for (int u = 0; u < pol.u_size; ++u) pol.pu_given_s2[s2][u] /= tot;
        }
        consider(pol);
    }
    r.value = std::isfinite(best) ? best : std::min(prob.p1, 0.5);
    r.params = {{"cost", best_st.ex}, {"i_uy", best_st.i_uy}, {"i_us2", best_st.i_us2}};
    r.evaluations = evals;
    return r;
}

// ---------------------------------------------------------------------------
// Causal search over p(u) p(v|u,s2), x(u,s2), shat(u,v,y)
// ---------------------------------------------------------------------------

struct CausalPolicy {
    int u_size = 1;
    int v_size = 1;                                   // <= 12
    std::array<double, 4> pu{{1, 0, 0, 0}};           // p(u), independent of s2
    double pv[4][2][12] = {};                         // p(v | u, s2)
    std::uint8_t f = 0;                               // x(u, s2)

    CausalPolicy() { for (int u = 0; u < 4; ++u) for (int s = 0; s < 2; ++s) pv[u][s][0] = 1.0; }
    int x(int u, int s2) const { return (f >> (2 * u + s2)) & 1; }
};

struct CausalStats {
    double distortion = std::numeric_limits<double>::infinity();
    double ex = 0.0;
    double i_uy = 0.0;
    double i_vs2_uy = 0.0;
    bool feasible = false;
};

inline CausalStats causal_eval(const BinaryProblem& prob, const CausalPolicy& pol) {
    const double p1 = prob.p1;
    const double ps2[2] = {1.0 - prob.p2, prob.p2};
    CausalStats out;

    // joint over (u, v, s2, y) with s1 folded in through y = z ^ s1
    double ex = 0.0;
    double puy[4][2] = {};
    double pys[2] = {0.0, 0.0};
    double puvy[4][12][2] = {};
    double puvs2y[4][12][2][2] = {};
    for (int u = 0; u < pol.u_size; ++u) {
        for (int s2 = 0; s2 < 2; ++s2) {
            double mu = pol.pu[u] * ps2[s2];
            if (mu <= 0.0) continue;
            int z = pol.x(u, s2) ^ s2;
            ex += mu * pol.x(u, s2);
            for (int v = 0; v < pol.v_size; ++v) {
                double m = mu * pol.pv[u][s2][v];
                if (m <= 0.0) continue;
                for (int y = 0; y < 2; ++y) {
                    double py = (y == z) ? (1.0 - p1) : p1;
                    puvs2y[u][v][s2][y] += m * py;
                    puvy[u][v][y] += m * py;
                }
            }
            for (int y = 0; y < 2; ++y)
                puy[u][y] += mu * ((y == z) ? (1.0 - p1) : p1);
        }
    }
    // I(U;Y)
    double hu = 0.0, hy = 0.0, huy = 0.0;
    for (int u = 0; u < pol.u_size; ++u) {
        double puu = 0.0;
        for (int y = 0; y < 2; ++y) {
            puu += puy[u][y];
            pys[y] += puy[u][y];
            if (puy[u][y] > 0.0) huy -= puy[u][y] * std::log2(puy[u][y]);
        }
        if (puu > 0.0) hu -= puu * std::log2(puu);
    }
    for (int y = 0; y < 2; ++y)
        if (pys[y] > 0.0) hy -= pys[y] * std::log2(pys[y]);
    out.i_uy = hu + hy - huy;

    // I(V;S2|U,Y) = H(V|U,Y) + H(S2|U,Y) - H(V,S2|U,Y)
    double hv_uy = 0.0, hs2_uy = 0.0, hvs2_uy = 0.0;
    for (int u = 0; u < pol.u_size; ++u)
        for (int y = 0; y < 2; ++y) {
            double m = puy[u][y];
            if (m <= 0.0) continue;
            double hv = 0.0, hvs = 0.0, hs = 0.0;
            double s2m[2] = {0.0, 0.0};
            for (int v = 0; v < pol.v_size; ++v) {
                double pv_ = puvy[u][v][y] / m;
                if (pv_ > 0.0) hv -= pv_ * std::log2(pv_);
                for (int s2 = 0; s2 < 2; ++s2) {
                    double c = puvs2y[u][v][s2][y] / m;
                    s2m[s2] += c;
                    if (c > 0.0) hvs -= c * std::log2(c);
                }
            }
            for (int s2 = 0; s2 < 2; ++s2)
                if (s2m[s2] > 0.0) hs -= s2m[s2] * std::log2(s2m[s2]);
            hv_uy += m * hv;
            hs2_uy += m * hs;
            hvs2_uy += m * hvs;
        }
    out.i_vs2_uy = hv_uy + hs2_uy - hvs2_uy;
    out.ex = ex;
    out.feasible = (ex <= prob.cost + 1e-12) && (out.i_uy >= out.i_vs2_uy - 1e-9);
    if (!out.feasible) return out;

    // optimal reconstruction shat(u,v,y): joint mass with s1 = y ^ z
    double d = 0.0;
    for (int u = 0; u < pol.u_size; ++u)
        for (int v = 0; v < pol.v_size; ++v)
            for (int y = 0; y < 2; ++y) {
                double w0 = 0.0, w1 = 0.0;
                for (int s2 = 0; s2 < 2; ++s2) {
                    double mu = pol.pu[u] * ps2[s2] * pol.pv[u][s2][v];
                    if (mu <= 0.0) continue;
                    int z = pol.x(u, s2) ^ s2;
                    if ((y ^ z) == 1) w1 += mu * p1;
                    else w0 += mu * (1.0 - p1);
                }
                d += std::min(w0, w1);
            }
    out.distortion = d;
    return out;
}

inline BoundResult causal_search(const BinaryProblem& prob, long long budget = 100000,
                                 std::uint64_t seed = 0) {
    BoundResult r;
    r.kind = BoundKind::upper;
    double best = std::numeric_limits<double>::infinity();
    CausalStats best_st;
    long long evals = 0;
    auto consider = [&](const CausalPolicy& pol) {
        CausalStats st = causal_eval(prob, pol);
        ++evals;
        if (st.feasible && st.distortion < best) {
            best = st.distortion;
            best_st = st;
            return true;
        }
        return false;
    };

    // structured seeds: randomized partial cancellation x = u & s2,
    // u ~ Bern(w) independent of s2, v unused
    double wmax = prob.p2 > 0.0 ? std::min(1.0, prob.cost / prob.p2) : 0.0;
    for (int i = 0; i <= 20; ++i) {
        CausalPolicy pol;
        double w = wmax * double(i) / 20.0;
        pol.u_size = 2;
        pol.pu = {1.0 - w, w, 0, 0};
        pol.f = 0b1000;
        consider(pol);
    }
    consider(CausalPolicy{}); // silent helper
    if (prob.cost >= prob.p2) {
        CausalPolicy pol;
        pol.f = 0b0010; // x = s2
        consider(pol);
    }

    SeqRng rng(splitmix64(seed ^ 0xca05a1), 1);
    static const int vsizes[4] = {1, 2, 4, 12};
    while (evals < budget) {
        CausalPolicy pol;
        pol.u_size = 1 + int(rng.index(4));
        pol.v_size = vsizes[rng.index(4)];
        pol.f = std::uint8_t(rng.index(256));
        double tot = 0.0;
        for (int u = 0; u < pol.u_size; ++u) {
            pol.pu[u] = -std::log(1.0 - rng.u01());
            tot += pol.pu[u];
        }
        for (int u = 0; u < pol.u_size; ++u) pol.pu[u] /= tot;
        for (int u = 0; u < pol.u_size; ++u)
            for (int s2 = 0; s2 < 2; ++s2) {
                double t = 0.0;
                for (int v = 0; v < pol.v_size; ++v) {
                    pol.pv[u][s2][v] = -std::log(1.0 - rng.u01());
                    t += pol.pv[u][s2][v];
                }
                for (int v = 0; v < pol.v_size; ++v) pol.pv[u][s2][v] /= t;
            }
        consider(pol);
    }
    r.value = std::isfinite(best) ? best : std::min(prob.p1, 0.5);
    r.params = {{"cost", best_st.ex}, {"i_uy", best_st.i_uy}, {"i_vs2_uy", best_st.i_vs2_uy}};
    r.evaluations = evals;
    return r;
}

} // namespace helperbounds::binary

#endif
