#ifndef HELPERBOUNDS_GAUSSIAN_SV_HPP
#define HELPERBOUNDS_GAUSSIAN_SV_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bound_result.hpp"
#include "optim.hpp"

// Gaussian estimation where the helper knows both the source and the
// interference: S1 ~ N(0,P1), S2 ~ N(0,P2), Y = X + S1 + S2 + Z with
// Z ~ N(0,N), mean squared error, cost E[X^2] <= P.

namespace helperbounds::gaussiansv {

struct GaussianSVProblem {
    double p1;    // P1 > 0 source power
    double p2;    // P2 >= 0 interference power
    double power; // P >= 0
    double noise; // N > 0

    GaussianSVProblem(double p1_, double p2_, double power_, double noise_)
        : p1(p1_), p2(p2_), power(power_), noise(noise_) {
        if (!(p1 > 0.0)) throw std::invalid_argument("GaussianSVProblem: P1 must be > 0");
        if (!(p2 >= 0.0)) throw std::invalid_argument("GaussianSVProblem: P2 must be >= 0");
        if (!(power >= 0.0)) throw std::invalid_argument("GaussianSVProblem: P must be >= 0");
        if (!(noise > 0.0)) throw std::invalid_argument("GaussianSVProblem: N must be > 0");
    }
};

// ---------------------------------------------------------------------------
// Achievability: power split between dirty-paper coded transmission of a
// source description and uncoded forwarding of alpha*S1 + beta*S2
// ---------------------------------------------------------------------------

inline double ach_thm8_eval(const GaussianSVProblem& pr, double alpha, double beta) {
    const double P = pr.power, P1 = pr.p1, P2 = pr.p2, N = pr.noise;
    double coded = P * (1.0 - alpha * alpha - beta * beta);
    // (alpha sqrt(P/P1) + 1)^2 P1 and (beta sqrt(P/P2) + 1)^2 P2, expanded so
    // P1 or P2 = 0 stays finite
    double num1 = alpha * alpha * P + 2.0 * alpha * std::sqrt(P * P1) + P1;
    double den = beta * beta * P + 2.0 * beta * std::sqrt(P * P2) + P2 + coded + N;
    double f1 = 1.0 + num1 / den;
    double f2 = 1.0 + coded / N;
    return P1 / (f1 * f2);
}

inline BoundResult ach_thm8(const GaussianSVProblem& pr, long long budget = 4000) {
    BoundResult r;
    r.kind = BoundKind::upper;
    double best = std::numeric_limits<double>::infinity();
    double ba = 0.0, bb = 0.0;
    long long evals = 0;
    auto consider = [&](double a, double b) {
        if (a * a + b * b > 1.0) return;
        double d = ach_thm8_eval(pr, a, b);
        ++evals;
        if (d < best) { best = d; ba = a; bb = b; }
    };
    consider(0.0, 0.0);
    int nr = std::max(5, int(std::sqrt(double(budget) / 3.0)));
    for (double rad : linspace(0.0, 1.0, nr))
        for (double th : linspace(0.0, 6.283185307179586, 3 * nr))
            consider(rad * std::cos(th), rad * std::sin(th));

    NelderMead nm;
    nm.max_evals = 400;
    auto obj = [&](const std::vector<double>& x) {
        double a = x[0], b = x[1];
        double n2 = a * a + b * b;
        if (n2 > 1.0) { // project onto the disk
            double s = 1.0 / std::sqrt(n2);
            a *= s; b *= s;
        }
        ++evals;
        return ach_thm8_eval(pr, a, b);
    };
    auto [xb, fb] = nm.minimize(obj, {ba, bb}, 0.05);
    if (fb < best) {
        double n2 = xb[0] * xb[0] + xb[1] * xb[1];
        double s = n2 > 1.0 ? 1.0 / std::sqrt(n2) : 1.0;
        best = fb; ba = xb[0] * s; bb = xb[1] * s;
    }
    r.value = best;
    r.params = {{"alpha", ba}, {"beta", bb}};
    r.evaluations = evals;
    return r;
}

// ---------------------------------------------------------------------------
// Lower bounds
// ---------------------------------------------------------------------------

// side information S1 + S2 at the decoder
inline BoundResult lb_prop7(const GaussianSVProblem& pr) {
    BoundResult r;
    r.kind = BoundKind::lower;
    if (pr.p2 <= 0.0) {
        r.diagnostic = "degenerate: P2 = 0";
        return r;
    }
    r.value = pr.p1 / ((1.0 + pr.p1 / pr.p2) * (1.0 + pr.power / pr.noise));
    r.evaluations = 1;
    return r;
}

// side information S2 at the decoder
inline BoundResult lb_prop8(const GaussianSVProblem& pr) {
    BoundResult r;
    r.kind = BoundKind::lower;
    double s = std::sqrt(pr.power) + std::sqrt(pr.p1);
    r.value = pr.p1 / (1.0 + s * s / pr.noise);
    r.evaluations = 1;
    return r;
}

// ---------------------------------------------------------------------------
// MSE(alpha): box-constrained concave quadratic, solved in closed form
// ---------------------------------------------------------------------------

struct QuadSolution {
    double rho_xs1 = 0.0;
    double rho_xs2 = 0.0;
    double mse = 0.0;
};

// max over |rho_xs1| <= sqrt(P P1), |rho_xs2| <= sqrt(P P2) of
//   P + (1-a)^2 P2 + 2(1-a) rho_xs2 + N - ((1-a)a P2 + a rho_xs2 + rho_xs1)^2 / (P1 + a^2 P2)
// For fixed rho_xs2 the optimal rho_xs1 drives the squared term to its box
// minimum; what remains is a concave piecewise quadratic in rho_xs2 whose
// maximum sits at a box endpoint or a branch vertex.
inline QuadSolution mse_alpha(const GaussianSVProblem& pr, double alpha) {
    if (alpha == 0.0) throw std::invalid_argument("mse_alpha: alpha must be nonzero");
    const double P = pr.power, P1 = pr.p1, P2 = pr.p2, N = pr.noise;
    const double R1 = std::sqrt(P * P1), R2 = std::sqrt(P * P2);
    const double den = P1 + alpha * alpha * P2;
    const double A = (1.0 - alpha) * alpha * P2;

    auto eval = [&](double rho2) {
        double m = A + alpha * rho2;
        double excess = std::max(0.0, std::abs(m) - R1);
        return P + (1.0 - alpha) * (1.0 - alpha) * P2 + 2.0 * (1.0 - alpha) * rho2 + N -
               excess * excess / den;
    };

    std::vector<double> cands = {-R2, R2, 0.0};
    // boundary of the zero-penalty band |A + alpha rho2| <= R1
    cands.push_back((R1 - A) / alpha);
    cands.push_back((-R1 - A) / alpha);
    // stationary points of the two penalized branches
    cands.push_back((R1 + (1.0 - alpha) * den / alpha - A) / alpha);
    cands.push_back((-R1 + (1.0 - alpha) * den / alpha - A) / alpha);

    QuadSolution sol;
    double best = -std::numeric_limits<double>::infinity();
    // prefer the smallest |rho2| among ties
    std::sort(cands.begin(), cands.end(),
              [](double x, double y) { return std::abs(x) < std::abs(y) ||
                                              (std::abs(x) == std::abs(y) && x < y); });
    for (double c : cands) {
        double rho2 = std::clamp(c, -R2, R2);
        double v = eval(rho2);
        double tol = std::isfinite(best) ? 1e-15 * std::max(1.0, std::abs(best)) : 0.0;
        if (v > best + tol) {
            best = v;
            sol.rho_xs2 = rho2;
        }
    }
    double m = A + alpha * sol.rho_xs2;
    sol.rho_xs1 = std::clamp(-m, -R1, R1);
    sol.mse = best;
    return sol;
}

// D >= (a^2 P1 P2 / (P1 + a^2 P2)) N / MSE(a) for every nonzero alpha.
inline BoundResult lb_thm9(const GaussianSVProblem& pr, const std::vector<double>& alpha_grid) {
    if (alpha_grid.empty()) throw std::invalid_argument("lb_thm9: empty alpha grid");
    BoundResult r;
    r.kind = BoundKind::lower;
    double balpha = alpha_grid.front();
    for (double a : alpha_grid) {
        if (a == 0.0) throw std::invalid_argument("lb_thm9: alpha grid contains 0");
        QuadSolution q = mse_alpha(pr, a);
        double coef = a * a * pr.p1 * pr.p2 / (pr.p1 + a * a * pr.p2);
        double v = coef * pr.noise / q.mse;
        ++r.evaluations;
        if (v > r.value) { r.value = v; balpha = a; }
    }
    r.params = {{"alpha", balpha}};
    return r;
}

inline std::vector<double> default_alpha_grid() {
    std::vector<double> g;
    for (double a : logspace(1e-2, 1e3, 201)) {
        g.push_back(a);
        g.push_back(-a);
    }
    g.push_back(1.0);
    std::sort(g.begin(), g.end());
    return g;
}

inline BoundResult lb_thm9(const GaussianSVProblem& pr) { return lb_thm9(pr, default_alpha_grid()); }

// ---------------------------------------------------------------------------
// Constant multiplicative gap certificate
// ---------------------------------------------------------------------------

struct GapCertificate {
    double threshold = 0.0; // on sqrt(P2)
    bool certified = false;
    double ratio = 0.0;     // achievable / lower-bound
    double epsilon = 0.0;
};

inline GapCertificate gap_thm10(const GaussianSVProblem& pr, double epsilon) {
    const double P = pr.power, N = pr.noise;
    if (!(P > 0.0)) throw std::domain_error("gap_thm10: P must be > 0");
    if (!(epsilon > 0.0 && epsilon <= P / (P + N)))
        throw std::domain_error("gap_thm10: epsilon outside (0, P/(P+N)]");
    GapCertificate out;
    out.epsilon = epsilon;
    double g = std::sqrt(epsilon * (P + N) / (2.0 * P));
    double gp = g * std::sqrt(P);
    double term = gp * (2.0 + gp);
    out.threshold = (std::sqrt(g * g * P + term * (P * (1.0 - g * g) + N)) - gp) / term;
    out.certified = std::sqrt(pr.p2) >= out.threshold;

    BoundResult ach = ach_thm8(pr);
    // the proof's witness point alpha = -beta = gamma
    double witness = ach_thm8_eval(pr, g, -g);
    double up = std::min(ach.value, witness);
    BoundResult lo = lb_prop7(pr);
    out.ratio = lo.value > 0.0 ? up / lo.value : std::numeric_limits<double>::infinity();
    return out;
}

} // namespace helperbounds::gaussiansv

#endif
