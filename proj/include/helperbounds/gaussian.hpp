#ifndef HELPERBOUNDS_GAUSSIAN_HPP
#define HELPERBOUNDS_GAUSSIAN_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bound_result.hpp"
#include "optim.hpp"

// Gaussian estimation with helper: S1 ~ N(0,1), S2 ~ N(0,P2) independent,
// Y = X + S1 + S2, mean squared error, cost E[X^2] <= P.
// This module works in natural logarithms throughout.

namespace helperbounds::gaussian {

struct GaussianProblem {
    double power;              // P, helper power budget
    double interference_power; // P2

    GaussianProblem(double p, double p2) : power(p), interference_power(p2) {
        if (!(power >= 0.0)) throw std::invalid_argument("GaussianProblem: power < 0");
        if (!(interference_power >= 0.0)) throw std::invalid_argument("GaussianProblem: interference_power < 0");
    }
};

// ---------------------------------------------------------------------------
// Achievability via the hybrid-coding auxiliary U = X' + gamma*S2 with
// X = alpha*sqrt(P/P2)*S2 + X', E[S2 X'] = beta*sqrt(P2 P')
// ---------------------------------------------------------------------------

struct Thm5Eval {
    double d = 1.0;
    double margin = -1.0; // decodability slack (1-beta^2)P' - Var(U|Y)
    bool feasible = false;
};

inline Thm5Eval ach_thm5_eval(const GaussianProblem& prob, double alpha, double beta,
                              double gamma) {
    const double P = prob.power, P2 = prob.interference_power;
    Thm5Eval out;
    double disc = alpha * alpha * beta * beta * P + (1.0 - alpha * alpha) * P;
    if (disc < 0.0) return out;
    double sp = -alpha * beta * std::sqrt(P) + std::sqrt(disc); // sqrt(P')
    if (sp < 0.0) return out;
    double Pp = sp * sp;
    double spp2 = sp * std::sqrt(P2);
    double eu2 = Pp + 2.0 * gamma * beta * spp2 + gamma * gamma * P2;
    double euy = alpha * beta * std::sqrt(P) * sp + Pp + alpha * gamma * std::sqrt(P * P2) +
                 gamma * beta * spp2 + beta * spp2 + gamma * P2;
    double ey2 = P + 1.0 + P2 + 2.0 * alpha * std::sqrt(P * P2) + 2.0 * beta * spp2;
    if (ey2 <= 0.0) return out;
    double u_given_y = eu2 - euy * euy / ey2;
    out.margin = (1.0 - beta * beta) * Pp - u_given_y;
    out.feasible = out.margin > 1e-9;
    if (!out.feasible) return out;
    double det = ey2 * eu2 - euy * euy;
    if (det <= 0.0 || eu2 <= 0.0) {
        out.d = std::clamp(1.0 - 1.0 / ey2, 0.0, 1.0);
        return out;
    }
    out.d = std::clamp(1.0 - eu2 / det, 0.0, 1.0);
    return out;
}

inline BoundResult ach_thm5(const GaussianProblem& prob, long long budget = 10000) {
    const double P = prob.power, P2 = prob.interference_power;
    BoundResult r;
    r.kind = BoundKind::upper;
    if (P <= 0.0) { // only the silent helper: MMSE of S1 from S1+S2
        r.value = P2 / (1.0 + P2);
        r.diagnostic = "no feasible auxiliary; helper silent";
        r.params = {{"alpha", 0.0}, {"beta", 0.0}, {"gamma", 0.0}};
        return r;
    }
    double best = std::numeric_limits<double>::infinity();
    double ba = 0, bb = 0, bg = 0;
    long long evals = 0;
    auto consider = [&](double a, double b, double g) {
        Thm5Eval e = ach_thm5_eval(prob, a, b, g);
        ++evals;
        if (e.feasible && e.d < best) {
            best = e.d;
            ba = a; bb = b; bg = g;
        }
    };
    consider(0.0, 0.0, 1.0); // interference presubtraction, D = 0 when decodable
    consider(0.0, 0.0, 0.0); // uncoded silent-equivalent point

    int n = std::max(5, int(std::cbrt(double(budget))));
    for (double a : linspace(-1.0, 1.0, n))
        for (double b : linspace(-1.0, 1.0, n))
            for (double g : linspace(-3.0, 3.0, n + 2))
                consider(a, b, g);

    if (std::isfinite(best)) {
        NelderMead nm;
        nm.max_evals = 600;
        nm.lo = {-1.0, -1.0, -8.0};
        nm.hi = {1.0, 1.0, 8.0};
        auto obj = [&](const std::vector<double>& x) {
            Thm5Eval e = ach_thm5_eval(prob, x[0], x[1], x[2]);
            ++evals;
            return e.feasible ? e.d : 10.0;
        };
        auto [xb, fb] = nm.minimize(obj, {ba, bb, bg}, 0.05);
        if (fb < best) { best = fb; ba = xb[0]; bb = xb[1]; bg = xb[2]; }
    }
    if (!std::isfinite(best)) {
        r.value = P2 / (1.0 + P2);
        r.diagnostic = "no feasible auxiliary; helper silent";
        r.params = {{"alpha", 0.0}, {"beta", 0.0}, {"gamma", 0.0}};
        return r;
    }
    r.value = std::clamp(best, 0.0, 1.0);
    r.params = {{"alpha", ba}, {"beta", bb}, {"gamma", bg}};
    r.evaluations = evals;
    return r;
}

// Zero expected distortion is achievable when the presubtraction auxiliary
// U = X + S2 is decodable: P > 1 - 1/(P + P2 + 1).
inline bool zero_dist_gaussian(const GaussianProblem& prob) {
    return prob.power > 1.0 - 1.0 / (prob.power + prob.interference_power + 1.0);
}

// ---------------------------------------------------------------------------
// Closed-form lower bounds via the residual-interference argument
// ---------------------------------------------------------------------------

inline BoundResult lb_gs(const GaussianProblem& prob) {
    const double P = prob.power, P2 = prob.interference_power;
    BoundResult r;
    r.kind = BoundKind::lower;
    double t = std::sqrt(P2 / (P2 + 2.0 * std::sqrt(P * P2) + P + 1.0)) - std::sqrt(P);
    double pos = std::max(0.0, t);
    r.value = pos * pos;
    r.evaluations = 1;
    return r;
}

// Discretized min-sup form of the strengthened bound: minimize over a grid
// of admissible correlations sigma = E[X S2], sup over gamma > 0. The sigma
// discretization makes this an upper bound on the continuum expression.
inline BoundResult lb_gws(const GaussianProblem& prob, int grid_size = 401) {
    const double P = prob.power, P2 = prob.interference_power;
    if (grid_size < 2) throw std::invalid_argument("lb_gws: grid_size < 2");
    BoundResult r;
    r.kind = BoundKind::lower;
    r.diagnostic = "sigma-discretized (upper bound on the continuum min-sup)";
    double sbar = std::sqrt(P2 * P);
    long long evals = 0;

    auto value_at = [&](double sigma, double gamma) {
        double A = std::sqrt(P2 / (1.0 + P2 + P + 2.0 * sigma));
        double q = (1.0 - gamma) * (1.0 - gamma) * P2 + gamma * gamma * P -
                   2.0 * gamma * (1.0 - gamma) * sigma;
        double t = A - std::sqrt(std::max(0.0, q));
        double pos = std::max(0.0, t);
        ++evals;
        return pos * pos / (gamma * gamma);
    };

    static const std::vector<double> gammas = [] {
        std::vector<double> g = logspace(1e-4, 1e3, 420);
        for (double x : linspace(0.02, 3.0, 150)) g.push_back(x);
        std::sort(g.begin(), g.end());
        return g;
    }();

    double best = std::numeric_limits<double>::infinity();
    double bsig = 0.0, bgam = 1.0;
    std::vector<double> sigmas = sbar > 0.0 ? linspace(-sbar, sbar, grid_size)
                                            : std::vector<double>{0.0};
    for (double sigma : sigmas) {
        double sup = 0.0, gat = gammas.front();
        std::size_t gi = 0;
        for (std::size_t k = 0; k < gammas.size(); ++k) {
            double v = value_at(sigma, gammas[k]);
            if (v > sup) { sup = v; gat = gammas[k]; gi = k; }
        }
        double glo = gi > 0 ? gammas[gi - 1] : gammas.front();
        double ghi = gi + 1 < gammas.size() ? gammas[gi + 1] : gammas.back();
        double g = golden_max([&](double x) { return value_at(sigma, x); }, glo, ghi);
        double v = value_at(sigma, g);
        if (v > sup) { sup = v; gat = g; }
        if (sup < best) { best = sup; bsig = sigma; bgam = gat; }
    }
    r.value = best;
    r.params = {{"sigma", bsig}, {"gamma", bgam}};
    r.evaluations = evals;
    return r;
}

// ---------------------------------------------------------------------------
// Mismatched-estimation family: decoder pretending X = c*S2 + N(0, rP)
// ---------------------------------------------------------------------------

struct VerduParams {
    double gamma = 2.0; // >= 1
    double c = 0.0;
    double r = 0.0;     // >= 0

    VerduParams(double g, double c_, double r_) : gamma(g), c(c_), r(r_) {
        if (!(gamma >= 1.0)) throw std::invalid_argument("VerduParams: gamma < 1");
        if (!(r >= 0.0)) throw std::invalid_argument("VerduParams: r < 0");
    }
};

inline BoundResult lb_thm7(const GaussianProblem& prob, const VerduParams& vp) {
    const double P = prob.power, P2 = prob.interference_power;
    const double g = vp.gamma, c = vp.c, rr = vp.r;
    BoundResult res;
    res.kind = BoundKind::lower;
    res.params = {{"gamma", g}, {"c", c}, {"r", rr}};
    if (P2 <= 0.0) {
        res.diagnostic = "degenerate: P2 = 0";
        return res;
    }
    double PI = (1.0 + c) * (1.0 + c) * P2 + rr * P;
    if (PI <= 0.0) {
        res.diagnostic = "degenerate: mismatched interference power = 0";
        return res;
    }
    if (g == 1.0) {
        res.diagnostic = "gamma = 1 degenerates the prefactor";
        return res;
    }
    double d1 = 1.0 + PI, dg = 1.0 + g * PI;
    double dr = 1.0 + g * rr * P;
    double A1 = 1.0 / (PI * d1) - 1.0 / (PI * dg);
    double a = A1 - g / dr;
    double b = std::abs(2.0 * (A1 + c * g / dr)) * std::sqrt(P2);
    double sqp = std::sqrt(P);
    double xs;
    if (a <= 0.0) xs = sqp;
    else if (b / (2.0 * a) < sqp) xs = b / (2.0 * a);
    else xs = sqp;
    double rhs = std::log(dg / d1) + 1.0 / dg - 1.0 / d1 - P2 / (PI * dg) + P2 / (PI * d1) -
                 c * c * g * P2 / dr - 1.0 / dr + 1.0 + std::log(1.0 / dr) + a * xs * xs -
                 b * xs;
    double raw = rhs / (g - 1.0);
    res.value = std::max(0.0, raw);
    res.params.push_back({"x_star", xs});
    res.params.push_back({"raw", raw});
    res.evaluations = 1;
    return res;
}

// Specialization c = 0, r = 0 of the family (mismatched decoder assumes a
// silent helper). Evaluated through the same machinery so the family
// specialization identity holds exactly.
inline BoundResult lb_prop6(const GaussianProblem& prob, double gamma) {
    if (!(gamma >= 1.0)) throw std::invalid_argument("lb_prop6: gamma < 1");
    return lb_thm7(prob, VerduParams(gamma, 0.0, 0.0));
}

inline BoundResult lb_prop6_max(const GaussianProblem& prob) {
    BoundResult best;
    best.kind = BoundKind::lower;
    double bg = 1.0;
    std::vector<double> gs = logspace(1.0 + 1e-6, 1e3, 201);
    for (double g : gs) {
        BoundResult r = lb_prop6(prob, g);
        if (r.value > best.value) { best = r; bg = g; }
    }
    double g = golden_max([&](double x) { return lb_prop6(prob, std::max(1.0, x)).value; },
                          std::max(1.0 + 1e-9, bg * 0.5), bg * 2.0);
    BoundResult r = lb_prop6(prob, std::max(1.0, g));
    if (r.value > best.value) { best = r; bg = g; }
    best.params = {{"gamma", bg}};
    best.evaluations = long(gs.size()) + 80;
    return best;
}

inline BoundResult lb_thm7_max(const GaussianProblem& prob) {
    BoundResult best;
    best.kind = BoundKind::lower;
    double bg = 2.0, bc = 0.0, br = 0.0;
    long long evals = 0;
    auto consider = [&](double g, double c, double rr) {
        if (!(g > 1.0) || !(rr >= 0.0)) return;
        BoundResult r = lb_thm7(prob, VerduParams(g, c, rr));
        ++evals;
        if (r.value > best.value) { best = r; bg = g; bc = c; br = rr; }
    };
    for (double g : logspace(1.0 + 1e-3, 1e3, 40))
        for (double c : linspace(-5.0, 5.0, 21))
            for (double rr : linspace(0.0, 10.0, 15)) consider(g, c, rr);
    // the c = r = 0 slice carries its own maximum
    BoundResult p6 = lb_prop6_max(prob);
    consider(p6.param("gamma"), 0.0, 0.0);

    NelderMead nm;
    nm.max_evals = 500;
    nm.lo = {1.0 + 1e-9, -10.0, 0.0};
    nm.hi = {1e6, 10.0, 100.0};
    auto obj = [&](const std::vector<double>& x) {
        BoundResult r = lb_thm7(prob, VerduParams(std::max(1.0, x[0]), x[1], std::max(0.0, x[2])));
        ++evals;
        return -r.value;
    };
    auto [xb, fb] = nm.minimize(obj, {bg, bc, br}, 0.1 * std::max(1.0, bg * 0.05));
    if (-fb > best.value) {
        best = lb_thm7(prob, VerduParams(std::max(1.0, xb[0]), xb[1], std::max(0.0, xb[2])));
        bg = xb[0]; bc = xb[1]; br = xb[2];
    }
    best.params = {{"gamma", bg}, {"c", bc}, {"r", br}};
    best.evaluations = evals;
    return best;
}

} // namespace helperbounds::gaussian

#endif
