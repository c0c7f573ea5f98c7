#ifndef HELPERBOUNDS_OPTIM_HPP
#define HELPERBOUNDS_OPTIM_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace helperbounds {

// Golden-section minimization on [a,b]. Assumes the bracket contains a
// single local minimum; callers seed it from a grid scan.
template <typename F>
inline double golden_min(F&& f, double a, double b, int iters = 80) {
    static const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters && (b - a) > 1e-14; ++i) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

template <typename F>
inline double golden_max(F&& f, double a, double b, int iters = 80) {
    return golden_min([&](double x) { return -f(x); }, a, b, iters);
}

// Nelder-Mead on n dimensions with box clamping. Deterministic: the simplex
// is built from the start point and fixed steps. Minimizes f.
struct NelderMead {
    int max_evals = 400;
    double tol = 1e-12;

    std::vector<double> lo, hi; // optional box, empty = unbounded

    std::vector<double> clamp(std::vector<double> x) const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (!lo.empty()) x[i] = std::max(x[i], lo[i]);
            if (!hi.empty()) x[i] = std::min(x[i], hi[i]);
        }
        return x;
    }

    template <typename F>
    std::pair<std::vector<double>, double> minimize(F&& f, std::vector<double> start,
                                                    double step = 0.1) {
        const std::size_t n = start.size();
        long evals = 0;
        auto eval = [&](const std::vector<double>& x) {
            ++evals;
            return f(clamp(x));
        };
        std::vector<std::vector<double>> pts(n + 1, start);
        std::vector<double> fv(n + 1);
        for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
        for (std::size_t i = 0; i <= n; ++i) fv[i] = eval(pts[i]);

        while (evals < max_evals) {
            // order
            std::vector<std::size_t> idx(n + 1);
            for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(),
                      [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
            if (fv[idx[n]] - fv[idx[0]] < tol) break;

            std::vector<double> centroid(n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[idx[i]][j] / double(n);

            auto blend = [&](double c) {
                std::vector<double> x(n);
                for (std::size_t j = 0; j < n; ++j)
                    x[j] = centroid[j] + c * (centroid[j] - pts[idx[n]][j]);
                return x;
            };

            auto xr = blend(1.0);
            double fr = eval(xr);
            if (fr < fv[idx[0]]) {
                auto xe = blend(2.0);
                double fe = eval(xe);
                if (fe < fr) { pts[idx[n]] = xe; fv[idx[n]] = fe; }
                else { pts[idx[n]] = xr; fv[idx[n]] = fr; }
            } else if (fr < fv[idx[n - 1]]) {
                pts[idx[n]] = xr; fv[idx[n]] = fr;
            } else {
                auto xc = blend(fr < fv[idx[n]] ? 0.5 : -0.5);
                double fc = eval(xc);
                if (fc < std::min(fr, fv[idx[n]])) {
                    pts[idx[n]] = xc; fv[idx[n]] = fc;
                } else {
                    // shrink toward best
                    for (std::size_t i = 1; i <= n; ++i) {
                        for (std::size_t j = 0; j < n; ++j)
                            pts[idx[i]][j] = 0.5 * (pts[idx[i]][j] + pts[idx[0]][j]);
                        fv[idx[i]] = eval(pts[idx[i]]);
                    }
                }
            }
        }
        std::size_t best = 0;
        for (std::size_t i = 1; i <= n; ++i)
            if (fv[i] < fv[best]) best = i;
        return {clamp(pts[best]), fv[best]};
    }
};

// Uniform grid helper: n points covering [a,b] inclusive (n >= 2), or the
// single point a when n == 1 or a == b.
inline std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v;
    if (n <= 1 || a == b) { v.push_back(a); return v; }
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * double(i) / double(n - 1));
    return v;
}

inline std::vector<double> logspace(double a, double b, int n) {
    std::vector<double> v = linspace(std::log(a), std::log(b), n);
    for (double& x : v) x = std::exp(x);
    return v;
}

} // namespace helperbounds

#endif
