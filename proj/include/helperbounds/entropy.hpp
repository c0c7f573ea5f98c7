#ifndef HELPERBOUNDS_ENTROPY_HPP
#define HELPERBOUNDS_ENTROPY_HPP

#include <cmath>
#include <stdexcept>

// Scalar binary-entropy primitives shared by every bound evaluator.
// All entropies here are in bits (log base 2).

namespace helperbounds {

// -p log2 p - (1-p) log2 (1-p), with 0 log 0 := 0 by continuity.
inline double h2(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("h2: probability outside [0,1]");
    double s = 0.0;
    if (p > 0.0) s -= p * std::log2(p);
    if (p < 1.0) s -= (1.0 - p) * std::log2(1.0 - p);
    return s;
}

// Lower-half inverse of h2: the unique p in [0,1/2] with h2(p) = t.
// Arguments below 0 or above 1 map to 0 (clamping convention used by the
// bound expressions, which treat a vacuous entropy budget as zero distortion).
// Bisection on [0,1/2], absolute tolerance 1e-12 in p.
inline double h2_inv(double t) {
    if (t < 0.0 || t > 1.0) return 0.0;
    if (t == 0.0) return 0.0;
    if (t >= 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    for (int it = 0; it < 200 && (hi - lo) > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        if (h2(mid) < t)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Binary convolution a*b = a(1-b) + b(1-a): crossover of two cascaded
// binary symmetric perturbations.
inline double bconv(double a, double b) {
    return a * (1.0 - b) + b * (1.0 - a);
}

// Entropy (bits) of a discrete distribution given as probabilities that
// need not be normalized-checked here; zero entries contribute nothing.
template <typename It>
inline double entropy_bits(It first, It last) {
    double s = 0.0;
    for (It it = first; it != last; ++it)
        if (*it > 0.0) s -= *it * std::log2(*it);
    return s;
}

} // namespace helperbounds

#endif
