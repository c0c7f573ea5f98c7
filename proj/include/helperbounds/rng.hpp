#ifndef HELPERBOUNDS_RNG_HPP
#define HELPERBOUNDS_RNG_HPP

#include <cmath>
#include <cstdint>

namespace helperbounds {

// Counter-based pseudorandom generator. Each draw is a pure function of
// (seed, stream, counter), so sample streams are reproducible and can be
// split across batches without shared state.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct CounterRng {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    std::uint64_t bits(std::uint64_t counter) const {
        return splitmix64(splitmix64(seed ^ 0x853c49e6748fea9bULL) +
                          splitmix64(stream * 0xda3e39cb94b95bdbULL + counter));
    }

    // uniform in [0,1)
    double u01(std::uint64_t counter) const {
        return double(bits(counter) >> 11) * 0x1.0p-53;
    }

    // standard normal via Box-Muller; consumes counters 2k and 2k+1
    double normal(std::uint64_t k) const {
        double u1 = u01(2 * k), u2 = u01(2 * k + 1);
        double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        return r * std::cos(6.283185307179586476925287 * u2);
    }
};

// Stateful convenience wrapper for optimizer restarts.
struct SeqRng {
    CounterRng rng;
    std::uint64_t ctr = 0;
    explicit SeqRng(std::uint64_t seed, std::uint64_t stream = 0) : rng{seed, stream} {}
    double u01() { return rng.u01(ctr++); }
    double uniform(double a, double b) { return a + (b - a) * u01(); }
    std::uint64_t index(std::uint64_t n) { return rng.bits(ctr++) % n; }
};

} // namespace helperbounds

#endif
