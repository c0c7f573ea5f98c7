#ifndef HELPERBOUNDS_BOUND_RESULT_HPP
#define HELPERBOUNDS_BOUND_RESULT_HPP

#include <string>
#include <utility>
#include <vector>

namespace helperbounds {

enum class BoundKind { lower, upper, exact };

inline const char* to_string(BoundKind k) {
    switch (k) {
        case BoundKind::lower: return "lower";
        case BoundKind::upper: return "upper";
        case BoundKind::exact: return "exact";
    }
    return "?";
}

// Value of a distortion bound together with the parameters that achieved it
// and a rough count of objective evaluations spent finding it.
struct BoundResult {
    double value = 0.0;
    BoundKind kind = BoundKind::lower;
    std::vector<std::pair<std::string, double>> params;
    long long evaluations = 0;
    std::string diagnostic;

    double param(const std::string& name, double fallback = 0.0) const {
        for (const auto& kv : params)
            if (kv.first == name) return kv.second;
        return fallback;
    }
};

} // namespace helperbounds

#endif
