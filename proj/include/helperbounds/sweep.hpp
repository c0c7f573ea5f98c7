#ifndef HELPERBOUNDS_SWEEP_HPP
#define HELPERBOUNDS_SWEEP_HPP

#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "binary.hpp"
#include "erasure.hpp"
#include "gaussian.hpp"
#include "gaussian_sv.hpp"

// One-dimensional parameter sweeps over a problem family, emitted as CSV.
// This is the engine behind the `sweep` subcommand; the spec-file format is
// line-oriented `key = value` with `#` comments.

namespace helperbounds::sweep {

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Setting { binary, gaussian, gaussian_sv, erasure };

inline Setting setting_from_string(const std::string& s) {
    if (s == "binary") return Setting::binary;
    if (s == "gaussian") return Setting::gaussian;
    if (s == "gaussian_sv") return Setting::gaussian_sv;
    if (s == "erasure") return Setting::erasure;
    throw SpecError("unknown setting: " + s);
}

struct SweepSpec {
    Setting setting = Setting::binary;
    std::string sweep_var;
    double lo = 0.0, hi = 1.0;
    int steps = 2;
    std::map<std::string, double> fixed;
    std::vector<std::string> bounds;
};

struct RunOptions {
    std::uint64_t seed = 0;
    long long budget = 0; // 0 = per-evaluator defaults
};

// ---------------------------------------------------------------------------
// bound registry
// ---------------------------------------------------------------------------

namespace detail {

inline double need(const std::map<std::string, double>& kv, const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw SpecError("missing parameter: " + k);
    return it->second;
}

struct BoundDef {
    std::vector<std::string> param_cols;
    BoundResult (*eval)(const std::map<std::string, double>&, const RunOptions&);
};

inline const std::map<std::string, std::vector<std::string>>& setting_vars() {
    static const std::map<std::string, std::vector<std::string>> m = {
        {"binary", {"p1", "p2", "C"}},
        {"gaussian", {"P", "P2"}},
        {"gaussian_sv", {"P1", "P2", "P", "N"}},
        {"erasure", {"p1", "p2", "C"}},
    };
    return m;
}

inline binary::BinaryProblem mk_binary(const std::map<std::string, double>& kv) {
    return binary::BinaryProblem(need(kv, "p1"), need(kv, "p2"), need(kv, "C"));
}
inline gaussian::GaussianProblem mk_gaussian(const std::map<std::string, double>& kv) {
    return gaussian::GaussianProblem(need(kv, "P"), need(kv, "P2"));
}
inline gaussiansv::GaussianSVProblem mk_sv(const std::map<std::string, double>& kv) {
    return gaussiansv::GaussianSVProblem(need(kv, "P1"), need(kv, "P2"), need(kv, "P"),
                                         need(kv, "N"));
}

inline const std::map<Setting, std::map<std::string, BoundDef>>& registry() {
    static const std::map<Setting, std::map<std::string, BoundDef>> reg = [] {
        std::map<Setting, std::map<std::string, BoundDef>> r;
        auto& b = r[Setting::binary];
        b["thm3"] = {{"q0", "q1"}, [](const std::map<std::string, double>& kv, const RunOptions&) {
                         return binary::lb_thm3(mk_binary(kv));
                     }};
        b["cor2"] = {{"pz"}, [](const std::map<std::string, double>& kv, const RunOptions&) {
                         return binary::lb_cor2(mk_binary(kv));
                     }};
        b["thm4"] = {{"f"}, [](const std::map<std::string, double>& kv, const RunOptions& o) {
                         int starts = o.budget > 0 ? int(std::min<long long>(o.budget, 1024)) : 64;
                         return binary::lb_thm4(mk_binary(kv), starts, o.seed);
                     }};
        b["cor4"] = {{"alpha", "gp"}, [](const std::map<std::string, double>& kv, const RunOptions& o) {
                         return binary::lb_cor4(mk_binary(kv), binary::GpOptions{}, o.seed);
                     }};
        b["gp"] = {{"cost"}, [](const std::map<std::string, double>& kv, const RunOptions& o) {
                       return binary::gp_capacity_cost(mk_binary(kv), binary::GpOptions{}, o.seed);
                   }};
        b["thm2"] = {{"cost"}, [](const std::map<std::string, double>& kv, const RunOptions& o) {
                         long long budget = o.budget > 0 ? o.budget : 20000;
                         return binary::ach_thm2_binary(mk_binary(kv), budget, o.seed);
                     }};
        b["causal"] = {{"cost"}, [](const std::map<std::string, double>& kv, const RunOptions& o) {
                           long long budget = o.budget > 0 ? o.budget : 100000;
                           return binary::causal_search(mk_binary(kv), budget, o.seed);
                       }};

        auto& g = r[Setting::gaussian];
        g["thm5"] = {{"alpha", "beta", "gamma"},
                     [](const std::map<std::string, double>& kv, const RunOptions& o) {
                         long long budget = o.budget > 0 ? o.budget : 10000;
                         return gaussian::ach_thm5(mk_gaussian(kv), budget);
                     }};
        g["thm6"] = {{}, [](const std::map<std::string, double>& kv, const RunOptions&) {
                         return gaussian::lb_gs(mk_gaussian(kv));
                     }};
        g["gws"] = {{"sigma", "gamma"}, [](const std::map<std::string, double>& kv, const RunOptions& o) {
                        int grid = o.budget > 0 ? int(std::min<long long>(o.budget, 20001)) : 401;
                        return gaussian::lb_gws(mk_gaussian(kv), grid);
                    }};
        g["prop6"] = {{"gamma"}, [](const std::map<std::string, double>& kv, const RunOptions&) {
                          return gaussian::lb_prop6_max(mk_gaussian(kv));
                      }};
        g["thm7"] = {{"gamma", "c", "r"}, [](const std::map<std::string, double>& kv, const RunOptions&) {
                         return gaussian::lb_thm7_max(mk_gaussian(kv));
                     }};

        auto& v = r[Setting::gaussian_sv];
        v["thm8"] = {{"alpha", "beta"}, [](const std::map<std::string, double>& kv, const RunOptions& o) {
                         long long budget = o.budget > 0 ? o.budget : 4000;
                         return gaussiansv::ach_thm8(mk_sv(kv), budget);
                     }};
        v["prop7"] = {{}, [](const std::map<std::string, double>& kv, const RunOptions&) {
                          return gaussiansv::lb_prop7(mk_sv(kv));
                      }};
        v["prop8"] = {{}, [](const std::map<std::string, double>& kv, const RunOptions&) {
                          return gaussiansv::lb_prop8(mk_sv(kv));
                      }};
        v["thm9"] = {{"alpha"}, [](const std::map<std::string, double>& kv, const RunOptions&) {
                         return gaussiansv::lb_thm9(mk_sv(kv));
                     }};

        auto& e = r[Setting::erasure];
        e["prop4"] = {{"p_erase"}, [](const std::map<std::string, double>& kv, const RunOptions&) {
                          return erasure::dmin_erasure(erasure::ErasureProblem::bernoulli_hamming(
                              need(kv, "p1"), need(kv, "p2"), need(kv, "C")));
                      }};
        return r;
    }();
    return reg;
}

inline std::string setting_name(Setting s) {
    switch (s) {
        case Setting::binary: return "binary";
        case Setting::gaussian: return "gaussian";
        case Setting::gaussian_sv: return "gaussian_sv";
        case Setting::erasure: return "erasure";
    }
    return "?";
}

} // namespace detail

// ---------------------------------------------------------------------------
// spec-file parsing
// ---------------------------------------------------------------------------

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline void validate(const SweepSpec& spec) {
    if (!(spec.lo < spec.hi)) throw SpecError("sweep range requires lo < hi");
    if (spec.steps < 2) throw SpecError("sweep requires steps >= 2");
    if (spec.bounds.empty()) throw SpecError("no bounds requested");
    const auto& vars = detail::setting_vars().at(detail::setting_name(spec.setting));
    bool known_var = false;
    for (const auto& v : vars) known_var = known_var || v == spec.sweep_var;
    if (!known_var) throw SpecError("unknown sweep variable: " + spec.sweep_var);
    for (const auto& v : vars)
        if (v != spec.sweep_var && !spec.fixed.count(v))
            throw SpecError("missing fixed parameter: " + v);
    for (const auto& kv : spec.fixed) {
        bool ok = false;
        for (const auto& v : vars) ok = ok || v == kv.first;
        if (!ok) throw SpecError("unknown parameter for setting: " + kv.first);
    }
    const auto& reg = detail::registry().at(spec.setting);
    for (const auto& b : spec.bounds)
        if (!reg.count(b)) throw SpecError("unknown bound id: " + b);
}

inline SweepSpec parse_spec(std::istream& in) {
    SweepSpec spec;
    bool have_setting = false, have_sweep = false, have_lo = false, have_hi = false,
         have_steps = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw SpecError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw SpecError("line " + std::to_string(lineno) + ": empty key or value");
        if (key == "setting") {
            spec.setting = setting_from_string(val);
            have_setting = true;
        } else if (key == "sweep") {
            spec.sweep_var = val;
            have_sweep = true;
        } else if (key == "bounds") {
            std::stringstream ss(val);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                tok = trim(tok);
                if (!tok.empty()) spec.bounds.push_back(tok);
            }
        } else {
            char* end = nullptr;
            double x = std::strtod(val.c_str(), &end);
            if (end == val.c_str() || *end != '\0')
                throw SpecError("line " + std::to_string(lineno) + ": bad number for " + key);
            if (key == "lo") { spec.lo = x; have_lo = true; }
            else if (key == "hi") { spec.hi = x; have_hi = true; }
            else if (key == "steps") { spec.steps = int(x); have_steps = true; }
            else spec.fixed[key] = x;
        }
    }
    if (!have_setting) throw SpecError("missing key: setting");
    if (!have_sweep) throw SpecError("missing key: sweep");
    if (!have_lo || !have_hi || !have_steps) throw SpecError("missing sweep range (lo/hi/steps)");
    validate(spec);
    return spec;
}

// ---------------------------------------------------------------------------
// running and CSV emission
// ---------------------------------------------------------------------------

struct SweepTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

inline SweepTable run_sweep(const SweepSpec& spec, const RunOptions& opt = {}) {
    validate(spec);
    const auto& reg = detail::registry().at(spec.setting);
    SweepTable t;
    t.header.push_back(spec.sweep_var);
    for (const auto& b : spec.bounds) t.header.push_back(b);
    for (const auto& b : spec.bounds)
        for (const auto& p : reg.at(b).param_cols) t.header.push_back(b + "." + p);

    for (int i = 0; i < spec.steps; ++i) {
        double x = spec.lo + (spec.hi - spec.lo) * double(i) / double(spec.steps - 1);
        std::map<std::string, double> kv = spec.fixed;
        kv[spec.sweep_var] = x;
        std::vector<double> row;
        row.push_back(x);
        std::vector<double> paramcols;
        for (const auto& b : spec.bounds) {
            const auto& def = reg.at(b);
            BoundResult res = def.eval(kv, opt);
            row.push_back(res.value);
            for (const auto& p : def.param_cols) paramcols.push_back(res.param(p));
        }
        row.insert(row.end(), paramcols.begin(), paramcols.end());
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline std::string to_csv(const SweepTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (i) out += ',';
        out += t.header[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

inline SweepTable parse_csv(std::istream& in) {
    SweepTable t;
    std::string line;
    if (!std::getline(in, line)) throw SpecError("empty csv");
    std::stringstream hs(line);
    std::string tok;
    while (std::getline(hs, tok, ',')) t.header.push_back(trim(tok));
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<double> row;
        std::stringstream rs(line);
        while (std::getline(rs, tok, ',')) row.push_back(std::strtod(tok.c_str(), nullptr));
        if (row.size() != t.header.size()) throw SpecError("csv row width mismatch");
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace helperbounds::sweep

#endif
