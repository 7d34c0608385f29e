#ifndef EXPSUM_ANALYZE_HPP
#define EXPSUM_ANALYZE_HPP

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "charsum.hpp"
#include "dwork.hpp"
#include "ideals.hpp"
#include "koszul.hpp"

namespace expsum {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "expsum";
inline constexpr const char* kToolVersion = "0.1.0";

struct AnalysisConfig {
    int64_t p = 3;
    int a = 1;
    std::optional<std::vector<int64_t>> modulus;
    std::string poly_text;
    int nvars = 1;
    /* subset of {"decomposition","milnor","spectral","sums","lfunction","dwork"};
     * empty set = validation error, absent (nullopt) = the default pipeline
     * (everything except dwork). */
    std::optional<std::set<std::string>> analyses;
    int i_max = 0;      // 0 = derive from the pipeline
    int r_bound = 0;    // 0 = (n+1)(delta-1)
    int cutoff_D = 0;   // 0 = 3*delta
    int precision_N = 0;  // 0 = floor((D+1)/delta) + 1
    int64_t budget = kDefaultBudget;
    double tol = 1e-9;
    int threads = 1;
};

struct RunResult {
    Json report;
    bool pass = true;
};

RunResult run_analyze(const AnalysisConfig& cfg);
RunResult run_sum(const MultiPoly& f, int i_max, int64_t budget, int threads);
RunResult run_lfunction(const MultiPoly& f, int order, int64_t budget, int threads,
                        double tol);
RunResult run_spectral(const MultiPoly& f, int e, int r_bound, int mode_m);
RunResult run_check_1_18(const MultiPoly& f,
                         const std::vector<std::pair<std::string, int>>& factors);
RunResult run_dwork_verify(const MultiPoly& f, int i_max, int cutoff_D, int precision_N,
                           int64_t budget);
RunResult run_b_range(int64_t p, int delta, int e);

/* Plain-text rendering of a report for --format text. */
std::string render_text(const Json& report);

// serialization helpers shared with the C API
Json cyc_json(const CycInt& v);
Json field_json(const FieldSpec& F);

}  // namespace expsum

#endif
