#pragma once

#include "kcascade/index.hpp"
#include "kcascade/rootsys.hpp"
#include "kcascade/run_config.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kcascade {

/// Dense table of alpha + beta for root ids, -1 when the sum is not a root.
class RootSums {
public:
    explicit RootSums(const RootSystem& rs);
    std::optional<int> operator()(int a, int b) const
    {
        const int v = table_[static_cast<std::size_t>(a) * n_ + b];
        return v < 0 ? std::nullopt : std::optional<int>(v);
    }

private:
    int n_;
    std::vector<int> table_;
};

struct PropertyFailure {
    std::string property;
    nlohmann::json detail;
};

/// Structural properties of K(S): nesting, Gamma partition of R_S^+, Heisenberg sum rule,
/// cross-element sums, strong orthogonality of R(S).
std::vector<PropertyFailure> check_cascade_properties(const RootSystem& rs, const RootSums& sums, SimpleSet s);

using IndexEvaluator = std::function<IndexReport(const RootSystem&, SimpleSet)>;

/// Bounds, formula agreement, equality criterion and the special cases for one S.
std::vector<PropertyFailure> check_index_properties(const RootSystem& rs, SimpleSet s, const IndexEvaluator& eval);

struct SuiteResult {
    std::string name;
    long checked = 0;
    long failure_count = 0;
    std::vector<nlohmann::json> failures;  ///< the first max_recorded_failures only

    static constexpr std::size_t max_recorded_failures = 50;
    bool passed() const { return failure_count == 0; }
    void fail(nlohmann::json detail);
};

struct VerifyReport {
    nlohmann::json config;
    std::vector<SuiteResult> suites;
    std::optional<std::string> internal_error;

    bool passed() const;
    /// 0 all pass, 2 counterexample, 3 internal-consistency error.
    int exit_code() const;
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    bool index = true;
    bool cascade = true;
    bool oracle = true;
    bool additivity = true;
    /// Replaces index_report in the index suite; used to exercise the failure path.
    IndexEvaluator evaluator;
};

/*
 * Runs the verification suites over config.types:
 *   index       every S for types of rank <= max_enum_rank
 *   cascade     cascade properties for the same sweep
 *   oracle      brute-force index of p_S and u_S against the formulas, all S for
 *               rank <= oracle_rank_cap plus spot_samples subsets of each spot type
 *   additivity  chi(g) = chi(p_S) + chi(u_S^-) on the equality subsets of the oracle range
 */
VerifyReport run_verify(const RunConfig& config, const VerifyOptions& options = {});

/// Deterministic random sample of distinct subsets in numeric order; all subsets when count >= 2^rank.
std::vector<SimpleSet> sample_subsets(int rank, int count, std::uint64_t seed);

}  // namespace kcascade
