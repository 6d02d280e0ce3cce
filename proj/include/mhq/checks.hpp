#pragma once

#include <string>
#include <vector>

namespace mhq {

/// One verification outcome. Tolerances are pinned in the implementation;
/// detail carries measured values for the report.
struct CheckResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

/// Suites: "table1" (golden table, normalization, exactness, localization,
/// sign patterns, factorization oracles), "asymptotics" (transition point,
/// phase, masses, curve relation, zero-distribution law, variational
/// conditions), "identities" (differential and cross-method identities),
/// "all".
std::vector<CheckResult> run_checks(const std::string& suite);

/// The 30 reference first-integral weights for the n = 10, c = 15 rule.
const std::vector<std::string>& reference_weight_table();

}  // namespace mhq
