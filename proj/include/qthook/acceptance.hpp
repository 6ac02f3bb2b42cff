#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qthook/report.hpp"

namespace qthook {

// The acceptance list as runnable checks. Every comparison is exact; eval
// mode compares exact rationals at seeded points.
struct SuiteOptions {
    std::uint64_t seed = 42;
    std::string profile = "desk";
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = true;
    double seconds = 0;
    double budgetSeconds = 0;  // a stated runtime bound counts toward pass; 0 means none
    std::vector<VerificationReport> reports;

    bool withinBudget() const { return budgetSeconds <= 0 || seconds <= budgetSeconds; }
    std::string line() const;
    nlohmann::json toJson(bool withTiming = true) const;
};

inline constexpr int kCriterionCount = 10;

CriterionResult runCriterion(int id, const SuiteOptions& opts);
std::vector<CriterionResult> runSuite(const SuiteOptions& opts);

// Names accepted by identitySweep.
const std::vector<std::string>& identityNames();
// The seeded sweep for a named identity over its default ranges. trials only
// affects gasper (0 keeps the default 50). Throws std::invalid_argument on an unknown name.
VerificationReport identitySweep(const std::string& name, std::uint64_t seed, int trials = 0);

// The one-variable Warnaar sums are q-binomial series: the coefficient of x^k
// is checked directly against the closed coefficient, without Macdonald polynomials.
VerificationReport warnaarOneVariableCheck(int maxDegree);

}  // namespace qthook
