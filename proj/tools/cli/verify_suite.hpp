#ifndef FOCKU_CLI_VERIFY_SUITE_HPP
#define FOCKU_CLI_VERIFY_SUITE_HPP

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace focku::cli {

enum class CheckStatus { Pass, Fail, Skip };

/// How `measured` is compared with `tolerance`.
enum class Relation { AtMost, AtLeast };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skip;
    double measured = 0.0;
    Relation relation = Relation::AtMost;
    double tolerance = 0.0;
    double wall_ms = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = 20141;
    int cases = 1000;
    int truncation = 64;
    std::vector<double> alphas{1.0};
};

struct SuiteResult {
    std::vector<CheckResult> checks; // sorted by name
    bool passed() const;
};

/// Runs every check. Sampled checks draw from a stream seeded by the suite seed and
/// the check name, so results do not depend on check order; with cases == 0 they
/// are reported as skipped.
SuiteResult run_verify_suite(const VerifyOptions& options);

nlohmann::json suite_to_json(const SuiteResult& result, const VerifyOptions& options, bool timing);
std::string suite_to_csv(const SuiteResult& result, bool timing);

const char* status_name(CheckStatus status);

} // namespace focku::cli

#endif
