#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigidity/tolerances.hpp"

namespace rigidity::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

struct VerifyConfig {
    std::vector<int> dims;
    long samples = 0;  // per dimension
    std::uint64_t seed = 0;
    int threads = 1;
    int family_stride = 10;  // every stride-th matrix is a conjugated diag(μ,…,μ,−(n−1)μ)
    int lambdas_per_matrix = 100;
    Tolerances tol;
};

struct VerifyOutcome {
    nlohmann::json report;
    bool passed = false;
};

/// Throws rigidity::Error(BadParams) on an invalid config. The report does
/// not depend on the thread count.
VerifyOutcome run_verify(const VerifyConfig& config);

/// Serialized form written to disk: two-space indent, trailing newline.
std::string dump_report(const nlohmann::json& report);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rigidity::cli
