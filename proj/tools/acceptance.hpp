#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kthit::acceptance {

struct Options {
    std::uint64_t seed = 20240601;
    // Path of the kthit executable used by the determinism criterion. Empty means the running process.
    std::string cli_path;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

constexpr int kNumCriteria = 10;

std::string criterion_name(int id);

// Runs one criterion (1..kNumCriteria). Exceptions inside a criterion are reported as a failure.
CriterionResult run_criterion(int id, const Options& opts);

// Runs the given criteria in order (all of them when ids is empty).
std::vector<CriterionResult> run_all(const std::vector<int>& ids, const Options& opts);

}  // namespace kthit::acceptance
