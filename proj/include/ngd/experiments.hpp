#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ngd/metrics.hpp"

namespace ngd {

/// One reproducible desk-scale experiment. Defaults follow the published
/// component values; overrides replace individual parameters by key.
struct ExperimentConfig {
    std::string id;
    std::map<std::string, double> overrides;
    std::filesystem::path out_dir = "out";
};

struct ExperimentInfo {
    std::string id;
    std::string figure; // which figure/section the run reproduces
    std::string description;
    std::map<std::string, double> defaults; // accepted override keys
};

struct ExperimentResult {
    std::vector<std::filesystem::path> files;
    std::optional<MetricsReport> metrics;
    std::string summary;
};

/// Stable-ordered catalog of the available experiments.
std::vector<ExperimentInfo> list_experiments();

/// Run one experiment: writes CSV data plus summary.txt (and metrics.csv
/// when pulse metrics apply) into config.out_dir. Unknown override keys and
/// unknown ids are rejected with std::invalid_argument.
ExperimentResult run(const ExperimentConfig& config);

} // namespace ngd
