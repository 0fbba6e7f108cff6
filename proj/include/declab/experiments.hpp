#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "declab/config.hpp"

namespace declab {

// Raised when a sample inside a fit window fails the doubled-resolution
// stability check; the CLI maps it to exit code 3.
struct UnresolvedGridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentOutcome {
    bool pass = false;
    nlohmann::json summary;
};

// Experiment kinds and one-line descriptions for `list-experiments`.
std::vector<std::pair<std::string, std::string>> experiment_catalog();

// Parse the damping block of a config (damping.kind / gamma / center / eps0 /
// floor / width / amplitude).
struct DampingProfile;

// Runs one experiment, writing CSV artifacts plus summary.json under outdir.
// Throws ConfigError on malformed configs and UnresolvedGridError on
// unresolved-grid aborts.
ExperimentOutcome run_experiment(const Config& cfg, const std::string& outdir);

struct ReportRow {
    std::string kind;
    std::string gamma;
    double measured = 0.0;
    double target = 0.0;
    double abs_error = 0.0;
    bool pass = false;
    std::string directory;
};

// Collects summary.json files under dir (one level of subdirectories).
std::vector<ReportRow> collect_report(const std::string& dir);
std::string render_report(const std::vector<ReportRow>& rows);

} // namespace declab
