#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "gaaf/simulation.hpp"

namespace gaaf::cli {

/// Flat key=value settings ('#' starts a comment, blank lines ignored).
/// Keys match the long flag names with '-' and '_' interchangeable.
std::map<std::string, std::string> load_config_file(const std::filesystem::path& path);

struct Settings {
    std::string mask = "full3";
    int taps = 10;
    double mu = 0.005;
    double sigma_v2 = 1e-3;
    double sigma_u2 = 1.0;
    int runs = 100;
    int iterations = 5000;
    std::uint64_t seed = 1;
    int window = 200;
    std::string out = ".";
    std::string sweep;  // comma-separated tap counts

    /// Applies file entries on top of the defaults; unknown keys are
    /// rejected. Flag overrides happen in the CLI layer afterwards.
    void apply(const std::map<std::string, std::string>& kv);

    ExperimentConfig experiment() const;
    std::vector<int> sweep_taps_list() const;
};

/// Worker cap from GAAF_THREADS (0 = library default). Rejects garbage.
int threads_from_env();

struct EmittedFile {
    std::string name;
    std::uint64_t checksum;  // FNV-1a 64 over the file bytes
    std::uint64_t bytes;
};

EmittedFile write_file(const std::filesystem::path& dir, const std::string& name,
                       const std::string& contents);

std::string learning_curve_csv(const LearningCurve& curve);
std::string summary_csv(const Settings& s, const SteadyState& ss, double mse_th, double emse_th);
std::string sweep_csv(const Settings& s, const std::vector<SweepRow>& rows);

/// manifest.json describing one invocation: resolved settings plus the
/// emitted files with checksums. Deterministic byte-for-byte.
std::string manifest_json(const std::string& command, const Settings& s,
                          const std::vector<EmittedFile>& files);

double to_db(double x);

}  // namespace gaaf::cli
