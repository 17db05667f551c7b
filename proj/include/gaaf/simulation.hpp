#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaaf/analysis.hpp"
#include "gaaf/filter.hpp"
#include "gaaf/random.hpp"

namespace gaaf {

/// The four named subalgebras exercised by the experiments, all embedded
/// in G(R^3): full3 (all 8 blades), rotor3 (even subalgebra), complex
/// ({1, gamma_12}) and real ({1}).
SubalgebraMask mask_by_name(std::string_view name);
std::string mask_name(const SubalgebraMask& mask);
std::vector<std::string> known_mask_names();

/// The optimal-weight entry associated with a named mask; every tap of
/// the preset array repeats this entry.
Multivector preset_entry(const SubalgebraMask& mask);
MultivectorArray preset_weights(const SubalgebraMask& mask, std::size_t taps);

struct ExperimentConfig {
    ExperimentConfig() = default;
    explicit ExperimentConfig(SubalgebraMask m) : mask(std::move(m)) {}

    SubalgebraMask mask;
    int taps = 10;
    double mu = 0.005;
    double sigma_v2 = 1e-3;
    double sigma_u2 = 1.0;
    int runs = 100;
    int iterations = 5000;
    std::uint64_t seed = 1;
    int window = 200;
    int threads = 0;  // worker cap for the ensemble; 0 = hardware default
    std::optional<MultivectorArray> w_opt;  // defaults to the mask preset

    MultivectorArray resolved_w_opt() const;
    TheoryInputs theory() const {
        return {taps, mu, sigma_u2, sigma_v2, dims_of(mask)};
    }
};

/// One draw of the stationary data model: fresh independent regressor
/// taps, independent noise, d = ~u* w_opt + v.
struct Sample {
    MultivectorArray u;
    Multivector d;
    Multivector v;
};
Sample synthesize_sample(const MultivectorArray& w_opt, const SubalgebraMask& mask,
                         double sigma_u2, double sigma_v2, GaussianSampler& rng);

/// Ensemble-averaged learning curves: per-iteration means of the scalar
/// error energies <~e e> and <~e_a e_a>.
struct LearningCurve {
    std::vector<double> mse;
    std::vector<double> emse;
    ExperimentConfig config;
    bool stability_warning = false;
};

/// Per-iteration hook for tests; forces single-threaded execution and is
/// called in (run, iteration) order.
using IterationObserver =
    std::function<void(int run, int iteration, const Multivector& e, const Multivector& e_a,
                       const Multivector& v)>;

/// Monte-Carlo system identification. Every run gets its own Regressor
/// and Noise substreams (see random.hpp) and starts from w = 0. Each
/// iteration forms e_a = ~u*(w_opt - w), then e = e_a + v -- the exact
/// error decomposition of the data model -- and feeds e to the shared
/// LMS update path. Curves are reduced in run order, so results are
/// bit-identical for any thread count.
LearningCurve run_experiment(const ExperimentConfig& cfg,
                             const IterationObserver& observer = nullptr);

struct SteadyState {
    double mse;
    double emse;
};

/// Mean of the last `window` points of each curve.
SteadyState steady_state(const LearningCurve& curve, int window = 200);

struct SweepRow {
    int taps;
    double mse_ss;
    double emse_ss;
    double mse_theory;
    double emse_theory;
    bool unstable;  // when set, the numeric fields are NaN
};

/// Steady-state-vs-taps sweep; unstable tap counts are flagged and
/// skipped rather than simulated.
std::vector<SweepRow> sweep_taps(const ExperimentConfig& base, const std::vector<int>& taps_list);

}  // namespace gaaf
