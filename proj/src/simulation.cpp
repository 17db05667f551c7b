#include "gaaf/simulation.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace gaaf {

namespace {

constexpr BladeBits kG2 = 0b010, kG3 = 0b100;
constexpr BladeBits kG12 = 0b011, kG13 = 0b101, kG23 = 0b110, kI = 0b111;

enum class MaskKind { Full3, Rotor3, Complex, Real };

MaskKind kind_of(const SubalgebraMask& mask) {
    const Signature g3 = euclidean(3);
    if (mask == full_mask(g3)) return MaskKind::Full3;
    if (mask == even_mask(g3)) return MaskKind::Rotor3;
    if (mask == complex_mask(g3)) return MaskKind::Complex;
    if (mask == real_mask(g3)) return MaskKind::Real;
    throw ConfigError("mask is not one of the named subalgebras (full3, rotor3, complex, real)");
}

}  // namespace

SubalgebraMask mask_by_name(std::string_view name) {
    const Signature g3 = euclidean(3);
    if (name == "full3") return full_mask(g3);
    if (name == "rotor3") return even_mask(g3);
    if (name == "complex") return complex_mask(g3);
    if (name == "real") return real_mask(g3);
    throw ConfigError("unknown mask '" + std::string(name) +
                      "'; available masks: full3, rotor3, complex, real");
}

std::string mask_name(const SubalgebraMask& mask) {
    switch (kind_of(mask)) {
        case MaskKind::Full3: return "full3";
        case MaskKind::Rotor3: return "rotor3";
        case MaskKind::Complex: return "complex";
        case MaskKind::Real: return "real";
    }
    return {};
}

std::vector<std::string> known_mask_names() { return {"full3", "rotor3", "complex", "real"}; }

Multivector preset_entry(const SubalgebraMask& mask) {
    Multivector w(mask.sig);
    w.at(0) = 0.55;
    switch (kind_of(mask)) {
        case MaskKind::Full3:
            w.at(kG2) = 1.0;
            w.at(kG3) = 2.0;
            w.at(kI) = 3.0;
            [[fallthrough]];
        case MaskKind::Rotor3:
            w.at(kG23) = 1.3;
            w.at(kG13) = -4.5;  // 4.5 gamma_31 in the display basis
            [[fallthrough]];
        case MaskKind::Complex:
            w.at(kG12) = 0.71;
            break;
        case MaskKind::Real:
            break;
    }
    return w;
}

MultivectorArray preset_weights(const SubalgebraMask& mask, std::size_t taps) {
    MultivectorArray w(mask.sig, taps);
    const Multivector entry = preset_entry(mask);
    for (std::size_t j = 0; j < taps; ++j) w[j] = entry;
    return w;
}

MultivectorArray ExperimentConfig::resolved_w_opt() const {
    if (w_opt) {
        if (w_opt->size() != static_cast<std::size_t>(taps))
            throw ConfigError("w_opt length does not match the tap count");
        return *w_opt;
    }
    return preset_weights(mask, static_cast<std::size_t>(taps));
}

Sample synthesize_sample(const MultivectorArray& w_opt, const SubalgebraMask& mask,
                         double sigma_u2, double sigma_v2, GaussianSampler& rng) {
    MultivectorArray u(mask.sig, w_opt.size());
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = random_multivector(mask, sigma_u2, rng);
    Multivector v = random_multivector(mask, sigma_v2, rng);
    Multivector d = array_product_reversed(u, w_opt) + v;
    return {std::move(u), std::move(d), std::move(v)};
}

namespace {

struct RunCurves {
    std::vector<double> mse, emse;
};

// One filter run against freshly synthesized data. The error is formed as
// e = e_a + v, which the update consumes and the curves log; this keeps
// e - e_a = v an exact identity at every iteration.
RunCurves simulate_run(const ExperimentConfig& cfg, const MultivectorArray& w_opt, int run,
                       const IterationObserver& observer) {
    GaussianSampler rng_u(substream(cfg.seed, static_cast<std::uint64_t>(run), StreamTag::Regressor));
    GaussianSampler rng_v(substream(cfg.seed, static_cast<std::uint64_t>(run), StreamTag::Noise));

    FilterState state = make_filter(cfg.mask, static_cast<std::size_t>(cfg.taps), cfg.mu);
    RunCurves curves;
    curves.mse.resize(static_cast<std::size_t>(cfg.iterations));
    curves.emse.resize(static_cast<std::size_t>(cfg.iterations));

    MultivectorArray u(cfg.mask.sig, static_cast<std::size_t>(cfg.taps));
    for (int i = 0; i < cfg.iterations; ++i) {
        for (std::size_t j = 0; j < u.size(); ++j)
            u[j] = random_multivector(cfg.mask, cfg.sigma_u2, rng_u);
        const Multivector v = random_multivector(cfg.mask, cfg.sigma_v2, rng_v);

        const Multivector e_a = array_product_reversed(u, w_opt - state.w);
        const Multivector e = e_a + v;

        curves.mse[static_cast<std::size_t>(i)] = magnitude_sq(e);
        curves.emse[static_cast<std::size_t>(i)] = magnitude_sq(e_a);
        if (observer) observer(run, i, e, e_a, v);

        state = apply_error_update(state, u, e);
    }
    return curves;
}

int resolve_threads(const ExperimentConfig& cfg) {
    if (cfg.threads > 0) return std::min(cfg.threads, cfg.runs);
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min<unsigned>(hw ? hw : 1, static_cast<unsigned>(cfg.runs)));
}

}  // namespace

LearningCurve run_experiment(const ExperimentConfig& cfg, const IterationObserver& observer) {
    if (cfg.taps < 1 || cfg.runs < 1 || cfg.iterations < 1)
        throw ConfigError("taps, runs and iterations must all be at least 1");
    if (!(cfg.mu > 0.0)) throw ConfigError("step size must be positive");
    const MultivectorArray w_opt = cfg.resolved_w_opt();

    LearningCurve curve;
    curve.config = cfg;
    try {
        curve.stability_warning = stability_margin(cfg.theory()) <= 0.0;
    } catch (const Error&) {
        curve.stability_warning = true;
    }

    std::vector<RunCurves> per_run(static_cast<std::size_t>(cfg.runs));
    const int workers = observer ? 1 : resolve_threads(cfg);
    if (workers <= 1) {
        for (int run = 0; run < cfg.runs; ++run)
            per_run[static_cast<std::size_t>(run)] = simulate_run(cfg, w_opt, run, observer);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int run = next.fetch_add(1); run < cfg.runs; run = next.fetch_add(1))
                per_run[static_cast<std::size_t>(run)] = simulate_run(cfg, w_opt, run, nullptr);
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    // Fixed run-order reduction keeps the result independent of scheduling.
    curve.mse.assign(static_cast<std::size_t>(cfg.iterations), 0.0);
    curve.emse.assign(static_cast<std::size_t>(cfg.iterations), 0.0);
    for (const RunCurves& rc : per_run) {
        for (int i = 0; i < cfg.iterations; ++i) {
            curve.mse[static_cast<std::size_t>(i)] += rc.mse[static_cast<std::size_t>(i)];
            curve.emse[static_cast<std::size_t>(i)] += rc.emse[static_cast<std::size_t>(i)];
        }
    }
    const double inv_runs = 1.0 / cfg.runs;
    for (double& x : curve.mse) x *= inv_runs;
    for (double& x : curve.emse) x *= inv_runs;
    return curve;
}

SteadyState steady_state(const LearningCurve& curve, int window) {
    const int len = static_cast<int>(curve.mse.size());
    if (window < 1) throw CurveTooShort("window must be at least 1");
    if (len < window)
        throw CurveTooShort("curve has " + std::to_string(len) + " samples, window needs " +
                            std::to_string(window));
    double mse = 0.0, emse = 0.0;
    for (int i = len - window; i < len; ++i) {
        mse += curve.mse[static_cast<std::size_t>(i)];
        emse += curve.emse[static_cast<std::size_t>(i)];
    }
    return {mse / window, emse / window};
}

std::vector<SweepRow> sweep_taps(const ExperimentConfig& base, const std::vector<int>& taps_list) {
    std::vector<SweepRow> rows;
    rows.reserve(taps_list.size());
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int taps : taps_list) {
        ExperimentConfig cfg = base;
        cfg.taps = taps;
        cfg.w_opt.reset();  // presets track the tap count
        if (stability_margin(cfg.theory()) <= 0.0) {
            rows.push_back({taps, nan, nan, nan, nan, true});
            continue;
        }
        const LearningCurve curve = run_experiment(cfg);
        const SteadyState ss = steady_state(curve, cfg.window);
        rows.push_back({taps, ss.mse, ss.emse, mse_theory(cfg.theory()), emse_theory(cfg.theory()),
                        false});
    }
    return rows;
}

}  // namespace gaaf
