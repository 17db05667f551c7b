#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gaaf/render.hpp"
#include "gaaf/simulation.hpp"
#include "helpers.hpp"

using namespace gaaf;
using namespace gaaf::testing;

namespace {

const Signature kG3 = euclidean(3);

ExperimentConfig small_config(const SubalgebraMask& mask) {
    ExperimentConfig cfg(mask);
    cfg.taps = 3;
    cfg.mu = 0.01;
    cfg.runs = 4;
    cfg.iterations = 50;
    cfg.seed = 99;
    cfg.window = 10;
    return cfg;
}

}  // namespace

TEST_CASE("named masks and presets") {
    CHECK(mask_by_name("full3") == full_mask(kG3));
    CHECK(mask_by_name("rotor3") == even_mask(kG3));
    CHECK(mask_by_name("complex") == complex_mask(kG3));
    CHECK(mask_by_name("real") == real_mask(kG3));
    CHECK_THROWS_AS(mask_by_name("octonion"), ConfigError);

    CHECK(render(preset_entry(mask_by_name("full3"))) ==
          "0.55 + 1γ2 + 2γ3 + 0.71γ12 + 1.3γ23 + 4.5γ31 + 3I");
    CHECK(render(preset_entry(mask_by_name("rotor3"))) == "0.55 + 0.71γ12 + 1.3γ23 + 4.5γ31");
    CHECK(render(preset_entry(mask_by_name("complex"))) == "0.55 + 0.71γ12");
    CHECK(render(preset_entry(mask_by_name("real"))) == "0.55");

    const MultivectorArray w = preset_weights(mask_by_name("full3"), 7);
    REQUIRE(w.size() == 7);
    for (std::size_t j = 0; j < w.size(); ++j)
        CHECK(mv_equal(w[j], preset_entry(mask_by_name("full3"))));

    for (const auto& name : known_mask_names()) CHECK(mask_name(mask_by_name(name)) == name);
}

TEST_CASE("random multivectors respect mask and variance") {
    const SubalgebraMask even3 = even_mask(kG3);
    GaussianSampler rng(substream(5, 0, StreamTag::Regressor));

    CHECK(mv_equal(random_multivector(even3, 0.0, rng), Multivector(kG3)));

    double sum = 0.0, sum_sq = 0.0;
    const int n = 200000;
    const double sigma2 = 0.7;
    for (int i = 0; i < n; ++i) {
        const Multivector m = random_multivector(even3, sigma2, rng);
        CHECK(even3.holds(m));
        sum += m[0b011];
        sum_sq += m[0b011] * m[0b011];
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(std::abs(sum_sq / n - sigma2) < 0.02);

    // Real mask: a single scalar Gaussian.
    const SubalgebraMask real3 = real_mask(kG3);
    const Multivector r = random_multivector(real3, 1.0, rng);
    CHECK(real3.holds(r));
}

TEST_CASE("synthesized samples follow the data model") {
    GaussianSampler rng(substream(17, 2, StreamTag::Regressor));
    const SubalgebraMask mask = full_mask(kG3);
    const MultivectorArray w_opt = preset_weights(mask, 4);

    SUBCASE("no noise") {
        auto s = synthesize_sample(w_opt, mask, 1.0, 0.0, rng);
        CHECK(mv_equal(s.d, array_product_reversed(s.u, w_opt)));
        CHECK(mv_equal(s.v, Multivector(kG3)));
        CHECK(mv_equal(compute_error(s.d, s.u, w_opt), Multivector(kG3)));
    }

    SUBCASE("zero plant") {
        const MultivectorArray zero(kG3, 4);
        auto s = synthesize_sample(zero, mask, 1.0, 1e-2, rng);
        CHECK(mv_equal(s.d, s.v));
    }

    SUBCASE("noise recovery by cancellation") {
        auto s = synthesize_sample(w_opt, mask, 1.0, 1e-3, rng);
        CHECK(mv_close(compute_error(s.d, s.u, w_opt), s.v, 1e-12));
        CHECK(mask.holds(s.d));
        for (std::size_t j = 0; j < s.u.size(); ++j) CHECK(mask.holds(s.u[j]));
    }
}

TEST_CASE("degenerate experiment produces all-zero curves") {
    ExperimentConfig cfg(full_mask(kG3));
    cfg.taps = 2;
    cfg.runs = 1;
    cfg.iterations = 1;
    cfg.sigma_v2 = 0.0;
    cfg.window = 1;
    cfg.w_opt = MultivectorArray(kG3, 2);
    const LearningCurve curve = run_experiment(cfg);
    REQUIRE(curve.mse.size() == 1);
    CHECK(curve.mse[0] == 0.0);
    CHECK(curve.emse[0] == 0.0);
}

TEST_CASE("error decomposition holds bit for bit, with mask purity") {
    for (const char* name : {"full3", "rotor3", "complex", "real"}) {
        ExperimentConfig cfg = small_config(mask_by_name(name));
        int observed = 0;
        run_experiment(cfg, [&](int, int, const Multivector& e, const Multivector& e_a,
                                const Multivector& v) {
            CHECK(mv_equal(e, e_a + v));
            CHECK(cfg.mask.holds(e));
            CHECK(cfg.mask.holds(e_a));
            CHECK(cfg.mask.holds(v));
            ++observed;
        });
        CHECK(observed == cfg.runs * cfg.iterations);
    }
}

TEST_CASE("same seed, same curves, any thread count") {
    ExperimentConfig cfg = small_config(mask_by_name("full3"));
    cfg.runs = 6;
    const LearningCurve a = run_experiment(cfg);
    const LearningCurve b = run_experiment(cfg);
    CHECK(a.mse == b.mse);
    CHECK(a.emse == b.emse);

    ExperimentConfig threaded = cfg;
    threaded.threads = 4;
    const LearningCurve c = run_experiment(threaded);
    CHECK(a.mse == c.mse);
    CHECK(a.emse == c.emse);

    ExperimentConfig reseeded = cfg;
    reseeded.seed = 123456;
    const LearningCurve d = run_experiment(reseeded);
    CHECK(a.mse != d.mse);
}

TEST_CASE("real-mask curves match a scalar replication of the harness") {
    ExperimentConfig cfg(mask_by_name("real"));
    cfg.taps = 5;
    cfg.mu = 0.02;
    cfg.sigma_v2 = 1e-3;
    cfg.runs = 3;
    cfg.iterations = 400;
    cfg.seed = 31;
    const LearningCurve curve = run_experiment(cfg);

    std::vector<double> mse(cfg.iterations, 0.0), emse(cfg.iterations, 0.0);
    const double su = std::sqrt(cfg.sigma_u2), sv = std::sqrt(cfg.sigma_v2);
    for (int run = 0; run < cfg.runs; ++run) {
        GaussianSampler rng_u(substream(cfg.seed, run, StreamTag::Regressor));
        GaussianSampler rng_v(substream(cfg.seed, run, StreamTag::Noise));
        std::vector<double> w(cfg.taps, 0.0);
        for (int i = 0; i < cfg.iterations; ++i) {
            std::vector<double> u(cfg.taps);
            for (auto& x : u) x = su * rng_u();
            const double v = sv * rng_v();
            double e_a = 0.0;
            for (int j = 0; j < cfg.taps; ++j) e_a += u[j] * (0.55 - w[j]);
            const double e = e_a + v;
            mse[i] += e * e;
            emse[i] += e_a * e_a;
            for (int j = 0; j < cfg.taps; ++j) w[j] += cfg.mu * (u[j] * e);
        }
    }
    for (int i = 0; i < cfg.iterations; ++i) {
        CHECK(std::abs(curve.mse[i] - mse[i] / cfg.runs) <= 1e-12);
        CHECK(std::abs(curve.emse[i] - emse[i] / cfg.runs) <= 1e-12);
    }
}

TEST_CASE("steady state averaging") {
    LearningCurve curve;
    curve.mse.assign(300, 4.0);
    curve.emse.assign(300, 1.0);
    const SteadyState ss = steady_state(curve, 200);
    CHECK(ss.mse == doctest::Approx(4.0));
    CHECK(ss.emse == doctest::Approx(1.0));

    const SteadyState whole = steady_state(curve, 300);
    CHECK(whole.mse == doctest::Approx(4.0));

    CHECK_THROWS_AS(steady_state(curve, 301), CurveTooShort);
    CHECK_THROWS_AS(steady_state(curve, 0), CurveTooShort);
}

TEST_CASE("unstable configurations warn instead of failing") {
    ExperimentConfig cfg = small_config(mask_by_name("full3"));
    cfg.taps = 60;  // margin = 2 - 0.005*60*8 < 0
    cfg.mu = 0.005;
    cfg.iterations = 5;
    const LearningCurve curve = run_experiment(cfg);
    CHECK(curve.stability_warning);

    ExperimentConfig stable = small_config(mask_by_name("full3"));
    CHECK_FALSE(run_experiment(stable).stability_warning);
}

TEST_CASE("taps sweep emits one row per M with theory attached") {
    ExperimentConfig base = small_config(mask_by_name("real"));
    base.mu = 0.1;
    base.runs = 8;
    base.iterations = 400;
    base.window = 100;
    const std::vector<int> taps = {1, 2, 4};
    const auto rows = sweep_taps(base, taps);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].taps == taps[i]);
        CHECK_FALSE(rows[i].unstable);
        ExperimentConfig cfg = base;
        cfg.taps = taps[i];
        CHECK(rows[i].emse_theory == emse_theory(cfg.theory()));
        CHECK(rows[i].mse_theory == mse_theory(cfg.theory()));
        CHECK(rows[i].emse_ss > 0.0);
        CHECK(rows[i].mse_ss > rows[i].emse_ss);
        if (i > 0) CHECK(rows[i].emse_theory > rows[i - 1].emse_theory);
    }
    // Simulated steady states track the theory's growth in M.
    CHECK(rows.back().emse_ss > rows.front().emse_ss);

    // An unstable M is flagged and skipped, the rest still simulate.
    ExperimentConfig full = small_config(mask_by_name("full3"));
    full.mu = 0.005;
    const auto flagged = sweep_taps(full, {2, 60});
    REQUIRE(flagged.size() == 2);
    CHECK_FALSE(flagged[0].unstable);
    CHECK(flagged[1].unstable);
    CHECK(std::isnan(flagged[1].emse_ss));
    CHECK(std::isnan(flagged[1].emse_theory));
}

TEST_CASE("doubling the ensemble roughly halves curve variance") {
    auto curve_variance = [](int runs, std::uint64_t seed) {
        ExperimentConfig cfg(mask_by_name("real"));
        cfg.taps = 2;
        cfg.mu = 0.05;
        cfg.sigma_v2 = 1e-2;
        cfg.runs = runs;
        cfg.iterations = 1500;
        cfg.seed = seed;
        const LearningCurve curve = run_experiment(cfg);
        // Fluctuation of the ensemble-mean MSE over the steady window.
        double mean = 0.0;
        const int start = 500;
        const int count = cfg.iterations - start;
        for (int i = start; i < cfg.iterations; ++i) mean += curve.mse[i];
        mean /= count;
        double var = 0.0;
        for (int i = start; i < cfg.iterations; ++i)
            var += (curve.mse[i] - mean) * (curve.mse[i] - mean);
        return var / (count - 1);
    };

    double ratio_sum = 0.0;
    const int seeds = 6;
    for (int s = 0; s < seeds; ++s)
        ratio_sum += curve_variance(8, 1000 + s) / curve_variance(16, 2000 + s);
    const double ratio = ratio_sum / seeds;
    CHECK(ratio > 1.4);
    CHECK(ratio < 2.6);
}
