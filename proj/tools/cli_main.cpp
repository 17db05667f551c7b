#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "experiment_io.hpp"
#include "gaaf/render.hpp"

namespace {

using namespace gaaf;
using namespace gaaf::cli;

struct FlagBindings {
    CLI::Option* mask = nullptr;
    CLI::Option* taps = nullptr;
    CLI::Option* mu = nullptr;
    CLI::Option* sigma_v2 = nullptr;
    CLI::Option* sigma_u2 = nullptr;
    CLI::Option* runs = nullptr;
    CLI::Option* iterations = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* window = nullptr;
    CLI::Option* out = nullptr;
    CLI::Option* sweep = nullptr;

    std::string config_path;
    Settings flags;  // values written by CLI11; only counted ones are used

    // Defaults, then config file entries, then explicit flags.
    Settings resolve() const {
        Settings s;
        if (!config_path.empty()) s.apply(load_config_file(config_path));
        if (mask->count()) s.mask = flags.mask;
        if (taps->count()) s.taps = flags.taps;
        if (mu->count()) s.mu = flags.mu;
        if (sigma_v2->count()) s.sigma_v2 = flags.sigma_v2;
        if (sigma_u2->count()) s.sigma_u2 = flags.sigma_u2;
        if (runs->count()) s.runs = flags.runs;
        if (iterations->count()) s.iterations = flags.iterations;
        if (seed->count()) s.seed = flags.seed;
        if (window->count()) s.window = flags.window;
        if (out->count()) s.out = flags.out;
        if (sweep && sweep->count()) s.sweep = flags.sweep;
        return s;
    }
};

void bind_flags(CLI::App* cmd, FlagBindings& b, bool with_sweep) {
    cmd->add_option("--config", b.config_path, "key=value config file; flags override it");
    b.mask = cmd->add_option("--mask", b.flags.mask, "subalgebra: full3, rotor3, complex, real");
    b.taps = cmd->add_option("--taps", b.flags.taps, "filter order M");
    b.mu = cmd->add_option("--mu", b.flags.mu, "step size");
    b.sigma_v2 = cmd->add_option("--sigma-v2", b.flags.sigma_v2, "noise variance per coefficient");
    b.sigma_u2 =
        cmd->add_option("--sigma-u2", b.flags.sigma_u2, "regressor variance per coefficient");
    b.runs = cmd->add_option("--runs", b.flags.runs, "ensemble size");
    b.iterations = cmd->add_option("--iterations", b.flags.iterations, "samples per run");
    b.seed = cmd->add_option("--seed", b.flags.seed, "RNG seed");
    b.window = cmd->add_option("--window", b.flags.window, "steady-state averaging window");
    b.out = cmd->add_option("--out", b.flags.out, "output directory");
    if (with_sweep)
        b.sweep = cmd->add_option("--sweep", b.flags.sweep, "comma-separated tap counts");
}

int cmd_run(const FlagBindings& bindings) {
    const Settings s = bindings.resolve();
    const ExperimentConfig cfg = s.experiment();
    const double emse_th = emse_theory(cfg.theory());  // throws Unstable -> exit 3
    const double mse_th = mse_theory(cfg.theory());

    std::cout << "mask " << s.mask << ", M = " << s.taps << ", w_opt entry = "
              << render(preset_entry(cfg.mask)) << "\n";

    const LearningCurve curve = run_experiment(cfg);
    const SteadyState ss = steady_state(curve, s.window);

    std::vector<EmittedFile> files;
    files.push_back(write_file(s.out, "learning_curve.csv", learning_curve_csv(curve)));
    files.push_back(write_file(s.out, "summary.csv", summary_csv(s, ss, mse_th, emse_th)));
    files.push_back(write_file(s.out, "manifest.json", manifest_json("run", s, files)));

    for (const EmittedFile& f : files) std::cout << "wrote " << s.out << "/" << f.name << "\n";
    std::cout << "steady-state mse = " << format_double(ss.mse) << " (" << format_double(to_db(ss.mse))
              << " dB), emse = " << format_double(ss.emse) << " (" << format_double(to_db(ss.emse))
              << " dB)\n";
    std::cout << "theory       mse = " << format_double(mse_th) << " ("
              << format_double(to_db(mse_th)) << " dB), emse = " << format_double(emse_th) << " ("
              << format_double(to_db(emse_th)) << " dB)\n";
    return 0;
}

int cmd_sweep(const FlagBindings& bindings) {
    const Settings s = bindings.resolve();
    const std::vector<int> taps_list = s.sweep_taps_list();
    const ExperimentConfig base = s.experiment();
    const std::vector<SweepRow> rows = sweep_taps(base, taps_list);

    std::vector<EmittedFile> files;
    files.push_back(write_file(s.out, "sweep.csv", sweep_csv(s, rows)));
    files.push_back(write_file(s.out, "manifest.json", manifest_json("sweep", s, files)));

    for (const EmittedFile& f : files) std::cout << "wrote " << s.out << "/" << f.name << "\n";
    int unstable = 0;
    for (const SweepRow& row : rows) unstable += row.unstable ? 1 : 0;
    if (unstable > 0)
        std::cout << unstable << " of " << rows.size()
                  << " tap counts violate the stability condition and were flagged\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric-algebra LMS adaptive filtering experiments"};
    app.require_subcommand(1);

    FlagBindings run_flags, sweep_flags;
    CLI::App* run = app.add_subcommand("run", "simulate one configuration, emit learning curves");
    bind_flags(run, run_flags, false);
    CLI::App* sweep =
        app.add_subcommand("sweep", "steady-state errors across tap counts, emit a table");
    bind_flags(sweep, sweep_flags, true);

    int table_n = 3;
    CLI::App* table = app.add_subcommand("table", "print the basis multiplication table of G(R^n)");
    table->add_option("n", table_n, "base space dimension, 1..6")->required();

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(run_flags);
        if (sweep->parsed()) return cmd_sweep(sweep_flags);
        if (table->parsed()) {
            if (table_n < 1 || table_n > 6)
                throw gaaf::ConfigError("table dimension must be in [1, 6]");
            std::cout << gaaf::render_cayley_table(table_n);
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const gaaf::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const gaaf::Unstable& e) {
        std::cerr << "stability error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
