#include "experiment_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gaaf/render.hpp"

namespace gaaf::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    return s.substr(begin, end - begin + 1);
}

std::string normalize_key(std::string key) {
    for (char& c : key)
        if (c == '-') c = '_';
    return key;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("bad value for '" + key + "': " + text);
    return value;
}

}  // namespace

std::map<std::string, std::string> load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": expected key=value");
        const std::string key = normalize_key(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": expected key=value");
        kv[key] = value;
    }
    return kv;
}

void Settings::apply(const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (key == "mask") mask = value;
        else if (key == "taps") taps = parse_number<int>(key, value);
        else if (key == "mu") mu = parse_number<double>(key, value);
        else if (key == "sigma_v2") sigma_v2 = parse_number<double>(key, value);
        else if (key == "sigma_u2") sigma_u2 = parse_number<double>(key, value);
        else if (key == "runs") runs = parse_number<int>(key, value);
        else if (key == "iterations") iterations = parse_number<int>(key, value);
        else if (key == "seed") seed = parse_number<std::uint64_t>(key, value);
        else if (key == "window") window = parse_number<int>(key, value);
        else if (key == "out") out = value;
        else if (key == "sweep") sweep = value;
        else throw ConfigError("unknown config key '" + key + "'");
    }
}

ExperimentConfig Settings::experiment() const {
    ExperimentConfig cfg(mask_by_name(mask));
    if (taps < 1) throw ConfigError("taps must be at least 1");
    if (!(mu > 0.0)) throw ConfigError("mu must be positive");
    if (sigma_v2 < 0.0) throw ConfigError("sigma_v2 must be nonnegative");
    if (!(sigma_u2 > 0.0)) throw ConfigError("sigma_u2 must be positive");
    if (runs < 1) throw ConfigError("runs must be at least 1");
    if (iterations < 1) throw ConfigError("iterations must be at least 1");
    if (window < 1 || window > iterations)
        throw ConfigError("window must be in [1, iterations]");
    cfg.taps = taps;
    cfg.mu = mu;
    cfg.sigma_v2 = sigma_v2;
    cfg.sigma_u2 = sigma_u2;
    cfg.runs = runs;
    cfg.iterations = iterations;
    cfg.seed = seed;
    cfg.window = window;
    cfg.threads = threads_from_env();
    return cfg;
}

std::vector<int> Settings::sweep_taps_list() const {
    if (sweep.empty()) throw ConfigError("sweep needs a comma-separated tap list, e.g. 1,5,10");
    std::vector<int> taps_list;
    std::stringstream ss(sweep);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const int m = parse_number<int>("sweep", item);
        if (m < 1) throw ConfigError("sweep tap counts must be at least 1");
        taps_list.push_back(m);
    }
    if (taps_list.empty()) throw ConfigError("sweep list is empty");
    return taps_list;
}

int threads_from_env() {
    const char* env = std::getenv("GAAF_THREADS");
    if (!env || !*env) return 0;
    const int value = parse_number<int>("GAAF_THREADS", env);
    if (value < 1) throw ConfigError("GAAF_THREADS must be at least 1");
    return value;
}

EmittedFile write_file(const std::filesystem::path& dir, const std::string& name,
                       const std::string& contents) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path path = dir / name;
    std::ofstream outfile(path, std::ios::binary);
    if (!outfile) throw Error("cannot write " + path.string());
    outfile << contents;
    outfile.close();
    if (!outfile) throw Error("short write on " + path.string());

    std::uint64_t hash = 0xCBF29CE484222325ull;
    for (unsigned char c : contents) {
        hash ^= c;
        hash *= 0x100000001B3ull;
    }
    return {name, hash, contents.size()};
}

double to_db(double x) { return 10.0 * std::log10(x); }

std::string learning_curve_csv(const LearningCurve& curve) {
    std::string csv = "iteration,mse,emse,mse_db,emse_db\n";
    for (std::size_t i = 0; i < curve.mse.size(); ++i) {
        csv += std::to_string(i) + ',' + format_double(curve.mse[i]) + ',' +
               format_double(curve.emse[i]) + ',' + format_double(to_db(curve.mse[i])) + ',' +
               format_double(to_db(curve.emse[i])) + '\n';
    }
    return csv;
}

namespace {

std::string settings_columns(const Settings& s) {
    return s.mask + ',' + std::to_string(s.taps) + ',' + format_double(s.mu) + ',' +
           format_double(s.sigma_u2) + ',' + format_double(s.sigma_v2) + ',' +
           std::to_string(s.runs);
}

}  // namespace

std::string summary_csv(const Settings& s, const SteadyState& ss, double mse_th, double emse_th) {
    std::string csv =
        "mask,M,mu,sigma_u2,sigma_v2,runs,mse_ss,emse_ss,mse_theory,emse_theory,"
        "mse_ss_db,emse_ss_db,mse_theory_db,emse_theory_db\n";
    csv += settings_columns(s) + ',' + format_double(ss.mse) + ',' + format_double(ss.emse) +
           ',' + format_double(mse_th) + ',' + format_double(emse_th) + ',' +
           format_double(to_db(ss.mse)) + ',' + format_double(to_db(ss.emse)) + ',' +
           format_double(to_db(mse_th)) + ',' + format_double(to_db(emse_th)) + '\n';
    return csv;
}

std::string sweep_csv(const Settings& s, const std::vector<SweepRow>& rows) {
    std::string csv =
        "mask,M,mu,sigma_u2,sigma_v2,runs,mse_ss,emse_ss,mse_theory,emse_theory,"
        "mse_ss_db,emse_ss_db,mse_theory_db,emse_theory_db,unstable\n";
    for (const SweepRow& row : rows) {
        Settings per_row = s;
        per_row.taps = row.taps;
        csv += settings_columns(per_row) + ',' + format_double(row.mse_ss) + ',' +
               format_double(row.emse_ss) + ',' + format_double(row.mse_theory) + ',' +
               format_double(row.emse_theory) + ',' + format_double(to_db(row.mse_ss)) + ',' +
               format_double(to_db(row.emse_ss)) + ',' + format_double(to_db(row.mse_theory)) +
               ',' + format_double(to_db(row.emse_theory)) + ',' + (row.unstable ? "1" : "0") +
               '\n';
    }
    return csv;
}

std::string manifest_json(const std::string& command, const Settings& s,
                          const std::vector<EmittedFile>& files) {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["out"] = s.out;
    j["settings"] = {{"mask", s.mask},
                     {"taps", s.taps},
                     {"mu", s.mu},
                     {"sigma_v2", s.sigma_v2},
                     {"sigma_u2", s.sigma_u2},
                     {"runs", s.runs},
                     {"iterations", s.iterations},
                     {"seed", s.seed},
                     {"window", s.window}};
    if (!s.sweep.empty()) j["settings"]["sweep"] = s.sweep;
    j["files"] = nlohmann::ordered_json::array();
    for (const EmittedFile& f : files) {
        char hex[17];
        std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(f.checksum));
        j["files"].push_back({{"name", f.name}, {"fnv1a64", hex}, {"bytes", f.bytes}});
    }
    return j.dump(2) + "\n";
}

}  // namespace gaaf::cli
