// Command-line driver: run, preset, sweep, validate-config.
//
// Exit codes: 0 time-complete, 2 positivity breach, 3 config error, 1 other.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "radflow/config.hpp"
#include "radflow/output.hpp"
#include "radflow/run.hpp"
#include "radflow/sweep.hpp"

namespace fs = std::filesystem;
using namespace radflow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBreach = 2;
constexpr int kExitConfig = 3;

int exit_code(const RunSummary& s) {
    switch (s.termination_reason) {
        case Termination::time_complete: return kExitOk;
        case Termination::positivity_breach: return kExitBreach;
        case Termination::boundary_contact: return kExitConfig;
        case Termination::error: return kExitFailure;
    }
    return kExitFailure;
}

// Worst code wins: config error > breach > failure > ok.
int combine(int acc, int code) {
    auto rank = [](int c) { return c == kExitConfig ? 3 : c == kExitBreach ? 2 : c == kExitFailure ? 1 : 0; };
    return rank(code) > rank(acc) ? code : acc;
}

void report(const RunSummary& s, const fs::path& dir) {
    std::cout << s.run_id << ": " << to_string(s.termination_reason) << " at t=" << s.final_time << " after "
              << s.steps_taken << " steps (" << s.wall_clock_seconds << " s)";
    if (!dir.empty()) std::cout << " -> " << dir.string();
    if (!s.message.empty()) std::cout << "\n  " << s.message;
    std::cout << '\n';
}

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> values;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw ConfigError("bad sweep value '" + item + "'");
        }
        if (used != item.size()) throw ConfigError("bad sweep value '" + item + "'");
        values.push_back(v);
    }
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radially symmetric heat-conductive compressible gas: simulator and diagnostics"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    auto* run_cmd = app.add_subcommand("run", "Run one configuration");
    run_cmd->add_option("--config", config_path, "key = value config file")->required();
    run_cmd->add_option("--out", out_dir, "output directory")->required();

    std::string preset_name;
    auto* preset_cmd = app.add_subcommand("preset", "Run a named experiment preset");
    preset_cmd->add_option("name", preset_name, "small-data-global | no-conduction-steepening | "
                                                "entropy-audit | convergence-study")
        ->required();
    preset_cmd->add_option("--out", out_dir, "output directory")->required();

    std::string axis_name;
    std::string values_csv;
    unsigned jobs = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter of a configuration");
    sweep_cmd->add_option("--config", config_path, "base config file")->required();
    sweep_cmd->add_option("--axis", axis_name, "eps | kappa | n_cells")->required();
    sweep_cmd->add_option("--values", values_csv, "comma-separated values")->required();
    sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", out_dir, "output root (default: sweep-<run_id>)");

    std::string validate_path;
    auto* validate_cmd = app.add_subcommand("validate-config", "Parse and check a config file");
    validate_cmd->add_option("path", validate_path, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*run_cmd) {
            const RunConfig cfg = load_config(config_path);
            const auto summary = run_to_directory(cfg, out_dir);
            report(summary, out_dir);
            return exit_code(summary);
        }
        if (*preset_cmd) {
            const auto configs = preset(preset_name);
            int code = kExitOk;
            for (const auto& cfg : configs) {
                const fs::path dir = configs.size() == 1 ? fs::path(out_dir) : fs::path(out_dir) / cfg.run_id;
                const auto summary = run_to_directory(cfg, dir);
                report(summary, dir);
                code = combine(code, exit_code(summary));
            }
            return code;
        }
        if (*sweep_cmd) {
            const RunConfig base = load_config(config_path);
            const SweepAxis axis = parse_sweep_axis(axis_name);
            const auto values = parse_values(values_csv);
            const fs::path root = out_dir.empty() ? fs::path("sweep-" + base.run_id) : fs::path(out_dir);
            const auto summaries = sweep(base, axis, values, jobs, root);
            int code = kExitOk;
            for (const auto& s : summaries) {
                report(s, root / s.run_id);
                code = combine(code, exit_code(s));
            }
            return code;
        }
        if (*validate_cmd) {
            const RunConfig cfg = load_config(validate_path);
            std::cout << format_config(cfg);
            std::cout << "# ok: signal reach radius " << reach_radius(cfg) << " <= r_max " << cfg.r_max << '\n';
            return kExitOk;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
