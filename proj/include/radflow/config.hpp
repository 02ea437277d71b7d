#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "radflow/integrator.hpp"
#include "radflow/state.hpp"

namespace radflow {

/// Invalid or unreadable run configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Safety factor on the signal-speed estimate in the boundary-contact check.
inline constexpr double kBoundarySafety = 1.2;

struct RunConfig {
    InitFamily init_family = InitFamily::gaussian_bump;
    double eps = 0.0;
    double kappa = 1.0;
    double r_max = 0.0;
    std::size_t n_cells = 0;
    double cfl = 0.4;
    double t_end = 0.0;
    std::size_t output_every = 50;
    DiffusionScheme diffusion_scheme = DiffusionScheme::backward_euler;
    double filter_coeff = 0.0;
    int diag_max_k = 2;
    std::uint64_t seed = 0;
    std::string run_id = "run";
};

/// support + 1.2 * (sqrt(2 (1 + eps)) + eps) * t_end: the radius a signal
/// can reach by t_end. Runs are only meaningful while this stays inside r_max.
double reach_radius(const RunConfig& config);
bool boundary_no_contact(const RunConfig& config);

/// Throws ConfigError naming the first violated invariant. With
/// `check_boundary` false the boundary-contact invariant is skipped.
void validate_config(const RunConfig& config, bool check_boundary = true);

/**
 * Parses `key = value` lines. `#` starts a comment, blank lines are ignored.
 * Required keys: eps, kappa, r_max, n_cells, t_end. Unknown or repeated keys,
 * malformed values and invariant violations throw ConfigError.
 */
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Inverse of parse_config (every key written explicitly).
std::string format_config(const RunConfig& config);

/// Named experiment setups:
///   small-data-global, no-conduction-steepening, entropy-audit (one config each),
///   convergence-study (three resolutions). Throws ConfigError for unknown names.
std::vector<RunConfig> preset(std::string_view name);
std::vector<std::string_view> preset_names();

}  // namespace radflow
