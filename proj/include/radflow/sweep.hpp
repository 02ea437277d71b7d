#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "radflow/config.hpp"
#include "radflow/run.hpp"

namespace radflow {

enum class SweepAxis { eps, kappa, n_cells };

SweepAxis parse_sweep_axis(std::string_view name);
std::string_view to_string(SweepAxis axis);

/// `base` with `axis` set to `value` and run_id "<base>-<axis>-<index>".
/// n_cells values must be positive integers.
RunConfig sweep_member(const RunConfig& base, SweepAxis axis, double value, std::size_t index);

/**
 * Runs one simulation per value on up to `jobs` worker threads. Results come
 * back in input order. A member that throws is reported with
 * Termination::error and the sweep carries on. With `out_root`, each member
 * writes into out_root/<run_id>.
 */
std::vector<RunSummary> sweep(const RunConfig& base, SweepAxis axis, std::span<const double> values,
                              unsigned jobs, const std::optional<std::filesystem::path>& out_root = {});

}  // namespace radflow
