#include "radflow/sweep.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "radflow/output.hpp"

namespace radflow {

SweepAxis parse_sweep_axis(std::string_view name) {
    if (name == "eps") return SweepAxis::eps;
    if (name == "kappa") return SweepAxis::kappa;
    if (name == "n_cells") return SweepAxis::n_cells;
    throw ConfigError("unknown sweep axis '" + std::string(name) + "' (expected eps, kappa or n_cells)");
}

std::string_view to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::eps: return "eps";
        case SweepAxis::kappa: return "kappa";
        case SweepAxis::n_cells: return "n_cells";
    }
    return "?";
}

RunConfig sweep_member(const RunConfig& base, SweepAxis axis, double value, std::size_t index) {
    if (!std::isfinite(value)) throw ConfigError("sweep values must be finite");
    RunConfig c = base;
    switch (axis) {
        case SweepAxis::eps: c.eps = value; break;
        case SweepAxis::kappa: c.kappa = value; break;
        case SweepAxis::n_cells:
            if (value < 1.0 || value != std::floor(value)) {
                throw ConfigError("n_cells sweep values must be positive integers");
            }
            c.n_cells = static_cast<std::size_t>(value);
            break;
    }
    c.run_id = base.run_id + "-" + std::string(to_string(axis)) + "-" + std::to_string(index);
    return c;
}

std::vector<RunSummary> sweep(const RunConfig& base, SweepAxis axis, std::span<const double> values,
                              unsigned jobs, const std::optional<std::filesystem::path>& out_root) {
    std::vector<RunSummary> results(values.size());
    if (values.empty()) return results;

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < values.size(); i = next.fetch_add(1)) {
            RunSummary& slot = results[i];
            slot.run_id = base.run_id + "-" + std::string(to_string(axis)) + "-" + std::to_string(i);
            try {
                const RunConfig member = sweep_member(base, axis, values[i], i);
                if (out_root) {
                    slot = run_to_directory(member, *out_root / member.run_id);
                } else {
                    NullSink sink;
                    slot = run(member, sink);
                }
            } catch (const std::exception& e) {
                slot.termination_reason = Termination::error;
                slot.message = e.what();
            }
        }
    };

    const unsigned n_threads =
        std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(values.size())));
    {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    }
    return results;
}

}  // namespace radflow
