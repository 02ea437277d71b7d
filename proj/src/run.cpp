#include "radflow/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "radflow/dynamics.hpp"
#include "radflow/integrator.hpp"

namespace radflow {

std::string_view to_string(Termination reason) {
    switch (reason) {
        case Termination::time_complete: return "time-complete";
        case Termination::positivity_breach: return "positivity-breach";
        case Termination::boundary_contact: return "boundary-contact";
        case Termination::error: return "error";
    }
    return "?";
}

namespace {

void track_peak(DiagnosticsRecord& peak, const DiagnosticsRecord& rec) {
    auto upd = [](double& p, double v) { p = std::max(p, std::abs(v)); };
    peak.t = rec.t;
    upd(peak.mass, rec.mass);
    upd(peak.momentum_scalar, rec.momentum_scalar);
    upd(peak.energy, rec.energy);
    upd(peak.entropy_total, rec.entropy_total);
    upd(peak.entropy_dissipation, rec.entropy_dissipation);
    upd(peak.lyapunov, rec.lyapunov);
    upd(peak.shock_indicator, rec.shock_indicator);
    peak.e_k1.resize(rec.e_k1.size(), 0.0);
    peak.e_k2.resize(rec.e_k2.size(), 0.0);
    for (std::size_t k = 0; k < rec.e_k1.size(); ++k) upd(peak.e_k1[k], rec.e_k1[k]);
    for (std::size_t k = 0; k < rec.e_k2.size(); ++k) upd(peak.e_k2[k], rec.e_k2[k]);
}

}  // namespace

RunSummary run(const RunConfig& config, DiagnosticsSink& sink) {
    const auto started = std::chrono::steady_clock::now();
    RunSummary summary;
    summary.run_id = config.run_id;

    validate_config(config, /*check_boundary=*/false);
    if (!boundary_no_contact(config)) {
        summary.termination_reason = Termination::boundary_contact;
        summary.message = "signals would reach r = " + std::to_string(reach_radius(config)) +
                          " > r_max = " + std::to_string(config.r_max);
        return summary;
    }

    const RadialGrid grid = RadialGrid::build(config.r_max, config.n_cells);
    State state = make_initial_state(grid, config.init_family, config.eps, PhysParams{config.kappa});
    const StepOptions options{config.diffusion_scheme, config.filter_coeff};

    DiagnosticsRecorder recorder(grid, config.diag_max_k);
    DiagnosticsRecord rec = recorder.observe(state);
    track_peak(summary.peak, rec);
    sink.on_record(rec);
    bool last_emitted = true;

    // remaining intervals shorter than this are absorbed into the last step
    const double t_slack = 1e-12 * std::max(1.0, config.t_end);
    while (config.t_end - state.t > t_slack) {
        double dt = cfl_dt(state, grid, config.cfl);
        const bool final_step = state.t + dt >= config.t_end - t_slack;
        if (final_step) dt = config.t_end - state.t;

        auto [next, report] = step(state, grid, dt, options);
        ++summary.steps_taken;
        if (!report.validity.ok) {
            sink.on_breach(next, grid, report.validity);
            summary.termination_reason = Termination::positivity_breach;
            summary.message = report.validity.message;
            break;
        }
        state = std::move(next);
        if (final_step) state.t = config.t_end;

        rec = recorder.observe(state);
        track_peak(summary.peak, rec);
        summary.max_lyapunov_residual =
            std::max(summary.max_lyapunov_residual, std::abs(recorder.lyapunov_residual()));
        last_emitted = summary.steps_taken % config.output_every == 0 || final_step;
        if (last_emitted) sink.on_record(rec);
    }
    if (!last_emitted) sink.on_record(rec);

    summary.final_time = state.t;
    summary.final_e_k1 = rec.e_k1;
    summary.final_e_k2 = rec.e_k2;
    summary.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return summary;
}

}  // namespace radflow
