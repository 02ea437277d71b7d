#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "radflow/config.hpp"
#include "radflow/diagnostics.hpp"
#include "radflow/grid.hpp"
#include "radflow/state.hpp"

namespace radflow {

enum class Termination {
    time_complete,
    positivity_breach,
    boundary_contact,
    error,  ///< run could not start or threw; details in RunSummary::message
};

std::string_view to_string(Termination reason);

struct RunSummary {
    std::string run_id;
    Termination termination_reason = Termination::time_complete;
    std::size_t steps_taken = 0;
    double final_time = 0.0;
    double wall_clock_seconds = 0.0;
    /// Largest absolute value of every record field over all observed steps
    /// (peak.t is the time of the last observation).
    DiagnosticsRecord peak;
    std::vector<double> final_e_k1;
    std::vector<double> final_e_k2;
    /// max over steps of |L(t) - L(0) + int_0^t kappa D|
    double max_lyapunov_residual = 0.0;
    std::string message;
};

/// Receives records at the output cadence and, on a positivity breach, the
/// offending state.
class DiagnosticsSink {
public:
    virtual ~DiagnosticsSink() = default;
    virtual void on_record(const DiagnosticsRecord& record) = 0;
    virtual void on_breach(const State& /*state*/, const RadialGrid& /*grid*/,
                           const ValidityReport& /*report*/) {}
};

/// Keeps every record in memory.
class RecordCollector : public DiagnosticsSink {
public:
    void on_record(const DiagnosticsRecord& record) override { records.push_back(record); }
    std::vector<DiagnosticsRecord> records;
};

class NullSink : public DiagnosticsSink {
public:
    void on_record(const DiagnosticsRecord&) override {}
};

/**
 * Integrates the configured experiment to t_end. The first and last records
 * are always emitted; in between every `output_every`-th step.
 *
 * Config violations other than boundary contact throw ConfigError; a config
 * that would let signals reach r_max returns immediately with
 * Termination::boundary_contact. A positivity breach stops the run, hands the
 * offending state to the sink and returns Termination::positivity_breach.
 */
RunSummary run(const RunConfig& config, DiagnosticsSink& sink);

}  // namespace radflow
