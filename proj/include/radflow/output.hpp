#pragma once

#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "radflow/diagnostics.hpp"
#include "radflow/run.hpp"

namespace radflow {

/// t,mass,momentum_scalar,energy,entropy_total,entropy_dissipation,lyapunov,
/// shock_indicator,E01,...,E{K}1,E12,...,E{K}2
std::string timeseries_header(int max_k);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// One CSV row (no trailing newline).
std::string format_record(const DiagnosticsRecord& record);

/// Streams records to a CSV file. I/O failures throw std::runtime_error with
/// the path in the message.
class TimeseriesWriter {
public:
    TimeseriesWriter(const std::filesystem::path& path, int max_k);
    void write(const DiagnosticsRecord& record);
    void close();

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t columns_;
};

void emit_timeseries(std::span<const DiagnosticsRecord> records, const std::filesystem::path& path,
                     int max_k);

/// Parses a file produced by emit_timeseries. Throws std::runtime_error on a
/// header mismatch or malformed number.
std::vector<DiagnosticsRecord> read_timeseries(const std::filesystem::path& path, int max_k);

std::string summary_to_json(const RunSummary& summary);
void write_summary(const RunSummary& summary, const std::filesystem::path& path);

/// Writes r,a,u,theta per cell (used for the positivity-breach dump).
void write_state(const State& state, const RadialGrid& grid, const std::filesystem::path& path);

/// Sink writing timeseries.csv and, on breach, breach_state.csv into `dir`.
class FileSink : public DiagnosticsSink {
public:
    FileSink(const std::filesystem::path& dir, int max_k);
    void on_record(const DiagnosticsRecord& record) override;
    void on_breach(const State& state, const RadialGrid& grid, const ValidityReport& report) override;
    void close() { writer_.close(); }

private:
    std::filesystem::path dir_;
    TimeseriesWriter writer_;
};

/// Creates `dir`, runs `config` into it (timeseries.csv, summary.json,
/// config.txt) and returns the summary.
RunSummary run_to_directory(const RunConfig& config, const std::filesystem::path& dir);

}  // namespace radflow
