#include "radflow/output.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace radflow {

namespace {

constexpr const char* kScalarColumns[] = {
    "t", "mass", "momentum_scalar", "energy", "entropy_total", "entropy_dissipation", "lyapunov",
    "shock_indicator"};
constexpr std::size_t kNumScalars = std::size(kScalarColumns);

std::runtime_error io_error(const std::filesystem::path& path, const std::string& what) {
    return std::runtime_error(what + ": " + path.string());
}

std::vector<double*> scalar_slots(DiagnosticsRecord& r) {
    return {&r.t, &r.mass, &r.momentum_scalar, &r.energy, &r.entropy_total, &r.entropy_dissipation,
            &r.lyapunov, &r.shock_indicator};
}

nlohmann::json record_to_json(const DiagnosticsRecord& r) {
    return {{"t", r.t},
            {"mass", r.mass},
            {"momentum_scalar", r.momentum_scalar},
            {"energy", r.energy},
            {"entropy_total", r.entropy_total},
            {"entropy_dissipation", r.entropy_dissipation},
            {"lyapunov", r.lyapunov},
            {"shock_indicator", r.shock_indicator},
            {"e_k1", r.e_k1},
            {"e_k2", r.e_k2}};
}

}  // namespace

std::string timeseries_header(int max_k) {
    std::string h;
    for (const char* c : kScalarColumns) {
        if (!h.empty()) h += ',';
        h += c;
    }
    for (int k = 0; k <= max_k; ++k) h += ",E" + std::to_string(k) + "1";
    for (int k = 1; k <= max_k; ++k) h += ",E" + std::to_string(k) + "2";
    return h;
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string format_record(const DiagnosticsRecord& r) {
    std::string row = format_double(r.t);
    for (double v : {r.mass, r.momentum_scalar, r.energy, r.entropy_total, r.entropy_dissipation, r.lyapunov,
                     r.shock_indicator}) {
        row += ',';
        row += format_double(v);
    }
    for (double v : r.e_k1) (row += ',') += format_double(v);
    for (double v : r.e_k2) (row += ',') += format_double(v);
    return row;
}

TimeseriesWriter::TimeseriesWriter(const std::filesystem::path& path, int max_k)
    : path_(path), out_(path), columns_(kNumScalars + 2 * static_cast<std::size_t>(max_k) + 1) {
    if (!out_) throw io_error(path, "cannot open timeseries file");
    out_ << timeseries_header(max_k) << '\n';
}

void TimeseriesWriter::write(const DiagnosticsRecord& record) {
    if (kNumScalars + record.e_k1.size() + record.e_k2.size() != columns_) {
        throw std::invalid_argument("timeseries: record width does not match header");
    }
    out_ << format_record(record) << '\n';
    if (!out_) throw io_error(path_, "write failed");
}

void TimeseriesWriter::close() {
    if (!out_.is_open()) return;
    out_.flush();
    if (!out_) throw io_error(path_, "flush failed");
    out_.close();
}

void emit_timeseries(std::span<const DiagnosticsRecord> records, const std::filesystem::path& path,
                     int max_k) {
    TimeseriesWriter writer(path, max_k);
    for (const auto& r : records) writer.write(r);
    writer.close();
}

std::vector<DiagnosticsRecord> read_timeseries(const std::filesystem::path& path, int max_k) {
    std::ifstream in(path);
    if (!in) throw io_error(path, "cannot open timeseries file");
    std::string line;
    if (!std::getline(in, line) || line != timeseries_header(max_k)) {
        throw io_error(path, "unexpected timeseries header");
    }
    const auto k = static_cast<std::size_t>(max_k);
    std::vector<DiagnosticsRecord> out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<double> values;
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view field = rest.substr(0, comma);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc() || ptr != field.data() + field.size()) {
                throw io_error(path, "malformed number on line " + std::to_string(line_no));
            }
            values.push_back(v);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (values.size() != kNumScalars + 2 * k + 1) {
            throw io_error(path, "wrong column count on line " + std::to_string(line_no));
        }
        DiagnosticsRecord r;
        auto slots = scalar_slots(r);
        for (std::size_t i = 0; i < kNumScalars; ++i) *slots[i] = values[i];
        r.e_k1.assign(values.begin() + kNumScalars, values.begin() + kNumScalars + k + 1);
        r.e_k2.assign(values.begin() + kNumScalars + k + 1, values.end());
        out.push_back(std::move(r));
    }
    return out;
}

std::string summary_to_json(const RunSummary& s) {
    const nlohmann::json j = {{"run_id", s.run_id},
                              {"termination_reason", to_string(s.termination_reason)},
                              {"steps_taken", s.steps_taken},
                              {"final_time", s.final_time},
                              {"wall_clock_seconds", s.wall_clock_seconds},
                              {"peak", record_to_json(s.peak)},
                              {"final_e_k1", s.final_e_k1},
                              {"final_e_k2", s.final_e_k2},
                              {"max_lyapunov_residual", s.max_lyapunov_residual},
                              {"message", s.message}};
    return j.dump(2);
}

void write_summary(const RunSummary& summary, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw io_error(path, "cannot open summary file");
    out << summary_to_json(summary) << '\n';
    if (!out) throw io_error(path, "write failed");
}

void write_state(const State& state, const RadialGrid& grid, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw io_error(path, "cannot open state dump");
    out << "r,a,u,theta\n";
    for (std::size_t i = 0; i < state.size(); ++i) {
        out << format_double(grid.r(i)) << ',' << format_double(state.a[i]) << ','
            << format_double(state.u[i]) << ',' << format_double(state.theta[i]) << '\n';
    }
    if (!out) throw io_error(path, "write failed");
}

FileSink::FileSink(const std::filesystem::path& dir, int max_k)
    : dir_(dir), writer_(dir / "timeseries.csv", max_k) {}

void FileSink::on_record(const DiagnosticsRecord& record) { writer_.write(record); }

void FileSink::on_breach(const State& state, const RadialGrid& grid, const ValidityReport&) {
    write_state(state, grid, dir_ / "breach_state.csv");
}

RunSummary run_to_directory(const RunConfig& config, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw io_error(dir, "cannot create output directory (" + ec.message() + ")");
    {
        std::ofstream cfg(dir / "config.txt");
        if (!cfg) throw io_error(dir / "config.txt", "cannot write config copy");
        cfg << format_config(config);
    }
    FileSink sink(dir, config.diag_max_k);
    RunSummary summary = run(config, sink);
    sink.close();
    write_summary(summary, dir / "summary.json");
    return summary;
}

}  // namespace radflow
