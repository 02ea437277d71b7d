#include <bit>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "radflow/config.hpp"
#include "radflow/output.hpp"
#include "radflow/run.hpp"

using namespace radflow;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("radflow_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kMinimal = "eps = 1e-3\nkappa = 1\nr_max = 100\nn_cells = 4000\nt_end = 50\n";

RunConfig small_run() {
    RunConfig c;
    c.eps = 0.05;
    c.kappa = 1.0;
    c.r_max = 20.0;
    c.n_cells = 200;
    c.t_end = 1.0;
    c.output_every = 5;
    c.run_id = "small";
    return c;
}

}  // namespace

TEST_CASE("parse_config") {
    SUBCASE("minimal document") {
        const auto c = parse_config(kMinimal);
        CHECK(c.eps == 1e-3);
        CHECK(c.kappa == 1.0);
        CHECK(c.r_max == 100.0);
        CHECK(c.n_cells == 4000);
        CHECK(c.t_end == 50.0);
        CHECK(c.cfl == 0.4);
        CHECK(c.filter_coeff == 0.0);
        CHECK(c.diffusion_scheme == DiffusionScheme::backward_euler);
        CHECK(c.init_family == InitFamily::gaussian_bump);
    }
    SUBCASE("comments and every key") {
        const auto c = parse_config(
            "# full\n"
            "init_family = compact-bump  # trailing\n"
            "eps = 0.01\nkappa = 0.5\nr_max = 30\nn_cells = 300\ncfl = 0.2\nt_end = 5\n"
            "\n"
            "output_every = 7\ndiffusion_scheme = crank-nicolson\nfilter_coeff = 0.01\n"
            "diag_max_k = 4\nseed = 99\nrun_id = abc_1\n");
        CHECK(c.init_family == InitFamily::compact_bump);
        CHECK(c.cfl == 0.2);
        CHECK(c.output_every == 7);
        CHECK(c.diffusion_scheme == DiffusionScheme::crank_nicolson);
        CHECK(c.diag_max_k == 4);
        CHECK(c.seed == 99);
        CHECK(c.run_id == "abc_1");
    }
    SUBCASE("boundary contact") {
        CHECK_THROWS_AS(parse_config("eps = 1e-3\nkappa = 1\nr_max = 10\nn_cells = 100\nt_end = 1000\n"),
                        ConfigError);
    }
    SUBCASE("invalid values") {
        const std::string base = "eps = 1e-3\nr_max = 100\nn_cells = 4000\nt_end = 50\n";
        CHECK_THROWS_AS(parse_config(base + "kappa = -1\n"), ConfigError);
        CHECK_THROWS_AS(parse_config(base + "kappa = abc\n"), ConfigError);
        CHECK_THROWS_AS(parse_config(base + "kappa = 1\ncfl = 0\n"), ConfigError);
        CHECK_THROWS_AS(parse_config(base + "kappa = 1\ncfl = 1.5\n"), ConfigError);
        CHECK_THROWS_AS(parse_config(base + "kappa = 1\ndiag_max_k = 7\n"), ConfigError);
        CHECK_THROWS_AS(parse_config(base + "kappa = 1\nfilter_coeff = -0.1\n"), ConfigError);
        CHECK_THROWS_AS(parse_config(base + "kappa = 1\noutput_every = 0\n"), ConfigError);
        CHECK_THROWS_AS(parse_config(base + "kappa = 1\ndiffusion_scheme = rk4\n"), ConfigError);
    }
    SUBCASE("strict schema") {
        CHECK_THROWS_AS(parse_config(std::string(kMinimal) + "kapa = 1\n"), ConfigError);
        CHECK_THROWS_AS(parse_config(std::string(kMinimal) + "eps = 2e-3\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("eps = 1e-3\nkappa = 1\nr_max = 100\nt_end = 50\n"), ConfigError);
        CHECK_THROWS_AS(parse_config(std::string(kMinimal) + "just text\n"), ConfigError);
    }
    SUBCASE("format round trip") {
        auto c = parse_config(kMinimal);
        c.eps = 0.1234567890123;
        c.r_max = 250.0;
        c.run_id = "rt";
        c.seed = 12345678901234ULL;
        const auto back = parse_config(format_config(c));
        CHECK(back.eps == c.eps);
        CHECK(back.seed == c.seed);
        CHECK(back.run_id == c.run_id);
        CHECK(format_config(back) == format_config(c));
    }
    SUBCASE("load from file") {
        const auto dir = scratch("cfg");
        std::ofstream(dir / "a.cfg") << kMinimal;
        CHECK(load_config(dir / "a.cfg").n_cells == 4000);
        CHECK_THROWS_AS(load_config(dir / "missing.cfg"), ConfigError);
    }
}

TEST_CASE("reach radius") {
    auto c = parse_config(kMinimal);
    const double want = support_radius(InitFamily::gaussian_bump) + 1.2 * (std::sqrt(2.002) + 1e-3) * 50.0;
    CHECK(reach_radius(c) == doctest::Approx(want).epsilon(1e-14));
    CHECK(boundary_no_contact(c));
    c.r_max = want - 0.01;
    CHECK_FALSE(boundary_no_contact(c));
}

TEST_CASE("presets") {
    const auto names = preset_names();
    CHECK(names.size() == 4);
    for (auto name : names) {
        for (const auto& c : preset(name)) {
            CHECK_NOTHROW(validate_config(c));
            CHECK(boundary_no_contact(c));
        }
    }
    const auto sdg = preset("small-data-global");
    REQUIRE(sdg.size() == 1);
    CHECK(sdg[0].eps == 1e-3);
    CHECK(sdg[0].kappa == 1.0);
    CHECK(sdg[0].t_end == 50.0);
    CHECK(sdg[0].r_max >= 100.0);
    CHECK(sdg[0].r_max / static_cast<double>(sdg[0].n_cells) == doctest::Approx(0.025));

    const auto ncs = preset("no-conduction-steepening");
    REQUIRE(ncs.size() == 1);
    CHECK(ncs[0].eps == 0.3);
    CHECK(ncs[0].kappa == 0.0);
    CHECK(ncs[0].t_end == 20.0);
    CHECK(ncs[0].filter_coeff == 0.0);

    CHECK(preset("entropy-audit").size() == 1);
    const auto conv = preset("convergence-study");
    REQUIRE(conv.size() == 3);
    CHECK(conv[1].n_cells == 2 * conv[0].n_cells);
    CHECK(conv[2].n_cells == 2 * conv[1].n_cells);
    CHECK(conv[0].run_id != conv[1].run_id);

    CHECK_THROWS_AS(preset("unknown"), ConfigError);
}

TEST_CASE("timeseries header") {
    CHECK(timeseries_header(2) ==
          "t,mass,momentum_scalar,energy,entropy_total,entropy_dissipation,lyapunov,shock_indicator,"
          "E01,E11,E21,E12,E22");
    CHECK(timeseries_header(0) ==
          "t,mass,momentum_scalar,energy,entropy_total,entropy_dissipation,lyapunov,shock_indicator,E01");
}

TEST_CASE("shortest round-trip formatting") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1e-300) == "1e-300");
    for (double v : {1.0 / 3.0, 2.0 / 7.0, 1e-17, 123456.789, -5.5e-9, std::numeric_limits<double>::min()}) {
        const auto s = format_double(v);
        CHECK(std::bit_cast<std::uint64_t>(std::stod(s)) == std::bit_cast<std::uint64_t>(v));
    }
}

TEST_CASE("zero-data run with three outputs") {
    RunConfig c;
    c.init_family = InitFamily::zero;
    c.eps = 0.0;
    c.r_max = 10.0;
    c.n_cells = 100;
    c.t_end = 1.0;
    c.output_every = 18;  // 36 steps at dt ~ 0.0283
    RecordCollector sink;
    const auto summary = run(c, sink);
    CHECK(summary.termination_reason == Termination::time_complete);
    CHECK(summary.steps_taken == 36);
    CHECK(summary.final_time == 1.0);
    REQUIRE(sink.records.size() == 3);

    const auto dir = scratch("zero");
    emit_timeseries(sink.records, dir / "ts.csv", c.diag_max_k);
    std::ifstream in(dir / "ts.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == timeseries_header(2));
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::stringstream ss(line);
        std::string field;
        std::getline(ss, field, ',');  // t
        while (std::getline(ss, field, ',')) CHECK(field == "0");
    }
    CHECK(rows == 3);
}

TEST_CASE("emitted CSV decodes bit-for-bit") {
    RecordCollector sink;
    const auto summary = run(small_run(), sink);
    REQUIRE(summary.termination_reason == Termination::time_complete);
    const auto dir = scratch("roundtrip");
    emit_timeseries(sink.records, dir / "ts.csv", 2);
    const auto back = read_timeseries(dir / "ts.csv", 2);
    REQUIRE(back.size() == sink.records.size());
    auto same = [](double x, double y) { return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y); };
    for (std::size_t i = 0; i < back.size(); ++i) {
        const auto& a = sink.records[i];
        const auto& b = back[i];
        CHECK(same(a.t, b.t));
        CHECK(same(a.mass, b.mass));
        CHECK(same(a.momentum_scalar, b.momentum_scalar));
        CHECK(same(a.energy, b.energy));
        CHECK(same(a.entropy_total, b.entropy_total));
        CHECK(same(a.entropy_dissipation, b.entropy_dissipation));
        CHECK(same(a.lyapunov, b.lyapunov));
        CHECK(same(a.shock_indicator, b.shock_indicator));
        REQUIRE(a.e_k1.size() == b.e_k1.size());
        REQUIRE(a.e_k2.size() == b.e_k2.size());
        for (std::size_t k = 0; k < a.e_k1.size(); ++k) CHECK(same(a.e_k1[k], b.e_k1[k]));
        for (std::size_t k = 0; k < a.e_k2.size(); ++k) CHECK(same(a.e_k2[k], b.e_k2[k]));
    }
    CHECK_THROWS(read_timeseries(dir / "ts.csv", 3));
}

TEST_CASE("run cadence and summary") {
    RecordCollector sink;
    auto c = small_run();
    const auto summary = run(c, sink);
    CHECK(summary.run_id == "small");
    CHECK(summary.final_time == 1.0);
    // first record, every 5th step, and the final step
    const std::size_t expected = 1 + summary.steps_taken / 5 + (summary.steps_taken % 5 != 0 ? 1 : 0);
    CHECK(sink.records.size() == expected);
    CHECK(sink.records.front().t == 0.0);
    CHECK(sink.records.back().t == 1.0);
    CHECK(summary.final_e_k1 == sink.records.back().e_k1);
    CHECK(summary.peak.shock_indicator >= sink.records.front().shock_indicator);

    c.t_end = 1000.0;
    const auto contact = run(c, sink);
    CHECK(contact.termination_reason == Termination::boundary_contact);
    CHECK(contact.steps_taken == 0);

    c = small_run();
    c.kappa = -1.0;
    CHECK_THROWS_AS(run(c, sink), ConfigError);
}

TEST_CASE("run_to_directory writes config, timeseries and summary; output is deterministic") {
    const auto c = small_run();
    const auto d1 = scratch("det1");
    const auto d2 = scratch("det2");
    const auto s1 = run_to_directory(c, d1);
    const auto s2 = run_to_directory(c, d2);
    CHECK(s1.steps_taken == s2.steps_taken);
    CHECK(slurp(d1 / "timeseries.csv") == slurp(d2 / "timeseries.csv"));
    CHECK(slurp(d1 / "config.txt") == slurp(d2 / "config.txt"));
    CHECK(parse_config(slurp(d1 / "config.txt")).eps == c.eps);

    const auto j = nlohmann::json::parse(slurp(d1 / "summary.json"));
    for (const char* key : {"run_id", "termination_reason", "steps_taken", "final_time", "wall_clock_seconds",
                            "peak", "final_e_k1", "final_e_k2", "max_lyapunov_residual", "message"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["termination_reason"] == "time-complete");
    CHECK(j["peak"].contains("shock_indicator"));
}

TEST_CASE("positivity breach dumps the offending state") {
    RunConfig c;
    c.eps = 0.95;
    c.kappa = 0.0;
    c.r_max = 60.0;
    c.n_cells = 600;
    c.cfl = 1.0;
    c.t_end = 10.0;
    const auto dir = scratch("breach");
    const auto summary = run_to_directory(c, dir);
    CHECK(summary.termination_reason == Termination::positivity_breach);
    CHECK(fs::exists(dir / "breach_state.csv"));
    CHECK(slurp(dir / "breach_state.csv").rfind("r,a,u,theta\n", 0) == 0);
    CHECK(fs::exists(dir / "summary.json"));
}
