#include "radflow/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "radflow/radial_ops.hpp"

namespace radflow {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

double to_double(std::string_view key, std::string_view text, std::size_t line) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw ConfigError(where(line) + "'" + std::string(key) + "' expects a finite number, got '" +
                          std::string(text) + "'");
    }
    return value;
}

std::uint64_t to_unsigned(std::string_view key, std::string_view text, std::size_t line) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError(where(line) + "'" + std::string(key) + "' expects a non-negative integer, got '" +
                          std::string(text) + "'");
    }
    return value;
}

std::string fmt(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

double reach_radius(const RunConfig& c) {
    return support_radius(c.init_family) + kBoundarySafety * (std::sqrt(2.0 * (1.0 + c.eps)) + c.eps) * c.t_end;
}

bool boundary_no_contact(const RunConfig& c) { return reach_radius(c) <= c.r_max; }

void validate_config(const RunConfig& c, bool check_boundary) {
    if (!(c.eps >= 0.0) || c.eps >= 1.0) throw ConfigError("eps must satisfy 0 <= eps < 1");
    if (!(c.kappa >= 0.0)) throw ConfigError("kappa must be >= 0");
    if (!(c.r_max > 0.0)) throw ConfigError("r_max must be > 0");
    if (c.n_cells < kMinCells) throw ConfigError("n_cells must be >= " + std::to_string(kMinCells));
    if (!(c.cfl > 0.0) || c.cfl > 1.0) throw ConfigError("cfl must lie in (0, 1]");
    if (!(c.t_end >= 0.0)) throw ConfigError("t_end must be >= 0");
    if (c.output_every == 0) throw ConfigError("output_every must be >= 1");
    if (!(c.filter_coeff >= 0.0)) throw ConfigError("filter_coeff must be >= 0");
    // 1/16 is the stability limit of the explicit fourth-difference filter
    if (c.filter_coeff > 1.0 / 16.0) throw ConfigError("filter_coeff must be <= 1/16");
    if (c.diag_max_k < 0 || c.diag_max_k > kMaxDerivativeOrder) {
        throw ConfigError("diag_max_k must lie in [0, " + std::to_string(kMaxDerivativeOrder) + "]");
    }
    if (c.run_id.empty() || c.run_id.find_first_of("/\\ \t") != std::string::npos) {
        throw ConfigError("run_id must be a non-empty token without separators or spaces");
    }
    if (check_boundary && !boundary_no_contact(c)) {
        std::ostringstream msg;
        msg << "boundary-no-contact violated: signals reach r = " << reach_radius(c)
            << " by t_end but r_max = " << c.r_max;
        throw ConfigError(msg.str());
    }
}

RunConfig parse_config(std::string_view text) {
    RunConfig c;
    std::map<std::string, std::size_t, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(where(line_no) + "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw ConfigError(where(line_no) + "expected 'key = value'");
        if (auto [it, inserted] = seen.emplace(key, line_no); !inserted) {
            throw ConfigError(where(line_no) + "duplicate key '" + key + "' (first on line " +
                              std::to_string(it->second) + ")");
        }

        try {
            if (key == "init_family") c.init_family = parse_init_family(value);
            else if (key == "eps") c.eps = to_double(key, value, line_no);
            else if (key == "kappa") c.kappa = to_double(key, value, line_no);
            else if (key == "r_max") c.r_max = to_double(key, value, line_no);
            else if (key == "n_cells") c.n_cells = to_unsigned(key, value, line_no);
            else if (key == "cfl") c.cfl = to_double(key, value, line_no);
            else if (key == "t_end") c.t_end = to_double(key, value, line_no);
            else if (key == "output_every") c.output_every = to_unsigned(key, value, line_no);
            else if (key == "diffusion_scheme") c.diffusion_scheme = parse_diffusion_scheme(value);
            else if (key == "filter_coeff") c.filter_coeff = to_double(key, value, line_no);
            else if (key == "diag_max_k") {
                const auto k = to_unsigned(key, value, line_no);
                c.diag_max_k = k > 1000 ? 1000 : static_cast<int>(k);  // range checked below
            }
            else if (key == "seed") c.seed = to_unsigned(key, value, line_no);
            else if (key == "run_id") c.run_id = std::string(value);
            else throw ConfigError(where(line_no) + "unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw ConfigError(where(line_no) + e.what());
        }
    }
    for (const char* required : {"eps", "kappa", "r_max", "n_cells", "t_end"}) {
        if (!seen.contains(required)) throw ConfigError(std::string("missing required key '") + required + "'");
    }
    validate_config(c);
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string format_config(const RunConfig& c) {
    std::ostringstream out;
    out << "init_family = " << to_string(c.init_family) << '\n'
        << "eps = " << fmt(c.eps) << '\n'
        << "kappa = " << fmt(c.kappa) << '\n'
        << "r_max = " << fmt(c.r_max) << '\n'
        << "n_cells = " << c.n_cells << '\n'
        << "cfl = " << fmt(c.cfl) << '\n'
        << "t_end = " << fmt(c.t_end) << '\n'
        << "output_every = " << c.output_every << '\n'
        << "diffusion_scheme = " << to_string(c.diffusion_scheme) << '\n'
        << "filter_coeff = " << fmt(c.filter_coeff) << '\n'
        << "diag_max_k = " << c.diag_max_k << '\n'
        << "seed = " << c.seed << '\n'
        << "run_id = " << c.run_id << '\n';
    return out.str();
}

std::vector<std::string_view> preset_names() {
    return {"small-data-global", "no-conduction-steepening", "entropy-audit", "convergence-study"};
}

std::vector<RunConfig> preset(std::string_view name) {
    RunConfig c;
    c.init_family = InitFamily::gaussian_bump;
    c.cfl = 0.4;
    c.diag_max_k = 2;
    if (name == "small-data-global") {
        // reach radius ~ 91; the extra room keeps the diffusive tail of the
        // acoustic front away from r_max
        c.eps = 1e-3;
        c.kappa = 1.0;
        c.t_end = 50.0;
        c.r_max = 150.0;
        c.n_cells = 6000;
        c.output_every = 50;
        c.run_id = "small-data-global";
        return {c};
    }
    if (name == "no-conduction-steepening") {
        // reach radius 6 + 1.2*(sqrt(2.6) + 0.3)*20 ~ 52 < 60.
        // Small cfl: RK2 growth of the undamped near-origin modes scales as cfl^3.
        c.eps = 0.3;
        c.kappa = 0.0;
        c.t_end = 20.0;
        c.r_max = 60.0;
        c.n_cells = 3000;
        c.cfl = 0.1;
        c.filter_coeff = 0.0;
        c.output_every = 100;
        c.run_id = "no-conduction-steepening";
        return {c};
    }
    if (name == "entropy-audit") {
        c.eps = 1e-2;
        c.kappa = 1.0;
        c.t_end = 20.0;
        c.r_max = 70.0;
        c.n_cells = 2800;
        c.output_every = 1;
        c.run_id = "entropy-audit";
        return {c};
    }
    if (name == "convergence-study") {
        std::vector<RunConfig> set;
        for (std::size_t n : {600u, 1200u, 2400u}) {
            RunConfig r = c;
            r.eps = 1e-3;
            r.kappa = 1.0;
            r.t_end = 10.0;
            r.r_max = 30.0;
            r.n_cells = n;
            r.output_every = 10;
            r.run_id = "convergence-study-n" + std::to_string(n);
            set.push_back(r);
        }
        return set;
    }
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

}  // namespace radflow
