#include "radflow/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "radflow/dynamics.hpp"

namespace radflow {

DiffusionScheme parse_diffusion_scheme(std::string_view name) {
    if (name == "backward-euler") return DiffusionScheme::backward_euler;
    if (name == "crank-nicolson") return DiffusionScheme::crank_nicolson;
    throw std::invalid_argument("unknown diffusion scheme '" + std::string(name) + "'");
}

std::string_view to_string(DiffusionScheme scheme) {
    return scheme == DiffusionScheme::backward_euler ? "backward-euler" : "crank-nicolson";
}

bool TridiagonalSystem::diagonally_dominant() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        const double off = (i > 0 ? std::abs(lower[i]) : 0.0) + (i + 1 < n ? std::abs(upper[i]) : 0.0);
        if (std::abs(diag[i]) < off) return false;
    }
    return true;
}

std::vector<double> TridiagonalSystem::solve() const {
    const std::size_t n = size();
    std::vector<double> c(n), d(n), x(n);
    double denom = diag[0];
    c[0] = n > 1 ? upper[0] / denom : 0.0;
    d[0] = rhs[0] / denom;
    for (std::size_t i = 1; i < n; ++i) {
        denom = diag[i] - lower[i] * c[i - 1];
        c[i] = i + 1 < n ? upper[i] / denom : 0.0;
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / denom;
    }
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

double TridiagonalSystem::relative_residual(std::span<const double> x) const {
    const std::size_t n = size();
    double res = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double ax = diag[i] * x[i];
        if (i > 0) ax += lower[i] * x[i - 1];
        if (i + 1 < n) ax += upper[i] * x[i + 1];
        res = std::max(res, std::abs(ax - rhs[i]));
        scale = std::max(scale, std::abs(rhs[i]));
    }
    if (scale == 0.0) return res;
    return res / scale;
}

TridiagonalSystem assemble_diffusion_system(std::span<const double> theta_star,
                                            std::span<const double> a, const RadialGrid& grid,
                                            double dt, DiffusionScheme scheme, double kappa) {
    const std::size_t n = grid.size();
    if (theta_star.size() != n || a.size() != n) {
        throw std::invalid_argument("assemble_diffusion_system: field/grid size mismatch");
    }
    const double implicit_weight = scheme == DiffusionScheme::backward_euler ? 1.0 : 0.5;
    const double scale = 4.0 * std::numbers::pi / grid.dr();

    TridiagonalSystem sys;
    sys.lower.assign(n, 0.0);
    sys.diag.assign(n, 0.0);
    sys.upper.assign(n, 0.0);
    sys.rhs.assign(theta_star.begin(), theta_star.end());

    for (std::size_t i = 0; i < n; ++i) {
        if (!(1.0 + a[i] > 0.0)) {
            throw std::domain_error("assemble_diffusion_system: 1 + a <= 0 at cell " + std::to_string(i));
        }
        // L theta_i = cin*(theta_{i-1} - theta_i) + cout*(theta_{i+1} - theta_i)
        const double rin = grid.face(i);
        const double rout = grid.face(i + 1);
        const double geom = kappa * scale / (grid.weight(i) * (1.0 + a[i]));
        const double cin = geom * rin * rin;
        const double cout = geom * rout * rout;

        sys.lower[i] = i > 0 ? -dt * implicit_weight * cin : 0.0;
        sys.upper[i] = i + 1 < n ? -dt * implicit_weight * cout : 0.0;
        // the outer face couples to a zero ghost, so it only adds to the diagonal
        sys.diag[i] = 1.0 + dt * implicit_weight * (cin + cout);

        if (scheme == DiffusionScheme::crank_nicolson) {
            const double left = i > 0 ? theta_star[i - 1] : theta_star[i];
            const double right = i + 1 < n ? theta_star[i + 1] : 0.0;
            const double lap = cin * (left - theta_star[i]) + cout * (right - theta_star[i]);
            sys.rhs[i] += 0.5 * dt * lap;
        }
    }
    return sys;
}

DiffusionResult solve_diffusion_checked(const ParityField& theta_star, const ParityField& a,
                                        const RadialGrid& grid, double dt, DiffusionScheme scheme,
                                        double kappa) {
    if (theta_star.parity != Parity::even || a.parity != Parity::even) {
        throw std::invalid_argument("solve_diffusion: theta and a must be even fields");
    }
    if (kappa == 0.0) return {theta_star, 0.0};
    const auto sys = assemble_diffusion_system(theta_star.values, a.values, grid, dt, scheme, kappa);
    if (!sys.diagonally_dominant()) {
        throw std::runtime_error("solve_diffusion: system lost diagonal dominance");
    }
    DiffusionResult out{{sys.solve(), Parity::even}, 0.0};
    out.residual = sys.relative_residual(out.theta.values);
    if (!(out.residual <= kSolveTolerance)) {
        throw std::runtime_error("solve_diffusion: residual " + std::to_string(out.residual) +
                                 " above tolerance");
    }
    return out;
}

ParityField solve_diffusion(const ParityField& theta_star, const ParityField& a, const RadialGrid& grid,
                            double dt, DiffusionScheme scheme, double kappa) {
    return solve_diffusion_checked(theta_star, a, grid, dt, scheme, kappa).theta;
}

namespace {

void axpy_stage(State& out, const State& base, const Tendency& tend, double dt) {
    const std::size_t n = base.size();
    for (std::size_t i = 0; i < n; ++i) {
        out.a[i] = base.a[i] + dt * tend.da_dt[i];
        out.u[i] = base.u[i] + dt * tend.du_dt[i];
        out.theta[i] = base.theta[i] + dt * tend.dtheta_dt_conv[i];
    }
}

// Runs both stages; stops early and returns the offending stage if one
// leaves the valid regime (the second member is then false).
std::pair<State, bool> rk2_stages(const State& state, const RadialGrid& grid, double dt) {
    State stage = state;
    axpy_stage(stage, state, convective_rhs(state, grid), dt);
    stage.t = state.t + dt;
    if (!validate(stage).ok) return {std::move(stage), false};

    const Tendency second = convective_rhs(stage, grid);
    State out = state;
    for (std::size_t i = 0; i < state.size(); ++i) {
        out.a[i] = 0.5 * state.a[i] + 0.5 * (stage.a[i] + dt * second.da_dt[i]);
        out.u[i] = 0.5 * state.u[i] + 0.5 * (stage.u[i] + dt * second.du_dt[i]);
        out.theta[i] = 0.5 * state.theta[i] + 0.5 * (stage.theta[i] + dt * second.dtheta_dt_conv[i]);
    }
    out.t = state.t + dt;
    return {std::move(out), true};
}

}  // namespace

State ssp_rk2_convective(const State& state, const RadialGrid& grid, double dt) {
    auto [out, ok] = rk2_stages(state, grid, dt);
    const auto rep = validate(out);
    if (!ok || !rep.ok) throw std::domain_error("ssp_rk2: stage left valid regime: " + rep.message);
    return std::move(out);
}

void apply_fourth_difference_filter(State& state, double coeff) {
    if (coeff == 0.0) return;
    auto filter = [coeff](std::vector<double>& v, Parity parity) {
        const auto g = with_ghosts(v, parity, OuterBc::background);
        for (std::size_t i = 0; i < v.size(); ++i) {
            const std::size_t j = i + kGhosts;
            const double d4 = g[j - 2] - 4.0 * g[j - 1] + 6.0 * g[j] - 4.0 * g[j + 1] + g[j + 2];
            v[i] -= coeff * d4;
        }
    };
    filter(state.a, Parity::even);
    filter(state.u, Parity::odd);
    filter(state.theta, Parity::even);
}

std::pair<State, StepReport> step(const State& state, const RadialGrid& grid, double dt,
                                  const StepOptions& options) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("step: dt must be positive");
    {
        const auto rep = validate(state);
        if (!rep.ok) throw std::domain_error("step: invalid input state: " + rep.message);
    }

    StepReport report;
    report.dt_used = dt;

    auto [next, stages_ok] = rk2_stages(state, grid, dt);
    if (!stages_ok) {
        report.validity = validate(next);
        return {std::move(next), std::move(report)};
    }

    apply_fourth_difference_filter(next, options.filter_coeff);

    report.validity = validate(next);
    if (!report.validity.ok) return {std::move(next), std::move(report)};

    if (state.params.kappa > 0.0) {
        auto solved = solve_diffusion_checked({next.theta, Parity::even}, {state.a, Parity::even}, grid, dt,
                                              options.scheme, state.params.kappa);
        next.theta = std::move(solved.theta.values);
        report.implicit_solve_residual = solved.residual;
    }

    report.validity = validate(next);
    const auto du = d_dr({next.u, Parity::odd}, grid);
    for (double g : du.values) report.max_abs_du_dr = std::max(report.max_abs_du_dr, std::abs(g));
    return {std::move(next), std::move(report)};
}

}  // namespace radflow
