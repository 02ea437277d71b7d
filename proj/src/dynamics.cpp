#include "radflow/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "radflow/radial_ops.hpp"

namespace radflow {

namespace {

void require_valid(const State& state, const RadialGrid& grid, const char* op) {
    if (state.size() != grid.size() || state.u.size() != grid.size() ||
        state.theta.size() != grid.size()) {
        throw std::invalid_argument(std::string(op) + ": state does not match grid");
    }
    const auto rep = validate(state);
    if (!rep.ok) throw std::domain_error(std::string(op) + ": invalid state: " + rep.message);
}

void require_thermo(double a, double theta, const char* op) {
    if (!(1.0 + a > 0.0) || !(1.0 + theta > 0.0)) {
        throw std::domain_error(std::string(op) + ": requires 1 + a > 0 and 1 + theta > 0");
    }
}

}  // namespace

Tendency convective_rhs(const State& state, const RadialGrid& grid) {
    require_valid(state, grid, "convective_rhs");
    const std::size_t n = grid.size();

    ParityField mass_flux{std::vector<double>(n), Parity::odd};
    for (std::size_t i = 0; i < n; ++i) mass_flux.values[i] = (1.0 + state.a[i]) * state.u[i];

    const ParityField a{state.a, Parity::even};
    const ParityField u{state.u, Parity::odd};
    const ParityField th{state.theta, Parity::even};

    const auto div_mass = radial_div(mass_flux, grid, OuterBc::background);
    const auto div_u = radial_div(u, grid, OuterBc::background);
    // Pressure-gradient terms use the adjoint of the divergence so the linear
    // acoustic part is energy-neutral; advection uses central differences.
    const auto grad_a = radial_grad(a, grid, OuterBc::background);
    const auto grad_th = radial_grad(th, grid, OuterBc::background);
    const auto du = d_dr(u, grid, OuterBc::background);
    const auto dth = d_dr(th, grid, OuterBc::background);

    Tendency out;
    out.da_dt.resize(n);
    out.du_dt.resize(n);
    out.dtheta_dt_conv.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ui = state.u[i];
        const double rho = 1.0 + state.a[i];
        const double temp = 1.0 + state.theta[i];
        out.da_dt[i] = -div_mass[i];
        out.du_dt[i] = -(ui * du[i] + grad_th[i] + temp / rho * grad_a[i]);
        out.dtheta_dt_conv[i] = -(ui * dth[i] + temp * div_u[i]);
    }
    return out;
}

SymSystem assemble_sym_system(double a, const Vec3& u, double theta, const Vec3& grad_theta) {
    require_thermo(a, theta, "assemble_sym_system");
    const double rho = 1.0 + a;
    const double temp = 1.0 + theta;
    const double ratio = temp / rho;

    SymSystem sys;
    sys.a0[0][0] = ratio;
    for (int k = 1; k < 4; ++k) sys.a0[k][k] = rho;

    for (int j = 0; j < 3; ++j) {
        Mat4& m = sys.a[j];
        m[0][0] = ratio * u[j];
        m[0][j + 1] = temp;
        m[j + 1][0] = temp;
        for (int k = 1; k < 4; ++k) m[k][k] = rho * u[j];
    }
    for (int k = 0; k < 3; ++k) sys.f[k + 1] = rho * grad_theta[k];
    return sys;
}

double sound_speed(double theta) { return std::sqrt(2.0 * (1.0 + theta)); }

CharacteristicSpeeds characteristic_speeds(double a, double u, double theta) {
    require_thermo(a, theta, "characteristic_speeds");
    const double c = sound_speed(theta);
    return {u - c, u, u + c};
}

double cfl_dt(const State& state, const RadialGrid& grid, double cfl) {
    if (!(cfl > 0.0) || cfl > 1.0) throw std::invalid_argument("cfl_dt: cfl must lie in (0, 1]");
    if (!(grid.dr() > 0.0) || state.size() != grid.size()) {
        throw std::invalid_argument("cfl_dt: degenerate grid or grid/state mismatch");
    }
    double max_speed = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(1.0 + state.theta[i] > 0.0)) {
            throw std::domain_error("cfl_dt: non-positive temperature");
        }
        max_speed = std::max(max_speed, std::abs(state.u[i]) + sound_speed(state.theta[i]));
    }
    return cfl * grid.dr() / max_speed;
}

}  // namespace radflow
