#include "radflow/diagnostics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "radflow/radial_ops.hpp"

namespace radflow {

namespace {

double norm2(const RadialGrid& grid, std::span<const double> f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) sum += grid.weight(i) * f[i] * f[i];
    return sum;
}

void require_matching(const State& state, const RadialGrid& grid) {
    if (state.size() != grid.size() || state.u.size() != grid.size() ||
        state.theta.size() != grid.size()) {
        throw std::invalid_argument("diagnostics: state does not match grid");
    }
}

}  // namespace

ConservedQuantities conserved_quantities(const State& state, const RadialGrid& grid) {
    require_matching(state, grid);
    ConservedQuantities q;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = grid.weight(i);
        const double a = state.a[i];
        const double u = state.u[i];
        const double th = state.theta[i];
        q.mass += w * a;
        q.momentum_scalar += w * (1.0 + a) * u;
        q.energy += w * (0.5 * u * u + 0.5 * a * u * u + a * th + th);
    }
    return q;
}

EntropyFunctionals entropy_functionals(const State& state, const RadialGrid& grid) {
    require_matching(state, grid);
    const auto dth = d_dr({state.theta, Parity::even}, grid);
    EntropyFunctionals e;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = grid.weight(i);
        const double a = state.a[i];
        const double th = state.theta[i];
        e.total += w * (1.0 + a) * (std::log1p(th) - std::log1p(a));
        const double g = dth[i] / (1.0 + th);
        e.dissipation += w * g * g;
    }
    return e;
}

double lyapunov_functional(const State& state, const RadialGrid& grid) {
    require_matching(state, grid);
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a = state.a[i];
        const double u = state.u[i];
        const double th = state.theta[i];
        const double log_ratio = std::log1p(a) - std::log1p(th);
        const double integrand =
            (1.0 + a) * log_ratio + 0.5 * u * u + 0.5 * a * u * u - a + a * th + th;
        sum += grid.weight(i) * integrand;
    }
    return sum;
}

double taylor_remainder(double a, double theta) {
    if (!(1.0 + a > 0.0) || !(1.0 + theta > 0.0)) {
        throw std::domain_error("taylor_remainder: requires 1 + a > 0 and 1 + theta > 0");
    }
    // Both pieces flip sign exactly under a <-> theta.
    const double log_ratio = std::log1p(a) - std::log1p(theta);
    const double quadratic = (a - theta) - 0.5 * (a * a - theta * theta);
    return log_ratio - quadratic;
}

double shock_indicator(const State& state, const RadialGrid& grid) {
    require_matching(state, grid);
    const auto du = d_dr({state.u, Parity::odd}, grid);
    double peak = 0.0;
    for (double g : du.values) peak = std::max(peak, std::abs(g));
    return peak;
}

SobolevAccumulator::SobolevAccumulator(int max_k) : max_k_(max_k) {
    if (max_k < 0 || max_k > kMaxDerivativeOrder) {
        throw std::invalid_argument("sobolev energies: max order " + std::to_string(max_k) +
                                    " outside [0, " + std::to_string(kMaxDerivativeOrder) + "]");
    }
    const auto k = static_cast<std::size_t>(max_k);
    sup_norm_.assign(k + 1, 0.0);
    theta_grad_.assign(k + 1, 0.0);
    theta_int_.assign(k + 1, 0.0);
    au_grad_.assign(k, 0.0);
    au_int_.assign(k, 0.0);
}

void SobolevAccumulator::observe(const State& state, const RadialGrid& grid) {
    require_matching(state, grid);
    if (started_ && state.t < last_t_) {
        throw std::invalid_argument("sobolev energies: snapshots out of time order");
    }
    const auto k = static_cast<std::size_t>(max_k_);

    ParityField da{state.a, Parity::even};
    ParityField du{state.u, Parity::odd};
    ParityField dth{state.theta, Parity::even};
    std::vector<double> norm(k + 1), theta_grad(k + 1), au_grad(k);
    for (std::size_t j = 0; j <= k; ++j) {
        norm[j] = norm2(grid, da.values) + norm2(grid, du.values) + norm2(grid, dth.values);
        dth = d_dr(dth, grid);
        theta_grad[j] = norm2(grid, dth.values);
        if (j < k) {
            da = d_dr(da, grid);
            du = d_dr(du, grid);
            au_grad[j] = norm2(grid, da.values) + norm2(grid, du.values);
        }
    }

    const double dt = started_ ? state.t - last_t_ : 0.0;
    for (std::size_t j = 0; j <= k; ++j) {
        sup_norm_[j] = started_ ? std::max(sup_norm_[j], norm[j]) : norm[j];
        theta_int_[j] += 0.5 * dt * (theta_grad_[j] + theta_grad[j]);
        if (j < k) au_int_[j] += 0.5 * dt * (au_grad_[j] + au_grad[j]);
    }
    theta_grad_ = std::move(theta_grad);
    au_grad_ = std::move(au_grad);
    last_t_ = state.t;
    started_ = true;
}

std::vector<double> SobolevAccumulator::e_k1() const {
    std::vector<double> out(sup_norm_.size());
    double running = 0.0;
    for (std::size_t j = 0; j < out.size(); ++j) {
        running += sup_norm_[j] + theta_int_[j];
        out[j] = running;
    }
    return out;
}

std::vector<double> SobolevAccumulator::e_k2() const {
    std::vector<double> out(au_int_.size());
    double running = 0.0;
    for (std::size_t j = 0; j < out.size(); ++j) {
        running += au_int_[j];
        out[j] = running;
    }
    return out;
}

SobolevEnergies sobolev_energies(std::span<const State> history, const RadialGrid& grid, int max_k) {
    SobolevAccumulator acc(max_k);
    for (const auto& s : history) acc.observe(s, grid);
    return {acc.e_k1(), acc.e_k2()};
}

DiagnosticsRecorder::DiagnosticsRecorder(const RadialGrid& grid, int max_k)
    : grid_(&grid), sobolev_(max_k) {}

DiagnosticsRecord DiagnosticsRecorder::observe(const State& state) {
    const RadialGrid& grid = *grid_;
    DiagnosticsRecord rec;
    rec.t = state.t;
    const auto q = conserved_quantities(state, grid);
    rec.mass = q.mass;
    rec.momentum_scalar = q.momentum_scalar;
    rec.energy = q.energy;
    const auto e = entropy_functionals(state, grid);
    rec.entropy_total = e.total;
    rec.entropy_dissipation = e.dissipation;
    rec.lyapunov = lyapunov_functional(state, grid);
    rec.shock_indicator = shock_indicator(state, grid);

    sobolev_.observe(state, grid);
    rec.e_k1 = sobolev_.e_k1();
    rec.e_k2 = sobolev_.e_k2();

    const double weighted = state.params.kappa * e.dissipation;
    if (started_) {
        dissipation_integral_ += 0.5 * (state.t - last_t_) * (last_weighted_dissipation_ + weighted);
    } else {
        initial_ = rec;
        started_ = true;
    }
    last_weighted_dissipation_ = weighted;
    last_t_ = state.t;
    lyapunov_residual_ = rec.lyapunov - initial_.lyapunov + dissipation_integral_;
    return rec;
}

}  // namespace radflow
