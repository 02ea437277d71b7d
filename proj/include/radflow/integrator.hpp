#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "radflow/grid.hpp"
#include "radflow/radial_ops.hpp"
#include "radflow/state.hpp"

namespace radflow {

enum class DiffusionScheme { backward_euler, crank_nicolson };

DiffusionScheme parse_diffusion_scheme(std::string_view name);
std::string_view to_string(DiffusionScheme scheme);

/// Relative residual accepted from the implicit heat solve.
inline constexpr double kSolveTolerance = 1e-12;

/**
 * Tridiagonal system, one row per cell: lower[i] multiplies x[i-1],
 * upper[i] multiplies x[i+1]. lower[0] and upper[n-1] are ignored.
 */
struct TridiagonalSystem {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;
    std::vector<double> rhs;

    std::size_t size() const { return diag.size(); }

    /// True if |diag_i| >= |lower_i| + |upper_i| on every row.
    bool diagonally_dominant() const;

    /// Thomas elimination. No pivoting; callers guarantee diagonal dominance.
    std::vector<double> solve() const;

    /// max_i |(A x - rhs)_i| / max(max_i |rhs_i|, tiny).
    double relative_residual(std::span<const double> x) const;
};

/**
 * Assembles (I - dt*c*kappa/(1+a) L) theta_new = rhs where L is the
 * conservative radial Laplacian with zero flux at the origin and a
 * background (theta = 0) ghost beyond r_max. c = 1 for backward Euler;
 * c = 1/2 for Crank-Nicolson, whose rhs also carries the explicit half step.
 * The coefficient 1/(1+a) is taken from `a` as given (frozen).
 */
TridiagonalSystem assemble_diffusion_system(std::span<const double> theta_star,
                                            std::span<const double> a, const RadialGrid& grid,
                                            double dt, DiffusionScheme scheme, double kappa = 1.0);

struct DiffusionResult {
    ParityField theta;
    double residual = 0.0;
};

/// Implicit heat-conduction update of theta. Throws std::domain_error if
/// 1 + a <= 0 somewhere and std::runtime_error if the solve residual
/// exceeds kSolveTolerance.
DiffusionResult solve_diffusion_checked(const ParityField& theta_star, const ParityField& a,
                                        const RadialGrid& grid, double dt, DiffusionScheme scheme,
                                        double kappa = 1.0);

ParityField solve_diffusion(const ParityField& theta_star, const ParityField& a, const RadialGrid& grid,
                            double dt, DiffusionScheme scheme = DiffusionScheme::backward_euler,
                            double kappa = 1.0);

/// Two-stage strong-stability-preserving Runge-Kutta step on the convective
/// system only. dt may be negative (used for reversibility checks).
/// Throws std::domain_error if either stage leaves the valid regime.
State ssp_rk2_convective(const State& state, const RadialGrid& grid, double dt);

/// u -= coeff * (fourth difference of u) on every field, with parity and
/// background ghosts. Not part of the default scheme (coeff = 0).
void apply_fourth_difference_filter(State& state, double coeff);

struct StepOptions {
    DiffusionScheme scheme = DiffusionScheme::backward_euler;
    double filter_coeff = 0.0;
};

struct StepReport {
    double dt_used = 0.0;
    ValidityReport validity;
    double max_abs_du_dr = 0.0;
    double implicit_solve_residual = 0.0;
};

/**
 * One IMEX step: SSP-RK2 on the convective right-hand side, optional filter,
 * then an implicit heat-conduction solve for theta with 1/(1+a) frozen at
 * the old level.
 *
 * A positivity breach is reported through StepReport::validity (the returned
 * state is the offending one) rather than thrown. Throws std::domain_error
 * for an invalid input state, std::invalid_argument for dt <= 0, and
 * std::runtime_error if the implicit solve fails.
 */
std::pair<State, StepReport> step(const State& state, const RadialGrid& grid, double dt,
                                  const StepOptions& options = {});

}  // namespace radflow
