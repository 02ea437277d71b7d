#pragma once

#include <array>
#include <vector>

#include "radflow/grid.hpp"
#include "radflow/state.hpp"

namespace radflow {

/// Convective (ideal-gas) tendencies. The heat-conduction term
/// kappa * Laplacian(theta) / (1 + a) is not part of it; the integrator
/// treats that term implicitly.
struct Tendency {
    std::vector<double> da_dt;
    std::vector<double> du_dt;
    std::vector<double> dtheta_dt_conv;
};

/**
 * Right-hand side of the perturbation system without heat conduction:
 *
 *   a_t     = -div((1 + a) u)                                   (flux form)
 *   u_t     = -(u u_r + theta_r + (1 + theta)/(1 + a) a_r)
 *   theta_t = -(u theta_r + (1 + theta) div u)
 *
 * The mass equation is the conservative rewrite of -(u a_r + (1 + a) div u).
 * Outer ghosts hold the background state. Throws std::domain_error if the
 * state has 1 + a <= 0, 1 + theta <= 0, or non-finite entries.
 */
Tendency convective_rhs(const State& state, const RadialGrid& grid);

using Mat4 = std::array<std::array<double, 4>, 4>;
using Vec4 = std::array<double, 4>;
using Vec3 = std::array<double, 3>;

/// Coefficients of A0 U_t + sum_j A_j d_j U + F = 0 for U = (a, u_1, u_2, u_3).
struct SymSystem {
    Mat4 a0{};
    std::array<Mat4, 3> a{};
    Vec4 f{};
};

/// Evaluates the symmetrizer A0, the flux Jacobians A_j and the source F at
/// one point. F = (0, (1 + a) grad theta); `grad_theta` defaults to zero.
/// Throws std::domain_error unless 1 + a > 0 and 1 + theta > 0.
SymSystem assemble_sym_system(double a, const Vec3& u, double theta, const Vec3& grad_theta = {});

struct CharacteristicSpeeds {
    double minus;
    double zero;
    double plus;
};

/// Closed-form eigenvalues u -/+ sqrt(2 (1 + theta)) and u of the radial
/// quasilinear Jacobian of (a, u, theta). The effective adiabatic index is 2.
CharacteristicSpeeds characteristic_speeds(double a, double u, double theta);

/// Sound speed sqrt(2 (1 + theta)).
double sound_speed(double theta);

/// cfl * dr / max_i(|u_i| + sqrt(2 (1 + theta_i))). Throws std::invalid_argument
/// unless 0 < cfl <= 1 and the grid matches the state.
double cfl_dt(const State& state, const RadialGrid& grid, double cfl);

}  // namespace radflow
