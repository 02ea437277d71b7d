#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "radflow/grid.hpp"

namespace radflow {

/// Gas constants are normalised to R = c_V = 1; only the heat conductivity
/// is exposed. kappa = 0 gives the inviscid, non-conducting Euler system.
struct PhysParams {
    static constexpr double r_gas = 1.0;
    static constexpr double c_v = 1.0;
    double kappa = 1.0;
};

/**
 * Perturbation state at one time level.
 *
 * density = 1 + a, temperature = 1 + theta, velocity = u(r) * x/|x|.
 * All three vectors have one entry per grid cell.
 */
struct State {
    std::vector<double> a;
    std::vector<double> u;
    std::vector<double> theta;
    double t = 0.0;
    PhysParams params;

    std::size_t size() const { return a.size(); }

    /// Background state (a = u = theta = 0) sized for the grid.
    static State background(const RadialGrid& grid, PhysParams params = {});
};

enum class InitFamily { gaussian_bump, compact_bump, zero };

/// Radius of the compact bump support.
inline constexpr double kCompactBumpRadius = 2.0;

InitFamily parse_init_family(std::string_view name);
std::string_view to_string(InitFamily family);

/// Radius beyond which the initial profile of `family` is zero to double
/// precision relative to its peak (exact for the compact bump).
double support_radius(InitFamily family);

/**
 * Radially symmetric initial data.
 *
 * gaussian-bump: a = theta = eps*exp(-r^2), u = eps*r*exp(-r^2).
 * compact-bump:  b(r) = (1 - (r/R)^2)^3 on r < R, zero outside (C^2 at R);
 *                a = theta = eps*b, u = eps*r*b.
 * zero:          background.
 *
 * Throws std::invalid_argument unless 0 <= eps < 1.
 */
State make_initial_state(const RadialGrid& grid, InitFamily family, double eps,
                         PhysParams params = {});

struct ValidityReport {
    bool ok = true;
    double min_density = 1.0;      ///< min_i (1 + a_i)
    double min_temperature = 1.0;  ///< min_i (1 + theta_i)
    bool vacuum_breach = false;    ///< some 1 + a_i <= 0
    bool cold_breach = false;      ///< some 1 + theta_i <= 0
    bool non_finite = false;       ///< NaN or Inf anywhere
    std::string message;
};

/// Pure report; never throws.
ValidityReport validate(const State& state);

}  // namespace radflow
