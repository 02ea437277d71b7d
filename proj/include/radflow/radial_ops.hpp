#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "radflow/grid.hpp"

namespace radflow {

/// Symmetry of a radial profile under r -> -r. Scalars (a, theta) are even,
/// the radial velocity component is odd.
enum class Parity { even, odd };

constexpr Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

/// How the cells beyond r_max are filled.
///   extrapolate: quadratic extrapolation, which turns the central stencil at
///                the last cell into the one-sided second-order formula.
///   background:  ghost values are zero (the background state).
enum class OuterBc { extrapolate, background };

struct ParityField {
    std::vector<double> values;
    Parity parity = Parity::even;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

/// Samples `fn` at the cell centres. Throws std::invalid_argument when `fn`
/// does not have the declared parity (checked at -r_i to 1e-12 relative).
ParityField sample(const RadialGrid& grid, const std::function<double(double)>& fn, Parity parity);

/// Copies `values` into a buffer with kGhosts cells on both sides. Origin
/// ghosts are parity reflections; outer ghosts follow `bc`.
inline constexpr std::size_t kGhosts = 2;
std::vector<double> with_ghosts(std::span<const double> values, Parity parity, OuterBc bc);

/// Second-order central difference; output parity is flipped.
ParityField d_dr(const ParityField& f, const RadialGrid& grid, OuterBc bc = OuterBc::extrapolate);

/**
 * Divergence of the vector field g(r)*x/|x| in conservative form,
 *   div_i = 4*pi * (F_{i+1/2} - F_{i-1/2}) / w_i,  F_{i+1/2} = r_{i+1/2}^2 (g_i + g_{i+1})/2.
 * The flux through the origin face vanishes identically, so
 * sum_i w_i div_i = 4*pi * F_{N-1/2} exactly. Requires odd `g`.
 */
ParityField radial_div(const ParityField& g, const RadialGrid& grid, OuterBc bc = OuterBc::extrapolate);

/**
 * Gradient of an even field defined as the negative adjoint of radial_div in
 * the shell-weighted inner product:
 *   sum_i w_i g_i grad_i(f) = -sum_i w_i f_i div_i(g)   (same OuterBc on both).
 *   grad_i = 2*pi/w_i * (r_{i+1/2}^2 (f_{i+1} - f_i) + r_{i-1/2}^2 (f_i - f_{i-1})).
 * Second order away from the origin; the relative error is dr^2/(6 r^2), so
 * the first few cells are only first order. Pairing it with radial_div keeps
 * the linear acoustic operator skew-adjoint. Output is odd.
 */
ParityField radial_grad(const ParityField& f, const RadialGrid& grid, OuterBc bc = OuterBc::extrapolate);

/**
 * (1/r^2) d/dr (r^2 df/dr) as a flux difference of r_{i+1/2}^2 (f_{i+1} - f_i)/dr
 * over the shell volumes. Exact for quadratics; requires even `f`.
 */
ParityField radial_laplacian(const ParityField& f, const RadialGrid& grid,
                             OuterBc bc = OuterBc::extrapolate);

inline constexpr int kMaxDerivativeOrder = 6;

/// k-fold d_dr. Throws std::invalid_argument unless 0 <= k <= 6.
ParityField d_dr_k(const ParityField& f, const RadialGrid& grid, int k,
                   OuterBc bc = OuterBc::extrapolate);

}  // namespace radflow
