#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace radflow {

/// Minimum number of cells; the widest stencil (fourth-difference filter)
/// spans five cells and needs room on both sides of the origin ghosts.
inline constexpr std::size_t kMinCells = 8;

/**
 * Uniform cell-centred radial mesh on [0, r_max].
 *
 * Cell i occupies [i*dr, (i+1)*dr] with centre r_i = (i + 1/2)*dr, so there is
 * never a node at the origin. Each cell carries the exact volume of its
 * spherical shell, w_i = 4*pi/3 * ((i+1)^3 - i^3) * dr^3, which makes
 * sum_i w_i f_i a midpoint-type quadrature of the integral of f over the ball.
 */
class RadialGrid {
public:
    /// Throws std::invalid_argument for r_max <= 0 or n_cells < kMinCells.
    static RadialGrid build(double r_max, std::size_t n_cells);

    double r_max() const { return r_max_; }
    std::size_t size() const { return radii_.size(); }
    double dr() const { return dr_; }

    double r(std::size_t i) const { return radii_[i]; }
    /// Radius of the face between cell i-1 and cell i (face 0 is the origin).
    double face(std::size_t i) const { return static_cast<double>(i) * dr_; }
    double weight(std::size_t i) const { return weights_[i]; }

    std::span<const double> radii() const { return radii_; }
    std::span<const double> weights() const { return weights_; }

    /// (4*pi/3) * r_max^3.
    double ball_volume() const;

private:
    RadialGrid(double r_max, std::size_t n_cells);

    double r_max_;
    double dr_;
    std::vector<double> radii_;
    std::vector<double> weights_;
};

/// sum_i w_i f_i, the discrete counterpart of the integral over R^3.
double integrate(const RadialGrid& grid, std::span<const double> f);

}  // namespace radflow
