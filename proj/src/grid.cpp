#include "radflow/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace radflow {

RadialGrid::RadialGrid(double r_max, std::size_t n_cells)
    : r_max_(r_max), dr_(r_max / static_cast<double>(n_cells)), radii_(n_cells), weights_(n_cells) {
    const double shell = 4.0 * std::numbers::pi / 3.0 * dr_ * dr_ * dr_;
    for (std::size_t i = 0; i < n_cells; ++i) {
        const double x = static_cast<double>(i);
        radii_[i] = (x + 0.5) * dr_;
        // (i+1)^3 - i^3, exact in integers
        weights_[i] = shell * (3.0 * x * x + 3.0 * x + 1.0);
    }
}

RadialGrid RadialGrid::build(double r_max, std::size_t n_cells) {
    if (!(r_max > 0.0) || !std::isfinite(r_max)) {
        throw std::invalid_argument("radial grid: r_max must be positive and finite");
    }
    if (n_cells < kMinCells) {
        std::ostringstream msg;
        msg << "radial grid: too few cells (" << n_cells << " < " << kMinCells << ")";
        throw std::invalid_argument(msg.str());
    }
    return RadialGrid(r_max, n_cells);
}

double RadialGrid::ball_volume() const {
    return 4.0 * std::numbers::pi / 3.0 * r_max_ * r_max_ * r_max_;
}

double integrate(const RadialGrid& grid, std::span<const double> f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) sum += grid.weight(i) * f[i];
    return sum;
}

}  // namespace radflow
