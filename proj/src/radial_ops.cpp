#include "radflow/radial_ops.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace radflow {

namespace {

void require_same_size(const ParityField& f, const RadialGrid& grid, const char* op) {
    if (f.size() != grid.size()) {
        std::ostringstream msg;
        msg << op << ": field has " << f.size() << " cells, grid has " << grid.size();
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

ParityField sample(const RadialGrid& grid, const std::function<double(double)>& fn, Parity parity) {
    ParityField out{std::vector<double>(grid.size()), parity};
    const double sign = parity == Parity::even ? 1.0 : -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid.r(i);
        const double fp = fn(r);
        const double fm = fn(-r);
        const double scale = std::max({1.0, std::abs(fp), std::abs(fm)});
        if (std::abs(fm - sign * fp) > 1e-12 * scale) {
            std::ostringstream msg;
            msg << "sample: function is not " << (parity == Parity::even ? "even" : "odd")
                << " (f(" << r << ") = " << fp << ", f(" << -r << ") = " << fm << ")";
            throw std::invalid_argument(msg.str());
        }
        out.values[i] = fp;
    }
    return out;
}

std::vector<double> with_ghosts(std::span<const double> values, Parity parity, OuterBc bc) {
    const std::size_t n = values.size();
    if (n < 3) throw std::invalid_argument("with_ghosts: need at least 3 cells");
    const double sign = parity == Parity::even ? 1.0 : -1.0;
    std::vector<double> g(n + 2 * kGhosts);
    for (std::size_t i = 0; i < n; ++i) g[i + kGhosts] = values[i];
    // r_{-1-j} = -r_j
    g[1] = sign * values[0];
    g[0] = sign * values[1];
    const std::size_t last = n + kGhosts - 1;
    if (bc == OuterBc::background) {
        g[last + 1] = 0.0;
        g[last + 2] = 0.0;
    } else {
        g[last + 1] = 3.0 * g[last] - 3.0 * g[last - 1] + g[last - 2];
        g[last + 2] = 3.0 * g[last + 1] - 3.0 * g[last] + g[last - 1];
    }
    return g;
}

ParityField d_dr(const ParityField& f, const RadialGrid& grid, OuterBc bc) {
    require_same_size(f, grid, "d_dr");
    const auto g = with_ghosts(f.values, f.parity, bc);
    const double inv2dr = 0.5 / grid.dr();
    ParityField out{std::vector<double>(f.size()), flip(f.parity)};
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::size_t j = i + kGhosts;
        out.values[i] = (g[j + 1] - g[j - 1]) * inv2dr;
    }
    return out;
}

ParityField radial_div(const ParityField& v, const RadialGrid& grid, OuterBc bc) {
    require_same_size(v, grid, "radial_div");
    if (v.parity != Parity::odd) {
        throw std::invalid_argument("radial_div: radial vector component must be odd");
    }
    const auto g = with_ghosts(v.values, v.parity, bc);
    const double four_pi = 4.0 * std::numbers::pi;
    ParityField out{std::vector<double>(v.size()), Parity::even};
    double flux_in = 0.0;  // origin face
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::size_t j = i + kGhosts;
        const double rf = grid.face(i + 1);
        const double flux_out = rf * rf * 0.5 * (g[j] + g[j + 1]);
        out.values[i] = four_pi * (flux_out - flux_in) / grid.weight(i);
        flux_in = flux_out;
    }
    return out;
}

ParityField radial_grad(const ParityField& f, const RadialGrid& grid, OuterBc bc) {
    require_same_size(f, grid, "radial_grad");
    if (f.parity != Parity::even) {
        throw std::invalid_argument("radial_grad: field must be even");
    }
    const auto g = with_ghosts(f.values, f.parity, bc);
    const double two_pi = 2.0 * std::numbers::pi;
    ParityField out{std::vector<double>(f.size()), Parity::odd};
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::size_t j = i + kGhosts;
        const double rin = grid.face(i);
        const double rout = grid.face(i + 1);
        out.values[i] =
            two_pi * (rout * rout * (g[j + 1] - g[j]) + rin * rin * (g[j] - g[j - 1])) / grid.weight(i);
    }
    return out;
}

ParityField radial_laplacian(const ParityField& f, const RadialGrid& grid, OuterBc bc) {
    require_same_size(f, grid, "radial_laplacian");
    if (f.parity != Parity::even) {
        throw std::invalid_argument("radial_laplacian: field must be even");
    }
    const auto g = with_ghosts(f.values, f.parity, bc);
    const double scale = 4.0 * std::numbers::pi / grid.dr();
    ParityField out{std::vector<double>(f.size()), Parity::even};
    double flux_in = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::size_t j = i + kGhosts;
        const double rf = grid.face(i + 1);
        const double flux_out = rf * rf * (g[j + 1] - g[j]);
        out.values[i] = scale * (flux_out - flux_in) / grid.weight(i);
        flux_in = flux_out;
    }
    return out;
}

ParityField d_dr_k(const ParityField& f, const RadialGrid& grid, int k, OuterBc bc) {
    if (k < 0 || k > kMaxDerivativeOrder) {
        std::ostringstream msg;
        msg << "d_dr_k: order " << k << " outside [0, " << kMaxDerivativeOrder << "]";
        throw std::invalid_argument(msg.str());
    }
    require_same_size(f, grid, "d_dr_k");
    ParityField out = f;
    for (int j = 0; j < k; ++j) out = d_dr(out, grid, bc);
    return out;
}

}  // namespace radflow
