#include "radflow/state.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace radflow {

State State::background(const RadialGrid& grid, PhysParams params) {
    State s;
    s.a.assign(grid.size(), 0.0);
    s.u.assign(grid.size(), 0.0);
    s.theta.assign(grid.size(), 0.0);
    s.params = params;
    return s;
}

InitFamily parse_init_family(std::string_view name) {
    if (name == "gaussian-bump") return InitFamily::gaussian_bump;
    if (name == "compact-bump") return InitFamily::compact_bump;
    if (name == "zero") return InitFamily::zero;
    throw std::invalid_argument("unknown init family '" + std::string(name) + "'");
}

std::string_view to_string(InitFamily family) {
    switch (family) {
        case InitFamily::gaussian_bump: return "gaussian-bump";
        case InitFamily::compact_bump: return "compact-bump";
        case InitFamily::zero: return "zero";
    }
    return "?";
}

double support_radius(InitFamily family) {
    switch (family) {
        // exp(-r^2) < 2^-52 beyond r = sqrt(52 ln 2) ~ 6.0
        case InitFamily::gaussian_bump:
            return std::sqrt(-std::log(std::numeric_limits<double>::epsilon()));
        case InitFamily::compact_bump: return kCompactBumpRadius;
        case InitFamily::zero: return 0.0;
    }
    return 0.0;
}

State make_initial_state(const RadialGrid& grid, InitFamily family, double eps, PhysParams params) {
    if (!(eps >= 0.0) || eps >= 1.0) {
        throw std::invalid_argument("initial state: amplitude eps must satisfy 0 <= eps < 1");
    }
    if (params.kappa < 0.0) {
        throw std::invalid_argument("initial state: kappa must be non-negative");
    }
    State s = State::background(grid, params);
    if (family == InitFamily::zero) return s;

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid.r(i);
        double profile = 0.0;
        if (family == InitFamily::gaussian_bump) {
            profile = std::exp(-r * r);
        } else {
            const double s2 = (r / kCompactBumpRadius) * (r / kCompactBumpRadius);
            if (s2 < 1.0) profile = (1.0 - s2) * (1.0 - s2) * (1.0 - s2);
        }
        s.a[i] = eps * profile;
        s.theta[i] = eps * profile;
        s.u[i] = eps * r * profile;
    }
    return s;
}

ValidityReport validate(const State& state) {
    ValidityReport rep;
    std::ostringstream msg;
    auto scan = [&](const std::vector<double>& v, const char* name, double* min_shifted, bool* breach) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!std::isfinite(v[i])) {
                if (!rep.non_finite) msg << "non-finite " << name << " at cell " << i << "; ";
                rep.non_finite = true;
                continue;
            }
            if (min_shifted == nullptr) continue;
            const double shifted = 1.0 + v[i];
            if (shifted < *min_shifted) *min_shifted = shifted;
            if (shifted <= 0.0 && !*breach) {
                *breach = true;
                msg << name << " breach at cell " << i << " (1+" << name << " = " << shifted << "); ";
            }
        }
    };
    scan(state.a, "a", &rep.min_density, &rep.vacuum_breach);
    scan(state.u, "u", nullptr, nullptr);
    scan(state.theta, "theta", &rep.min_temperature, &rep.cold_breach);
    if (!std::isfinite(state.t)) {
        rep.non_finite = true;
        msg << "non-finite time; ";
    }
    rep.ok = !(rep.non_finite || rep.vacuum_breach || rep.cold_breach);
    rep.message = msg.str();
    return rep;
}

}  // namespace radflow
