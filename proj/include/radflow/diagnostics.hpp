#pragma once

#include <span>
#include <vector>

#include "radflow/grid.hpp"
#include "radflow/state.hpp"

namespace radflow {

/// Integrals over R^3 evaluated with the shell weights w_i.
struct ConservedQuantities {
    double mass = 0.0;             ///< integral of a
    double momentum_scalar = 0.0;  ///< integral of (1 + a) u; see below
    double energy = 0.0;           ///< integral of |u|^2/2 + a|u|^2/2 + a theta + theta
};

/// The vector momentum of a radial flow vanishes identically. momentum_scalar
/// integrates the radial component instead; it is a scheme diagnostic, not a
/// conserved quantity of the continuous problem.
ConservedQuantities conserved_quantities(const State& state, const RadialGrid& grid);

struct EntropyFunctionals {
    double total = 0.0;        ///< integral of (1 + a) ln((1 + theta)/(1 + a))
    double dissipation = 0.0;  ///< integral of |theta_r|^2 / (1 + theta)^2, always >= 0
};

EntropyFunctionals entropy_functionals(const State& state, const RadialGrid& grid);

/**
 * Integral of
 *   (1 + a) ln((1 + a)/(1 + theta)) + |u|^2/2 + a|u|^2/2 - a + a theta + theta.
 * Its time derivative is minus kappa times the entropy dissipation. The
 * integrand is quadratic to leading order: (a^2 + u^2 + theta^2)/2.
 */
double lyapunov_functional(const State& state, const RadialGrid& grid);

/// ln((1 + a)/(1 + theta)) - (a - theta - a^2/2 + theta^2/2).
/// Exactly antisymmetric under a <-> theta. Throws std::domain_error unless
/// 1 + a > 0 and 1 + theta > 0.
double taylor_remainder(double a, double theta);

/// max_i |du/dr|.
double shock_indicator(const State& state, const RadialGrid& grid);

/**
 * Running Sobolev-type energies built from radial derivatives d^j = (d/dr)^j:
 *
 *   E_k1(t) = sum_{j<=k} sup_{tau<=t} (|d^j a|^2 + |d^j u|^2 + |d^j theta|^2)
 *           + sum_{j<=k} int_0^t |d^{j+1} theta|^2
 *   E_k2(t) = sum_{j<=k-1} int_0^t (|d^{j+1} a|^2 + |d^{j+1} u|^2)
 *
 * with |f|^2 = sum_i w_i f_i^2. The sup is taken over the observed snapshots
 * and time integrals use the trapezoidal rule between consecutive snapshots,
 * so both accumulators are nondecreasing.
 */
class SobolevAccumulator {
public:
    /// Throws std::invalid_argument unless 0 <= max_k <= 6.
    explicit SobolevAccumulator(int max_k);

    /// Snapshots must arrive in nondecreasing time order.
    void observe(const State& state, const RadialGrid& grid);

    int max_k() const { return max_k_; }
    /// E_k1 for k = 0..max_k.
    std::vector<double> e_k1() const;
    /// E_k2 for k = 1..max_k (element 0 is E_12).
    std::vector<double> e_k2() const;

private:
    int max_k_;
    bool started_ = false;
    double last_t_ = 0.0;
    std::vector<double> sup_norm_;     // per j <= K
    std::vector<double> theta_grad_;   // last |d^{j+1} theta|^2
    std::vector<double> theta_int_;
    std::vector<double> au_grad_;      // last |d^{j+1} a|^2 + |d^{j+1} u|^2, j <= K-1
    std::vector<double> au_int_;
};

struct SobolevEnergies {
    std::vector<double> e_k1;  ///< k = 0..K
    std::vector<double> e_k2;  ///< k = 1..K
};

/// Feeds `history` (time-ordered snapshots) through a SobolevAccumulator.
SobolevEnergies sobolev_energies(std::span<const State> history, const RadialGrid& grid, int max_k);

/// Every scalar diagnostic at one time.
struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;
    double momentum_scalar = 0.0;
    double energy = 0.0;
    double entropy_total = 0.0;
    double entropy_dissipation = 0.0;
    double lyapunov = 0.0;
    double shock_indicator = 0.0;
    std::vector<double> e_k1;
    std::vector<double> e_k2;
};

/**
 * Owns the time-accumulated parts of the diagnostics for one run. Call
 * observe() on every accepted step (not only at output times) so sups and
 * time integrals are resolved at the step size.
 */
class DiagnosticsRecorder {
public:
    DiagnosticsRecorder(const RadialGrid& grid, int max_k);

    DiagnosticsRecord observe(const State& state);

    /// int_0^t kappa * entropy_dissipation, trapezoidal in time.
    double dissipation_integral() const { return dissipation_integral_; }
    /// L(t) - L(0) + dissipation_integral() at the last observation.
    double lyapunov_residual() const { return lyapunov_residual_; }
    const DiagnosticsRecord& initial() const { return initial_; }

private:
    const RadialGrid* grid_;
    SobolevAccumulator sobolev_;
    bool started_ = false;
    double last_t_ = 0.0;
    double last_weighted_dissipation_ = 0.0;
    double dissipation_integral_ = 0.0;
    double lyapunov_residual_ = 0.0;
    DiagnosticsRecord initial_;
};

}  // namespace radflow
