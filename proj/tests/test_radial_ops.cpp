#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "radflow/radial_ops.hpp"

using namespace radflow;

namespace {

using Op = std::function<ParityField(const ParityField&, const RadialGrid&)>;

// sup-norm error of op(f) against `exact` over cells with r <= r_cut
double sup_error(std::size_t n, double r_max, double r_cut, const std::function<double(double)>& f, Parity p,
                 const Op& op, const std::function<double(double)>& exact) {
    const auto g = RadialGrid::build(r_max, n);
    const auto out = op(sample(g, f, p), g);
    double err = 0.0;
    for (std::size_t i = 0; i < g.size() && g.r(i) <= r_cut; ++i) {
        err = std::max(err, std::abs(out[i] - exact(g.r(i))));
    }
    return err;
}

double refinement_ratio(double r_max, double r_cut, const std::function<double(double)>& f, Parity p,
                        const Op& op, const std::function<double(double)>& exact) {
    const double coarse = sup_error(200, r_max, r_cut, f, p, op, exact);
    const double fine = sup_error(400, r_max, r_cut, f, p, op, exact);
    return coarse / fine;
}

const Op kDdr = [](const ParityField& f, const RadialGrid& g) { return d_dr(f, g); };
const Op kDiv = [](const ParityField& f, const RadialGrid& g) { return radial_div(f, g); };
const Op kLap = [](const ParityField& f, const RadialGrid& g) { return radial_laplacian(f, g); };

}  // namespace

TEST_CASE("sample enforces parity") {
    const auto g = RadialGrid::build(10.0, 100);
    CHECK_THROWS_AS(sample(g, [](double r) { return r * r * r; }, Parity::even), std::invalid_argument);
    CHECK_THROWS_AS(sample(g, [](double r) { return std::cos(r); }, Parity::odd), std::invalid_argument);
    CHECK_NOTHROW(sample(g, [](double r) { return r * r * r; }, Parity::odd));
}

TEST_CASE("ghost cells") {
    const std::vector<double> v{1, 2, 3, 4, 5, 6, 7, 8};
    const auto even = with_ghosts(v, Parity::even, OuterBc::background);
    CHECK(even[0] == 2.0);
    CHECK(even[1] == 1.0);
    CHECK(even[10] == 0.0);
    CHECK(even[11] == 0.0);
    const auto odd = with_ghosts(v, Parity::odd, OuterBc::extrapolate);
    CHECK(odd[0] == -2.0);
    CHECK(odd[1] == -1.0);
    // a linear sequence continues linearly
    CHECK(odd[10] == doctest::Approx(9.0));
    CHECK(odd[11] == doctest::Approx(10.0));
}

TEST_CASE("d_dr") {
    const auto g = RadialGrid::build(10.0, 100);
    SUBCASE("quadratic is exact") {
        const auto out = d_dr(sample(g, [](double r) { return r * r; }, Parity::even), g);
        CHECK(out.parity == Parity::odd);
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(out[i] == doctest::Approx(2.0 * g.r(i)).epsilon(1e-12));
    }
    SUBCASE("constant") {
        const auto out = d_dr(sample(g, [](double) { return 3.7; }, Parity::even), g);
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(out[i]) <= 1e-12);
    }
    SUBCASE("sin -> cos at second order") {
        auto s = [](double r) { return std::sin(r); };
        auto c = [](double r) { return std::cos(r); };
        // one-sided edge formula: error dr^2/3 |f'''|
        CHECK(sup_error(400, 10.0, 10.0, s, Parity::odd, kDdr, c) <= 0.025 * 0.025 / 3.0 * 1.01);
        CHECK(refinement_ratio(10.0, 10.0, s, Parity::odd, kDdr, c) >= 3.5);
    }
}

TEST_CASE("radial_div") {
    const auto g = RadialGrid::build(10.0, 100);
    SUBCASE("u = r gives 3 everywhere") {
        const auto out = radial_div(sample(g, [](double r) { return r; }, Parity::odd), g);
        CHECK(out.parity == Parity::even);
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(out[i] == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("zero") {
        const auto out = radial_div(sample(g, [](double) { return 0.0; }, Parity::odd), g);
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(out[i] == 0.0);
    }
    SUBCASE("r exp(-r^2) at second order") {
        auto f = [](double r) { return r * std::exp(-r * r); };
        auto exact = [](double r) { return (3.0 - 2.0 * r * r) * std::exp(-r * r); };
        CHECK(sup_error(400, 10.0, 10.0, f, Parity::odd, kDiv, exact) <= 5.0 * 0.025 * 0.025);
        CHECK(refinement_ratio(10.0, 10.0, f, Parity::odd, kDiv, exact) >= 3.5);
    }
    SUBCASE("even input rejected") {
        CHECK_THROWS_AS(radial_div(sample(g, [](double r) { return r * r; }, Parity::even), g),
                        std::invalid_argument);
    }
    SUBCASE("telescoping flux sum") {
        const auto u = sample(g, [](double r) { return r * std::exp(-0.1 * r * r); }, Parity::odd);
        const auto div = radial_div(u, g, OuterBc::background);
        double total = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) total += g.weight(i) * div[i];
        const double rf = g.r_max();
        const double flux = 4.0 * std::numbers::pi * rf * rf * 0.5 * u[g.size() - 1];
        CHECK(total == doctest::Approx(flux).epsilon(1e-12));
    }
}

TEST_CASE("radial_laplacian") {
    const auto g = RadialGrid::build(10.0, 100);
    SUBCASE("r^2 gives 6") {
        const auto out = radial_laplacian(sample(g, [](double r) { return r * r; }, Parity::even), g);
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(out[i] == doctest::Approx(6.0).epsilon(1e-10));
    }
    SUBCASE("constant") {
        const auto out = radial_laplacian(sample(g, [](double) { return -2.0; }, Parity::even), g);
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(out[i]) <= 1e-12);
    }
    SUBCASE("gaussian at second order") {
        auto f = [](double r) { return std::exp(-r * r); };
        auto exact = [](double r) { return (4.0 * r * r - 6.0) * std::exp(-r * r); };
        CHECK(sup_error(400, 10.0, 10.0, f, Parity::even, kLap, exact) <= 8.0 * 0.025 * 0.025);
        CHECK(refinement_ratio(10.0, 10.0, f, Parity::even, kLap, exact) >= 3.5);
    }
    SUBCASE("conservative flux sum") {
        const auto f = sample(g, [](double r) { return std::exp(-r * r); }, Parity::even);
        const auto lap = radial_laplacian(f, g, OuterBc::background);
        double total = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) total += g.weight(i) * lap[i];
        const std::size_t last = g.size() - 1;
        const double flux = 4.0 * std::numbers::pi * g.r_max() * g.r_max() * (0.0 - f[last]) / g.dr();
        CHECK(total == doctest::Approx(flux).epsilon(1e-10));
    }
    SUBCASE("odd input rejected") {
        CHECK_THROWS_AS(radial_laplacian(sample(g, [](double r) { return r; }, Parity::odd), g),
                        std::invalid_argument);
    }
}

TEST_CASE("radial_grad is the weighted adjoint of radial_div") {
    const auto g = RadialGrid::build(5.0, 60);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        ParityField f{std::vector<double>(g.size()), Parity::even};
        ParityField u{std::vector<double>(g.size()), Parity::odd};
        for (std::size_t i = 0; i < g.size(); ++i) {
            f.values[i] = dist(rng);
            u.values[i] = dist(rng);
        }
        const auto div = radial_div(u, g, OuterBc::background);
        const auto grad = radial_grad(f, g, OuterBc::background);
        double lhs = 0.0, rhs = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            lhs += g.weight(i) * f[i] * div[i];
            rhs -= g.weight(i) * u[i] * grad[i];
            scale += g.weight(i) * std::abs(f[i] * div[i]);
        }
        CHECK(std::abs(lhs - rhs) <= 1e-13 * scale);
    }
}

TEST_CASE("radial_grad accuracy") {
    auto f = [](double r) { return std::exp(-r * r); };
    auto exact = [](double r) { return -2.0 * r * std::exp(-r * r); };
    const Op grad = [](const ParityField& p, const RadialGrid& g) { return radial_grad(p, g); };
    const auto g = RadialGrid::build(10.0, 400);
    const auto out = grad(sample(g, f, Parity::even), g);
    CHECK(out.parity == Parity::odd);
    // second order away from the origin
    double coarse = 0.0, fine = 0.0;
    for (std::size_t n : {200u, 400u}) {
        const auto gg = RadialGrid::build(10.0, n);
        const auto o = grad(sample(gg, f, Parity::even), gg);
        double err = 0.0;
        for (std::size_t i = 0; i < gg.size(); ++i) {
            if (gg.r(i) >= 1.0) err = std::max(err, std::abs(o[i] - exact(gg.r(i))));
        }
        (n == 200 ? coarse : fine) = err;
    }
    CHECK(coarse / fine >= 3.5);
    // near the origin the error is first order but bounded by dr
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(out[i] - exact(g.r(i))) <= 2.0 * g.dr());
}

TEST_CASE("integration by parts with central d_dr") {
    // compact support away from r_max
    auto f = [](double r) { return std::exp(-r * r); };
    auto u = [](double r) { return r * std::exp(-0.5 * r * r); };
    double prev = 0.0;
    for (std::size_t n : {200u, 400u}) {
        const auto g = RadialGrid::build(12.0, n);
        const auto fe = sample(g, f, Parity::even);
        const auto uo = sample(g, u, Parity::odd);
        const auto div = radial_div(uo, g);
        const auto df = d_dr(fe, g);
        double sum = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            sum += g.weight(i) * (div[i] * fe[i] + uo[i] * df[i]);
            scale += g.weight(i) * std::abs(div[i] * fe[i]);
        }
        const double rel = std::abs(sum) / scale;
        CHECK(rel <= 10.0 * g.dr() * g.dr());
        if (prev > 0.0) CHECK(prev / rel >= 3.5);
        prev = rel;
    }
}

TEST_CASE("d_dr_k") {
    const auto g = RadialGrid::build(10.0, 100);
    SUBCASE("parity composes") {
        const auto f = sample(g, [](double r) { return std::cos(r); }, Parity::even);
        CHECK(d_dr_k(f, g, 2).parity == Parity::even);
        CHECK(d_dr_k(f, g, 3).parity == Parity::odd);
        CHECK(d_dr_k(f, g, 0).values == f.values);
    }
    SUBCASE("r^2, k = 2") {
        const auto out = d_dr_k(sample(g, [](double r) { return r * r; }, Parity::even), g, 2);
        for (std::size_t i = 0; i + 2 < g.size(); ++i) CHECK(out[i] == doctest::Approx(2.0).epsilon(1e-10));
    }
    SUBCASE("cos, k = 4, interior") {
        const Op d4 = [](const ParityField& f, const RadialGrid& gg) { return d_dr_k(f, gg, 4); };
        auto c = [](double r) { return std::cos(r); };
        // stay clear of the outer extrapolated stencils
        CHECK(sup_error(400, 10.0, 8.0, c, Parity::even, d4, c) <= 0.01);
        CHECK(refinement_ratio(10.0, 8.0, c, Parity::even, d4, c) >= 3.5);
    }
    SUBCASE("order bounds") {
        const auto f = sample(g, [](double r) { return r * r; }, Parity::even);
        CHECK_THROWS_AS(d_dr_k(f, g, 7), std::invalid_argument);
        CHECK_THROWS_AS(d_dr_k(f, g, -1), std::invalid_argument);
        CHECK_NOTHROW(d_dr_k(f, g, 6));
    }
}

TEST_CASE("operators reject mismatched sizes") {
    const auto g = RadialGrid::build(10.0, 100);
    const ParityField f{std::vector<double>(50, 0.0), Parity::even};
    CHECK_THROWS_AS(d_dr(f, g), std::invalid_argument);
    CHECK_THROWS_AS(radial_laplacian(f, g), std::invalid_argument);
}
