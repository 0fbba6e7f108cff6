#include <doctest.h>

#include <cmath>
#include <random>

#include "declab/fit.hpp"
#include "declab/sweeps.hpp"

using namespace declab;

TEST_CASE("fit_exponent on synthetic data") {
    std::vector<std::pair<double, double>> pts;
    for (double x : log_spaced(1.0, 100.0, 12)) pts.emplace_back(x, std::pow(x, 0.5));
    FitResult f = fit_exponent(pts, 1.0, 100.0);
    CHECK(f.slope == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f.residual < 1e-12);

    pts.clear();
    for (double x : log_spaced(1.0, 100.0, 9)) pts.emplace_back(x, 3.0 * std::pow(x, 1.0 / 3.0));
    f = fit_exponent(pts, 1.0, 100.0);
    CHECK(f.slope == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(f.residual < 1e-12);

    // 1% multiplicative noise moves the slope by well under 0.02.
    std::mt19937_64 rng(31);
    std::normal_distribution<double> gauss(0.0, 0.01);
    for (int trial = 0; trial < 20; ++trial) {
        pts.clear();
        for (double x : log_spaced(1.0, 1000.0, 30))
            pts.emplace_back(x, std::pow(x, 0.5) * std::exp(gauss(rng)));
        f = fit_exponent(pts, 1.0, 1000.0);
        CHECK(std::abs(f.slope - 0.5) < 0.02);
    }

    CHECK_THROWS(fit_exponent({{1, 1}, {2, 2}, {3, 3}, {4, 4}}, 0.5, 5.0));
}

TEST_CASE("fit windows") {
    auto [lo1, hi1] = default_fit_window(10.0, 1000.0);
    CHECK(lo1 == doctest::Approx(100.0));
    CHECK(hi1 == doctest::Approx(1000.0));
    auto [lo2, hi2] = default_fit_window(20.0, 500.0);
    CHECK(lo2 == doctest::Approx(100.0));
    CHECK(hi2 == doctest::Approx(500.0));
    CHECK_THROWS(default_fit_window(5.0, 5.0));
}

TEST_CASE("omega probes") {
    const double gamma = 1.0, lambda = 40.0, delta = 0.25;
    const auto probes = omega_probes(gamma, lambda, delta);
    const double l2 = lambda * lambda;
    auto contains = [&](double v) {
        for (double p : probes)
            if (p == doctest::Approx(v)) return true;
        return false;
    };
    CHECK(contains(0.0));
    CHECK(contains(0.5 * delta * l2));
    CHECK(contains(delta * l2));
    CHECK(contains((1.0 - 0.5 * delta) * l2));
    CHECK(contains(l2));
    CHECK(probes.size() >= 13);
}

TEST_CASE("q0 discretization policy") {
    const Q0Discretization d = q0_discretization(1.0, 1000.0);
    CHECK(d.box_length >= 20.0);
    CHECK(d.modes >= 128);
    // Box grows with the propagative scale nu^{1/(2 gamma + 1)}.
    const Q0Discretization small = q0_discretization(1.0, 10.0);
    CHECK(d.box_length >= small.box_length);
}

TEST_CASE("theorem21 smoke run") {
    std::vector<double> grid = log_spaced(10.0, 1000.0, 10);
    grid.push_back(-10.0);
    grid.push_back(-1.0);
    grid.push_back(0.5);
    const Theorem21Result r = theorem21_branches(1.0, grid, 1e-6);
    CHECK(r.target_exponent == doctest::Approx(1.0 / 3.0));
    CHECK(r.negative.size() == 2);
    for (const auto& b : r.negative) CHECK(b.ratio >= 0.999);
    CHECK(r.middle.size() == 1);
    for (const auto& b : r.middle) CHECK(b.sigma > 0.0);
    CHECK(r.positive.samples.size() == 10);
    for (const auto& s : r.positive.samples) CHECK(s.resolved);
    // Slope on the top decade of a short smoke grid: loose envelope only.
    CHECK(r.positive.fitted_exponent > 0.15);
    CHECK(r.positive.fitted_exponent < 0.45);
}
