#include <doctest.h>

#include <Eigen/SVD>
#include <cmath>

#include "declab/sigma_min.hpp"
#include "declab/sweeps.hpp"

using namespace declab;

namespace {
DampingProfile zero_damping() {
    DampingProfile p;
    p.kind = DampingKind::custom;
    p.gamma = 1.0;
    p.center = {0.0};
    p.closure = [](const std::vector<double>&) { return 0.0; };
    return p;
}
} // namespace

TEST_CASE("diagonal operators") {
    // With b = 0 the operator is the diagonal Fourier multiplier |k|^2 - omega.
    Grid g = make_torus_grid(1, 0, {4}); // symbols {0, 1, 1, 4} - omega

    // All-ones spectrum shifted so the smallest singular value is 1.
    SigmaMinResult one =
        sigma_min(make_p_lambda_omega(1.0, -1.0, zero_damping(), g), {1e-10, 300});
    CHECK(one.converged);
    CHECK(one.sigma == doctest::Approx(1.0).epsilon(1e-8));

    // Diagonal {2, 3, 3, 6}: smallest is 2.
    SigmaMinResult two =
        sigma_min(make_p_lambda_omega(1.0, -2.0, zero_damping(), g), {1e-10, 300});
    CHECK(two.converged);
    CHECK(two.sigma == doctest::Approx(2.0).epsilon(1e-8));

    CHECK_THROWS(sigma_min(two.converged ? make_p_lambda_omega(1.0, -2.0, zero_damping(), g)
                                         : make_p_lambda_omega(1.0, -2.0, zero_damping(), g),
                           SigmaMinOptions{0.5, 10}));
}

TEST_CASE("inverse iteration matches dense SVD oracle") {
    // 1-D Q0 - mu, gamma = 1, mu = 100, on a converged grid.
    const double mu = 100.0;
    DampingProfile W = radial_power_profile(1.0, {0.0});
    const Q0Discretization d = q0_discretization(1.0, mu);
    OperatorSpec spec = make_q0(mu, W, make_box_grid({d.modes}, {d.box_length}));

    const SigmaMinResult it = sigma_min(spec, {1e-8, 200});
    const double oracle = sigma_min_svd(spec);
    CHECK(it.converged);
    CHECK(std::abs(it.sigma - oracle) <= 1e-6 * oracle);

    // sigma_min(A) = sigma_min(A*): the adjoint's dense SVD agrees.
    MatC A = assemble_dense(spec);
    Eigen::BDCSVD<MatC> svd_adj(MatC(A.adjoint()));
    CHECK(svd_adj.singularValues().tail(1)(0) == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("banded path matches dense path") {
    Grid g = make_torus_grid(1, 0, {128});
    OperatorSpec spec = make_p_lambda_omega(20.0, 7.0, periodic_power_profile(1.0), g);
    REQUIRE(assemble_banded(spec).has_value());
    const SigmaMinResult banded = sigma_min(spec, {1e-8, 200});
    const double oracle = sigma_min_svd(spec);
    CHECK(banded.converged);
    CHECK(std::abs(banded.sigma - oracle) <= 1e-6 * oracle);
}

TEST_CASE("shift Lipschitz property") {
    DampingProfile W = radial_power_profile(1.0, {0.0});
    Grid g = make_box_grid({128}, {20.0});
    const double pairs[][2] = {{3.0, 4.5}, {10.0, 11.0}, {-2.0, 1.0}};
    for (const auto& pr : pairs) {
        const double s1 = sigma_min(make_q0(pr[0], W, g), {1e-8, 200}).sigma;
        const double s2 = sigma_min(make_q0(pr[1], W, g), {1e-8, 200}).sigma;
        CHECK(std::abs(s1 - s2) <= std::abs(pr[0] - pr[1]) + 1e-6 * (s1 + s2));
    }
}

TEST_CASE("non-convergence is reported") {
    DampingProfile W = radial_power_profile(1.0, {0.0});
    Grid g = make_box_grid({64}, {20.0});
    const SigmaMinResult r = sigma_min(make_q0(50.0, W, g), {1e-12, 1});
    CHECK(!r.converged);
    CHECK(r.iterations == 1);
}

TEST_CASE("negative shift branch is exact") {
    // For mu <= -1 the numerical range bound gives sigma >= |mu| outright.
    for (double mu : {-1.0, -10.0, -100.0}) {
        const SweepSample s = q0_sample(1.0, mu);
        CHECK(s.sigma / std::abs(mu) >= 0.999);
        CHECK(s.resolved);
    }
}

TEST_CASE("mu = -50 lower bound against the dense oracle") {
    // Re<(Q0-mu)u, u> >= |mu| ||u||^2 for mu <= -1, so sigma >= |mu| holds
    // discretely as well; the dense oracle confirms near-equality.
    DampingProfile W = radial_power_profile(1.0, {0.0});
    OperatorSpec spec = make_q0(-50.0, W, make_box_grid({128}, {20.0}));
    const double oracle = sigma_min_svd(spec);
    CHECK(oracle / 50.0 >= 1.0 - 1e-6);
    const SigmaMinResult it = sigma_min(spec, {1e-8, 400});
    CHECK(it.converged);
    CHECK(std::abs(it.sigma - oracle) <= 1e-5 * oracle);
}

TEST_CASE("block reduction equals the 2-D operator") {
    // sigma_min(P_lambda) on T^2 with x''-independent damping equals the
    // minimum over torus modes of the reduced 1-D operators on the same grid.
    const double lambda = 4.5;
    const DampingProfile b = periodic_power_profile(1.0);
    Grid g2 = make_torus_grid(1, 1, {16, 16});
    const double direct = sigma_min_svd(make_p_lambda(lambda, b, g2));

    Grid g1 = make_torus_grid(1, 0, {16});
    double reduced = 1e300;
    for (int k = -8; k < 8; ++k) {
        const double omega = lambda * lambda - static_cast<double>(k) * k;
        reduced = std::min(reduced, sigma_min_svd(make_p_lambda_omega(lambda, omega, b, g1)));
    }
    CHECK(direct == doctest::Approx(reduced).epsilon(1e-9));
}
