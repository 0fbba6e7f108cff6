#include <doctest.h>

#include <cmath>
#include <numbers>

#include "declab/assembly.hpp"
#include "declab/operators.hpp"

using namespace declab;

namespace {
constexpr double pi = std::numbers::pi;

DampingProfile zero_damping() {
    DampingProfile p;
    p.kind = DampingKind::custom;
    p.gamma = 1.0;
    p.center = {0.0};
    p.closure = [](const std::vector<double>&) { return 0.0; };
    return p;
}

DampingProfile const_damping(double c) {
    DampingProfile p = zero_damping();
    p.closure = [c](const std::vector<double>&) { return c; };
    return p;
}

SpectralField plane_wave(const Grid& g, const std::vector<int>& kmode) {
    SpectralField f(g);
    std::vector<int> idx(kmode.size());
    for (std::size_t ax = 0; ax < kmode.size(); ++ax) {
        const int N = g.modes()[ax];
        idx[ax] = kmode[ax] >= 0 ? kmode[ax] : kmode[ax] + N;
    }
    f.modal[g.flatten(idx)] = cplx(1.0, 0.0);
    return f;
}

SpectralField gaussian(const Grid& g, double sigma) {
    std::vector<cplx> nodal(g.total_modes());
    std::vector<int> idx;
    for (std::size_t flat = 0; flat < nodal.size(); ++flat) {
        g.unflatten(flat, idx);
        double r2 = 0.0;
        for (int ax = 0; ax < g.dim(); ++ax) {
            const double x = g.coord(ax, idx[ax]);
            r2 += x * x;
        }
        nodal[flat] = std::exp(-r2 / (2.0 * sigma * sigma));
    }
    return to_modal(g, nodal);
}
} // namespace

TEST_CASE("apply on plane waves") {
    Grid g = make_torus_grid(1, 1, {16, 16});
    const double lambda = 3.0;

    OperatorSpec p0 = make_p_lambda(lambda, zero_damping(), g);
    SpectralField w = plane_wave(g, {2, -1});
    SpectralField out = apply(p0, w);
    const double symbol = (4.0 + 1.0) - lambda * lambda; // |k|^2 - lambda^2
    CHECK(norm(out - cplx(symbol, 0.0) * w) < 1e-12);

    OperatorSpec pc = make_p_lambda(lambda, const_damping(0.7), g);
    SpectralField out2 = apply(pc, w);
    SpectralField expect = cplx(symbol, lambda * 0.7) * w;
    CHECK(norm(out2 - expect) < 1e-12);

    CHECK_THROWS(apply(p0, SpectralField(make_torus_grid(1, 1, {8, 8}))));
    CHECK_THROWS(make_q0(1.0, radial_power_profile(1.0, {0.0}), make_torus_grid(1, 0, {16})));
    CHECK_THROWS(make_p_lambda_omega(1.0, 0.0, zero_damping(), g)); // needs n''=0
}

TEST_CASE("apply matches dense assembly") {
    Grid g = make_torus_grid(1, 1, {16, 16});
    OperatorSpec spec = make_p_lambda(5.0, periodic_power_profile(1.0), g);
    MatC A = assemble_dense(spec);
    SpectralField u = random_field(g, 42);

    VecC uv = Eigen::Map<const VecC>(u.modal.data(), static_cast<Eigen::Index>(u.modal.size()));
    VecC Au = A * uv;
    SpectralField via_apply = apply(spec, u);
    double err = 0.0;
    for (std::size_t i = 0; i < u.modal.size(); ++i)
        err = std::max(err, std::abs(Au(static_cast<Eigen::Index>(i)) - via_apply.modal[i]));
    CHECK(err < 1e-10);
}

TEST_CASE("banded assembly agrees with dense") {
    Grid g = make_torus_grid(1, 0, {64});
    for (double gamma : {1.0, 2.0}) {
        OperatorSpec spec =
            make_p_lambda_omega(9.0, 4.0, periodic_power_profile(gamma), g);
        auto banded = assemble_banded(spec);
        REQUIRE(banded.has_value());
        MatC dense = assemble_dense(spec);
        CHECK((MatC(*banded) - dense).cwiseAbs().maxCoeff() < 1e-12);
    }
    // Non-integer gamma is not band-limited.
    OperatorSpec frac = make_p_lambda_omega(9.0, 4.0, periodic_power_profile(0.5), g);
    CHECK(!assemble_banded(frac).has_value());
}

TEST_CASE("linearity") {
    Grid g = make_torus_grid(1, 1, {16, 16});
    OperatorSpec spec = make_p_lambda(4.0, periodic_power_profile(1.0), g);
    SpectralField u = random_field(g, 1), v = random_field(g, 2);
    SpectralField lhs = apply(spec, u + v);
    SpectralField rhs = apply(spec, u) + apply(spec, v);
    CHECK(norm(lhs - rhs) <= 1e-13 * (norm(apply(spec, u)) + norm(apply(spec, v))));
}

TEST_CASE("adjoint") {
    Grid g = make_torus_grid(1, 1, {16, 16});

    // b = 0 and omega shift: the operator is selfadjoint.
    OperatorSpec sym = make_p_lambda(2.0, zero_damping(), g);
    SpectralField u = random_field(g, 3);
    CHECK(norm(apply(sym, u) - adjoint_apply(sym, u)) < 1e-13 * norm(apply(sym, u)));

    // <A u, v> = <u, A* v> on random pairs.
    OperatorSpec spec = make_p_lambda(7.0, periodic_power_profile(2.0), g);
    SpectralField v = random_field(g, 4);
    const cplx a = inner(apply(spec, u), v);
    const cplx b = inner(u, adjoint_apply(spec, v));
    CHECK(std::abs(a - b) < 1e-12 * std::abs(a));

    // <A*A u, u> = ||A u||^2 >= 0.
    const cplx q = inner(adjoint_apply(spec, apply(spec, u)), u);
    CHECK(q.real() == doctest::Approx(norm_sq(apply(spec, u))).epsilon(1e-11));
    CHECK(q.real() >= 0.0);
}

TEST_CASE("energy identities of the quadratic form") {
    Grid g = make_torus_grid(1, 0, {64});
    const double lambda = 11.0, omega = 7.5;
    OperatorSpec spec =
        make_p_lambda_omega(lambda, omega, periodic_power_profile(1.0), g);
    SpectralField u = random_field(g, 6);
    const cplx q = inner(apply(spec, u), u);

    // Im <P u, u> = lambda <b u, u> >= 0.
    NodalCoefficient bnod = sample_coefficient(
        g, [](const std::vector<double>& x) {
            return std::pow(2.0 * std::sin(0.5 * x[0]), 2.0);
        });
    const cplx bu = inner(multiply_dealiased(u, bnod), u);
    CHECK(q.imag() == doctest::Approx(lambda * bu.real()).epsilon(1e-11));
    CHECK(q.imag() >= 0.0);

    // Re <P u, u> = ||grad u||^2 - omega ||u||^2.
    double grad = 0.0;
    for (std::size_t i = 0; i < u.modal.size(); ++i)
        grad += g.wavenumber_sq(i) * std::norm(u.modal[i]);
    grad *= g.volume();
    CHECK(q.real() == doctest::Approx(grad - omega * norm_sq(u)).epsilon(1e-10));
}

TEST_CASE("scale_T_alpha") {
    Grid g = make_box_grid({128}, {20.0});
    SpectralField u = gaussian(g, 1.3);

    SpectralField same = scale_T_alpha(u, 1.0);
    CHECK(norm(same - u) < 1e-14);

    // Isometry at alpha = 2 against the quadrature oracle on the fine grid.
    SpectralField s2 = scale_T_alpha(u, 2.0);
    CHECK(s2.grid.lengths()[0] == doctest::Approx(10.0));
    CHECK(norm(s2) == doctest::Approx(norm(u)).epsilon(1e-12));
    std::vector<cplx> nodal = to_nodal(s2);
    double quad = 0.0;
    for (const auto& c : nodal) quad += std::norm(c);
    quad *= s2.grid.cell_volume();
    CHECK(std::sqrt(quad) == doctest::Approx(norm(u)).epsilon(1e-12));

    // Round trip at exact dyadic alpha.
    SpectralField back = scale_T_alpha(s2, 0.5);
    CHECK(back.grid == u.grid);
    CHECK(norm(back - u) < 1e-12 * norm(u));

    CHECK_THROWS(scale_T_alpha(SpectralField(make_torus_grid(1, 0, {16})), 2.0));
    CHECK_THROWS(scale_T_alpha(u, 0.0));
}

TEST_CASE("conjugation residual") {
    Grid g = make_box_grid({512}, {30.0});
    SpectralField u = gaussian(g, 1.5);
    DampingProfile W = radial_power_profile(1.0, {0.0});

    // lambda = 1 is the identity scaling: zero to round-off.
    CHECK(conjugation_residual(1.0, 0.0, W, u) < 1e-12);

    // Exact in the continuum; the discrete residual is pure resolution error.
    for (double omega : {0.0, 4.0}) {
        const double r = conjugation_residual(16.0, omega, W, u);
        CHECK(r < 1e-8);
        // Converged under doubling.
        Grid g2 = make_box_grid({1024}, {30.0});
        const double r2 = conjugation_residual(16.0, omega, radial_power_profile(1.0, {0.0}),
                                               gaussian(g2, 1.5));
        CHECK(r2 < 1e-8);
    }

    CHECK_THROWS(conjugation_residual(16.0, 0.0, strip_profile(0.0, 1.0), u));
}
