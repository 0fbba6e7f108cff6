#include <doctest.h>

#include <cmath>
#include <numbers>

#include "declab/damping.hpp"
#include "declab/geodesic.hpp"

using namespace declab;

namespace {
constexpr double pi = std::numbers::pi;

double torus_dist(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2 * pi);
    return std::min(d, 2 * pi - d);
}

RegionPred profile_pred(const DampingProfile& p, int n_prime, double eps) {
    return [p, n_prime, eps](const std::vector<double>& x) {
        std::vector<double> xp(x.begin(), x.begin() + n_prime);
        return eval_b(p, xp) >= eps;
    };
}
} // namespace

TEST_CASE("flow") {
    FlatTorus T = square_torus(2);

    // Speed convention 2: t = pi/2 along (0,1) moves x2 by pi.
    PhasePoint p{{0.0, 0.0}, {0.0, 1.0}};
    PhasePoint q = flow(T, p, pi / 2);
    CHECK(torus_dist(q.x[1], pi) < 1e-12);
    CHECK(q.xi[1] == 1.0);

    // t = 0 is the identity.
    PhasePoint id = flow(T, p, 0.0);
    CHECK(id.x[0] == p.x[0]);
    CHECK(id.x[1] == p.x[1]);

    // Group law.
    PhasePoint r{{0.3, -1.2}, {0.6, 0.8}};
    r = normalize_cosphere(T, r);
    PhasePoint two_steps = flow(T, flow(T, r, 0.7), 1.9);
    PhasePoint one_step = flow(T, r, 2.6);
    CHECK(torus_dist(two_steps.x[0], one_step.x[0]) < 1e-12);
    CHECK(torus_dist(two_steps.x[1], one_step.x[1]) < 1e-12);

    // |xi| preserved exactly.
    CHECK(two_steps.xi == r.xi);
}

TEST_CASE("first hit time") {
    FlatTorus T = square_torus(2);
    auto strip_at_pi = [](const std::vector<double>& x) {
        return torus_dist(x[0], pi) < 1.0;
    };

    // Straight-line geometry: hit at t = (pi - 1)/2.
    PhasePoint p{{0.0, 0.0}, {1.0, 0.0}};
    auto t = first_hit_time(T, p, strip_at_pi, 20.0, 0.2);
    REQUIRE(t.has_value());
    CHECK(std::abs(*t - (pi - 1.0) / 2.0) < 1e-9);

    // Starting inside: 0.
    PhasePoint inside{{pi - 0.5, 0.0}, {1.0, 0.0}};
    CHECK(first_hit_time(T, inside, strip_at_pi, 20.0, 0.2) == 0.0);

    // Undamped direction of Example 1.1 never enters a strip in x1.
    PhasePoint vert{{0.0, 0.0}, {0.0, 1.0}};
    CHECK(!first_hit_time(T, vert, strip_at_pi, 50.0, 0.2).has_value());

    // Monotone under region enlargement.
    auto bigger = [](const std::vector<double>& x) { return torus_dist(x[0], pi) < 2.0; };
    auto t2 = first_hit_time(T, p, bigger, 20.0, 0.2);
    REQUIRE(t2.has_value());
    CHECK(*t2 <= *t + 1e-12);
}

TEST_CASE("gcc certify on T^2") {
    FlatTorus T = square_torus(2);

    // b >= c everywhere: satisfied with zero hit time.
    auto everywhere = [](const std::vector<double>&) { return true; };
    Certification all = gcc_certify(T, everywhere, 64, 8, 10.0, 0.5);
    CHECK(all.satisfied);
    CHECK(all.max_hit_time == 0.0);

    // Example 1.1: violated, witnesses are the vertical rays over x1 = 0.
    DampingProfile ex11 = periodic_power_profile(1.0);
    const double eps = 1e-3;
    const double dt_scan = omega_b_feature_width(ex11, eps) / 8.0;
    Certification c =
        gcc_certify(T, profile_pred(ex11, 1, eps), 64, 32, 20 * pi, dt_scan);
    CHECK(!c.satisfied);
    CHECK(!c.witnesses.empty());
    const double cell = 2 * pi / 32;
    for (const auto& w : c.witnesses) {
        CHECK(std::abs(w.ray.x[0]) < cell);          // over x1 = 0
        CHECK(std::abs(w.ray.xi[0]) < 1e-12);        // xi1 = 0
        CHECK(std::abs(std::abs(w.ray.xi[1]) - 1.0) < 1e-12); // xi2 = +-1
    }
    // Both signs appear, every base x2 appears.
    int plus = 0, minus = 0;
    for (const auto& w : c.witnesses) (w.ray.xi[1] > 0 ? plus : minus)++;
    CHECK(plus == 32);
    CHECK(minus == 32);

    // The certified-everywhere region yields an empty undamped sample.
    CHECK(undamped_set_sample(T, everywhere, 64, 8, 10.0, 0.5).empty());
}

TEST_CASE("undamped sets on T^3") {
    FlatTorus T = square_torus(3);
    const double eps = 1e-3;

    // Example 1.3: b = x1^{2 gamma} on T^3; S = S*({0} x T^2).
    DampingProfile ex13 = periodic_power_profile(1.0);
    const double scan13 = omega_b_feature_width(ex13, eps) / 8.0;
    auto wit13 = undamped_set_sample(T, profile_pred(ex13, 1, eps), 128, 8, 10 * pi, scan13);
    CHECK(!wit13.empty());
    const double cell = 2 * pi / 8;
    for (const auto& w : wit13) {
        CHECK(std::abs(w.x[0]) < cell);
        CHECK(std::abs(w.xi[0]) < 1e-9);
        CHECK(w.xi[1] * w.xi[1] + w.xi[2] * w.xi[2] == doctest::Approx(1.0));
    }

    // Example 1.2: b = (x1^2 + x2^2)^gamma; S = {x'=0} x T^1 x {xi = (0,0,+-1)}.
    DampingProfile ex12 = radial_power_profile(1.0, {0.0, 0.0});
    auto pred12 = profile_pred(ex12, 2, eps);
    const double scan12 = omega_b_feature_width(ex12, eps) / 8.0;
    auto wit12 = undamped_set_sample(T, pred12, 128, 8, 10 * pi, scan12);
    CHECK(!wit12.empty());
    for (const auto& w : wit12) {
        CHECK(std::abs(w.x[0]) < cell);
        CHECK(std::abs(w.x[1]) < cell);
        CHECK(std::abs(w.xi[0]) < 0.3);
        CHECK(std::abs(w.xi[1]) < 0.3);
        CHECK(std::abs(w.xi[2]) > 0.95);
    }
    bool plus = false, minus = false;
    for (const auto& w : wit12) (w.xi[2] > 0 ? plus : minus) = true;
    CHECK(plus);
    CHECK(minus);
}
