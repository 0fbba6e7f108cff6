#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace declab {

enum class DampingKind { periodic_power, radial_power, strip, custom };

// Closed-form damping coefficient b >= 0 on M' with a prescribed vanishing
// order 2*gamma at the marked center. For the power kinds,
//   C1^{-1} |x'-y'|^{2 gamma} <= b(x') <= C1 |x'-y'|^{2 gamma}
// holds on the eps0-neighborhood of the center, and b stays bounded below
// away from it.
//
// periodic_power:  b(x') = prod-free |2 sin((x1-y1)/2)|^{2 gamma} in the first
//                  coordinate (smooth for integer gamma, vanishes only at y1);
//                  trigonometric polynomial of degree gamma when gamma is an
//                  integer.
// radial_power:    b(x') = |x'-y'|^{2 gamma} (exact power, all coordinates).
// strip:           smooth plateau bump of the given amplitude on
//                  {|x1 - center| < width}, zero outside.
// custom:          arbitrary closure, caller-provided floor metadata.
struct DampingProfile {
    DampingKind kind = DampingKind::periodic_power;
    double gamma = 1.0;
    std::vector<double> center;     // y' in M' coordinates
    double eps0 = 1.0;              // homogeneity neighborhood radius
    double floor = 0.0;             // additive floor (b + floor everywhere)
    double strip_width = 1.0;       // strip half-width
    double amplitude = 1.0;         // strip height
    std::function<double(const std::vector<double>&)> closure; // custom kind
    // A custom closure may declare dependence on the torus variables; it then
    // receives the full coordinate vector and loses the x''-invariant paths
    // (partial Fourier reduction, reduction identity).
    bool depends_on_second = false;

    std::string label() const;
};

DampingProfile periodic_power_profile(double gamma, double center = 0.0, double eps0 = 1.0);
DampingProfile radial_power_profile(double gamma, std::vector<double> center, double eps0 = 1.0);
DampingProfile strip_profile(double center, double half_width, double amplitude = 1.0);
DampingProfile floored_profile(DampingProfile base, double floor);

double eval_b(const DampingProfile& p, const std::vector<double>& x);

// For integer-gamma periodic_power (plus an optional floor) the coefficient is
// a trigonometric polynomial; its modal convolution kernel has this many
// off-diagonals per axis. nullopt means not band-limited.
std::optional<int> modal_bandwidth(const DampingProfile& p);

// Empirical two-sided homogeneity constants: extremize b(x')/|x'-y'|^{2 gamma}
// over a deterministic radial lattice in the punctured eps0-neighborhood.
// Returns (lower, upper). Throws if the ratio degenerates (hypothesis violated).
std::pair<double, double> homogeneity_bounds(const DampingProfile& p, int sample_count);

// Homogeneous extension W of b outside the eps0-ball:
//   W = b on the ball, W(x) = b(eps0 * x/|x|) (|x|/eps0)^{2 gamma} outside,
// so C1^{-1}|x|^{2 gamma} <= W <= C1 |x|^{2 gamma} globally. Power kinds only.
std::function<double(const std::vector<double>&)> extend_W(const DampingProfile& p);

// Effective-damping region predicate x' -> (b(x') >= eps). For the continuous
// profiles in scope omega_b = {b > 0}; the threshold makes it scannable.
std::function<bool(const std::vector<double>&)> omega_b(const DampingProfile& p, double eps);

// Width of the thinnest extent of {b >= eps}, used to pick ray-scan steps.
double omega_b_feature_width(const DampingProfile& p, double eps);

} // namespace declab
