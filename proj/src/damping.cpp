#include "declab/damping.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "declab/bumps.hpp"

namespace declab {

namespace {

double center_coord(const DampingProfile& p, std::size_t i) {
    return i < p.center.size() ? p.center[i] : 0.0;
}

double base_b(const DampingProfile& p, const std::vector<double>& x) {
    switch (p.kind) {
        case DampingKind::periodic_power: {
            const double t = 2.0 * std::abs(std::sin(0.5 * (x[0] - center_coord(p, 0))));
            return std::pow(t, 2.0 * p.gamma);
        }
        case DampingKind::radial_power: {
            double r2 = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double d = x[i] - center_coord(p, i);
                r2 += d * d;
            }
            return std::pow(r2, p.gamma);
        }
        case DampingKind::strip:
            return p.amplitude * plateau_bump((x[0] - center_coord(p, 0)) / p.strip_width, 0.5);
        case DampingKind::custom:
            return p.closure(x);
    }
    return 0.0;
}

} // namespace

std::string DampingProfile::label() const {
    switch (kind) {
        case DampingKind::periodic_power: return "periodic-power";
        case DampingKind::radial_power: return "radial-power";
        case DampingKind::strip: return "strip";
        case DampingKind::custom: return "custom";
    }
    return "?";
}

DampingProfile periodic_power_profile(double gamma, double center, double eps0) {
    if (!(gamma > 0.0)) throw std::invalid_argument("damping: gamma must be positive");
    DampingProfile p;
    p.kind = DampingKind::periodic_power;
    p.gamma = gamma;
    p.center = {center};
    p.eps0 = eps0;
    return p;
}

DampingProfile radial_power_profile(double gamma, std::vector<double> center, double eps0) {
    if (!(gamma > 0.0)) throw std::invalid_argument("damping: gamma must be positive");
    DampingProfile p;
    p.kind = DampingKind::radial_power;
    p.gamma = gamma;
    p.center = std::move(center);
    p.eps0 = eps0;
    return p;
}

DampingProfile strip_profile(double center, double half_width, double amplitude) {
    if (!(half_width > 0.0) || !(amplitude > 0.0))
        throw std::invalid_argument("damping: strip width and amplitude must be positive");
    DampingProfile p;
    p.kind = DampingKind::strip;
    p.center = {center};
    p.strip_width = half_width;
    p.amplitude = amplitude;
    return p;
}

DampingProfile floored_profile(DampingProfile base, double floor) {
    if (!(floor >= 0.0)) throw std::invalid_argument("damping: floor must be nonnegative");
    base.floor = floor;
    return base;
}

double eval_b(const DampingProfile& p, const std::vector<double>& x) {
    return base_b(p, x) + p.floor;
}

std::optional<int> modal_bandwidth(const DampingProfile& p) {
    if (p.kind != DampingKind::periodic_power) return std::nullopt;
    const double r = std::round(p.gamma);
    if (std::abs(p.gamma - r) > 1e-12 || r < 1.0 || r > 16.0) return std::nullopt;
    return static_cast<int>(r);
}

std::pair<double, double> homogeneity_bounds(const DampingProfile& p, int sample_count) {
    if (sample_count < 100)
        throw std::invalid_argument("homogeneity_bounds: need at least 100 samples");
    const std::size_t dim = p.center.empty() ? 1 : p.center.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    std::vector<double> x(dim);
    // Log-spaced radii over the punctured neighborhood, both ray directions
    // per axis; power profiles are radial so axis rays suffice.
    for (int s = 0; s < sample_count; ++s) {
        const double f = static_cast<double>(s) / (sample_count - 1);
        const double r = p.eps0 * std::pow(1e-6, 1.0 - f);
        for (int dir = 0; dir < static_cast<int>(2 * dim); ++dir) {
            for (std::size_t i = 0; i < dim; ++i) x[i] = center_coord(p, i);
            x[static_cast<std::size_t>(dir) / 2] += (dir % 2 == 0 ? r : -r);
            const double ratio = eval_b(p, x) / std::pow(r, 2.0 * p.gamma);
            if (!std::isfinite(ratio))
                throw std::runtime_error("homogeneity_bounds: ratio overflow, hypothesis violated");
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
    }
    if (!(lo > 0.0) || hi / lo > 1e12)
        throw std::runtime_error("homogeneity_bounds: degenerate ratio, hypothesis violated");
    return {lo, hi};
}

std::function<double(const std::vector<double>&)> extend_W(const DampingProfile& p) {
    if (p.kind != DampingKind::periodic_power && p.kind != DampingKind::radial_power)
        throw std::invalid_argument("extend_W: power-type profiles only");
    if (p.floor != 0.0)
        throw std::invalid_argument("extend_W: floored profiles violate the homogeneity bound");
    // W as a function of the offset from the center.
    DampingProfile q = p;
    q.center.assign(p.center.empty() ? 1 : p.center.size(), 0.0);
    const double eps0 = p.eps0;
    const double two_gamma = 2.0 * p.gamma;
    return [q, eps0, two_gamma](const std::vector<double>& x) {
        double r2 = 0.0;
        for (double xi : x) r2 += xi * xi;
        const double r = std::sqrt(r2);
        if (r <= eps0) return base_b(q, x);
        std::vector<double> xb(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) xb[i] = x[i] * (eps0 / r);
        return base_b(q, xb) * std::pow(r / eps0, two_gamma);
    };
}

std::function<bool(const std::vector<double>&)> omega_b(const DampingProfile& p, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("omega_b: threshold must be positive");
    return [p, eps](const std::vector<double>& x) { return eval_b(p, x) >= eps; };
}

double omega_b_feature_width(const DampingProfile& p, double eps) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (p.floor >= eps) return two_pi; // effective everywhere
    const double e = eps - p.floor;
    switch (p.kind) {
        case DampingKind::periodic_power: {
            const double t = std::pow(e, 1.0 / (2.0 * p.gamma));
            const double w = 2.0 * std::asin(std::min(1.0, 0.5 * t));
            return std::max(two_pi - 2.0 * w, 1e-3);
        }
        case DampingKind::radial_power: {
            const double r = std::pow(e, 1.0 / (2.0 * p.gamma));
            return std::max(two_pi - 2.0 * r, 1e-3);
        }
        case DampingKind::strip:
            return p.strip_width;
        case DampingKind::custom:
            return p.strip_width; // caller-supplied feature hint
    }
    return 1e-3;
}

} // namespace declab
