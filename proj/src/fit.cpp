#include "declab/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace declab {

FitResult fit_exponent(const std::vector<std::pair<double, double>>& samples,
                       double window_lo, double window_hi) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [x, y] : samples) {
        if (x < window_lo || x > window_hi) continue;
        if (!(x > 0.0) || !(y > 0.0))
            throw std::invalid_argument("fit_exponent: nonpositive sample in window");
        pts.emplace_back(std::log(x), std::log(y));
    }
    if (pts.size() < 5)
        throw std::invalid_argument("fit_exponent: fewer than 5 samples in window");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(pts.size());
    const double denom = n * sxx - sx * sx;
    if (denom <= 0.0) throw std::invalid_argument("fit_exponent: degenerate abscissae");

    FitResult r;
    r.slope = (n * sxy - sx * sy) / denom;
    r.intercept = (sy - r.slope * sx) / n;
    r.count = static_cast<int>(pts.size());
    double ss = 0.0;
    for (const auto& [x, y] : pts) {
        const double d = y - (r.intercept + r.slope * x);
        ss += d * d;
    }
    r.residual = std::sqrt(ss / n);
    return r;
}

std::pair<double, double> default_fit_window(double lo, double hi) {
    if (!(lo > 0.0) || !(hi > lo))
        throw std::invalid_argument("default_fit_window: need 0 < lo < hi");
    if (hi >= 100.0 * lo) return {10.0 * lo, hi};
    return {std::sqrt(lo * hi), hi};
}

} // namespace declab
