#pragma once

#include <utility>
#include <vector>

namespace declab {

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0; // RMS of fit deviations in log space
    int count = 0;
};

// Ordinary least squares on (log parameter, log value) restricted to
// parameter in [window_lo, window_hi]. Requires at least 5 points in window.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& samples,
                       double window_lo, double window_hi);

// Default fit window for a log-spaced sweep: drop the smallest decade when the
// range spans at least two of them, otherwise keep the geometric upper half.
std::pair<double, double> default_fit_window(double lo, double hi);

} // namespace declab
