#pragma once

#include <cmath>

namespace declab {

// f(t) = e^{-1/t} for t > 0, else 0; the standard C-infinity glue.
inline double smooth_glue(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// Monotone C-infinity transition, 0 for t <= 0, 1 for t >= 1.
inline double smooth_transition(double t) {
    const double a = smooth_glue(t);
    const double b = smooth_glue(1.0 - t);
    return a / (a + b);
}

// C_c-infinity bump exp(1 - 1/(1-s^2)) on |s| < 1, peak value 1 at 0.
inline double exp_bump(double s) {
    const double s2 = s * s;
    return s2 < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - s2)) : 0.0;
}

// C_c-infinity plateau bump on |s| < 1: identically 1 for |s| <= plateau_frac,
// smooth decay to 0 at |s| = 1.
inline double plateau_bump(double s, double plateau_frac) {
    const double a = std::abs(s);
    if (a <= plateau_frac) return 1.0;
    if (a >= 1.0) return 0.0;
    return smooth_transition((1.0 - a) / (1.0 - plateau_frac));
}

} // namespace declab
