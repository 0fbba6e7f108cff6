#pragma once

#include <optional>
#include <vector>

#include "declab/damping.hpp"
#include "declab/field.hpp"
#include "declab/fit.hpp"
#include "declab/grid.hpp"

namespace declab {

// State of the damped wave equation u_tt - Delta u + b u_t = 0; v = u_t.
struct WaveState {
    SpectralField u;
    SpectralField v;
    double t = 0.0;
};

struct DecaySample {
    double t = 0.0;
    double energy = 0.0;
    double sqrt_energy = 0.0;
    double damping_form = 0.0; // <b v, v>
};

// E = (||grad u||^2 + ||v||^2) / 2, evaluated spectrally.
double energy(const WaveState& s);

// Strang splitting with exact sub-flows: half-step modal rotation for the
// undamped wave, full-step pointwise factor e^{-b dt} on v, half-step
// rotation. Energy-conserving to round-off when b = 0; unconditionally
// nonexpansive for b >= 0.
class WaveStepper {
  public:
    WaveStepper(const Grid& grid, const DampingProfile& damping);

    void step(WaveState& s, double dt) const;
    double damping_form(const WaveState& s) const; // <b v, v>

    const std::vector<double>& b_nodal() const { return b_nodal_; }

  private:
    Grid grid_;
    std::vector<double> b_nodal_;
    bool b_is_zero_ = true;
    std::vector<double> freq_; // |k| per flat modal index

    void rotate_half(WaveState& s, double half_dt) const;
    void damp_full(WaveState& s, double dt) const;
};

struct Trajectory {
    std::vector<DecaySample> samples;
    double sample_stride_dt = 0.0;
    // Largest energy increase rate over spans of >= 0.5 time units (sustained
    // growth; zero or round-off level for any b >= 0).
    double max_energy_increase_rate = 0.0;
};

Trajectory simulate(const Grid& grid, const DampingProfile& damping, const SpectralField& u0,
                    const SpectralField& v0, double dt, double horizon, int sample_stride = 1);

// | E(t1) - E(t0) + int_{t0}^{t1} <b v, v> dt | / E(t0), trapezoid quadrature
// on the trajectory samples inside the window.
double dissipation_residual(const Trajectory& traj, double t0, double t1);

struct DecayMeasurement {
    std::vector<DecaySample> samples;
    std::optional<FitResult> fit;  // log E^{1/2} vs log t over the last half
    double max_energy_increase_rate = 0.0;
    double data_hnorm = 0.0; // ||u0||_{H^2} + ||u1||_{H^1}, fixed at t = 0
};

// Canonical smooth data: u0 = exp(kappa (cos x1 - 1)) * e^{i x_n} (first torus
// harmonic), v0 = 0, kappa = 4.
SpectralField canonical_decay_data(const Grid& grid, double kappa = 4.0);

DecayMeasurement measure_decay(const Grid& grid, const DampingProfile& damping, double dt,
                               double horizon, int sample_stride);

} // namespace declab
