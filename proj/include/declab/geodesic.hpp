#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace declab {

// Point on the cosphere bundle of a flat product torus: |xi| = 1, coordinates
// wrapped to [-L/2, L/2) per axis.
struct PhasePoint {
    std::vector<double> x;
    std::vector<double> xi;
};

struct FlatTorus {
    std::vector<double> lengths; // all axes periodic, flat metric

    int dim() const { return static_cast<int>(lengths.size()); }
    double wrap(double v, int axis) const;
};

FlatTorus square_torus(int dim); // lengths 2*pi

PhasePoint normalize_cosphere(const FlatTorus& T, PhasePoint p);

// Geodesic flow x -> x + 2 t xi (speed convention 2), xi unchanged; exact.
PhasePoint flow(const FlatTorus& T, const PhasePoint& p, double t);

using RegionPred = std::function<bool(const std::vector<double>& x)>;

// Smallest scanned t >= 0 with pred(flow(p,t).x), refined by bisection to
// 1e-9; nullopt when no hit up to t_max.
std::optional<double> first_hit_time(const FlatTorus& T, const PhasePoint& p,
                                     const RegionPred& pred, double t_max, double dt_scan);

struct RayVerdict {
    PhasePoint ray;
    std::optional<double> hit_time;
};

struct Certification {
    bool satisfied = false;
    double max_hit_time = 0.0;
    std::vector<RayVerdict> witnesses; // undamped rays when violated
    int rays_sampled = 0;
};

// Deterministic lattice sample of S*M: per-axis base lattice (base_count
// points, contains 0) times a direction lattice that contains the coordinate
// directions exactly (uniform angles in 2-D; polar lattice about e1 in 3-D).
std::vector<PhasePoint> cosphere_lattice(const FlatTorus& T, int direction_count,
                                         int base_count);

Certification gcc_certify(const FlatTorus& T, const RegionPred& pred, int direction_count,
                          int base_count, double t_max, double dt_scan);

std::vector<PhasePoint> undamped_set_sample(const FlatTorus& T, const RegionPred& pred,
                                            int direction_count, int base_count, double t_max,
                                            double dt_scan);

} // namespace declab
