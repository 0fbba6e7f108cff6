#include "declab/geodesic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "declab/parallel.hpp"

namespace declab {

double FlatTorus::wrap(double v, int axis) const {
    const double L = lengths[static_cast<std::size_t>(axis)];
    double w = std::fmod(v + 0.5 * L, L);
    if (w < 0.0) w += L;
    return w - 0.5 * L;
}

FlatTorus square_torus(int dim) {
    return FlatTorus{std::vector<double>(static_cast<std::size_t>(dim),
                                         2.0 * std::numbers::pi)};
}

PhasePoint normalize_cosphere(const FlatTorus& T, PhasePoint p) {
    double n2 = 0.0;
    for (double c : p.xi) n2 += c * c;
    if (!(n2 > 0.0)) throw std::invalid_argument("cosphere: zero covector");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& c : p.xi) c *= inv;
    for (int ax = 0; ax < T.dim(); ++ax)
        p.x[static_cast<std::size_t>(ax)] = T.wrap(p.x[static_cast<std::size_t>(ax)], ax);
    return p;
}

PhasePoint flow(const FlatTorus& T, const PhasePoint& p, double t) {
    PhasePoint q = p;
    for (int ax = 0; ax < T.dim(); ++ax)
        q.x[static_cast<std::size_t>(ax)] =
            T.wrap(p.x[static_cast<std::size_t>(ax)] +
                       2.0 * t * p.xi[static_cast<std::size_t>(ax)],
                   ax);
    return q;
}

std::optional<double> first_hit_time(const FlatTorus& T, const PhasePoint& p,
                                     const RegionPred& pred, double t_max, double dt_scan) {
    if (!(t_max > 0.0) || !(dt_scan > 0.0))
        throw std::invalid_argument("first_hit_time: positive horizon and scan step required");
    if (pred(p.x)) return 0.0;
    double t_prev = 0.0;
    for (double t = dt_scan; t <= t_max + 0.5 * dt_scan; t += dt_scan) {
        if (pred(flow(T, p, t).x)) {
            // Bisect the entry between the last miss and this hit.
            double lo = t_prev, hi = t;
            while (hi - lo > 1e-9) {
                const double mid = 0.5 * (lo + hi);
                (pred(flow(T, p, mid).x) ? hi : lo) = mid;
            }
            return hi;
        }
        t_prev = t;
    }
    return std::nullopt;
}

std::vector<PhasePoint> cosphere_lattice(const FlatTorus& T, int direction_count,
                                         int base_count) {
    if (direction_count < 4 || base_count < 1)
        throw std::invalid_argument("cosphere_lattice: sampling counts too small");
    const int dim = T.dim();

    std::vector<std::vector<double>> dirs;
    if (dim == 1) {
        dirs = {{1.0}, {-1.0}};
    } else if (dim == 2) {
        const int D = 4 * ((direction_count + 3) / 4); // keep the axes exactly
        for (int i = 0; i < D; ++i) {
            const double th = 2.0 * std::numbers::pi * i / D;
            dirs.push_back({std::cos(th), std::sin(th)});
        }
    } else if (dim == 3) {
        // Polar lattice about e1; even polar count and a multiple of 4 in
        // azimuth keep the coordinate directions on the lattice.
        int Dphi = 4 * std::max(1, static_cast<int>(std::lround(std::sqrt(direction_count / 2.0) / 4.0 * 4)) / 4);
        Dphi = std::max(Dphi, 8);
        int Dth = 2 * std::max(2, (direction_count / Dphi) / 2);
        dirs.push_back({1.0, 0.0, 0.0});
        dirs.push_back({-1.0, 0.0, 0.0});
        for (int j = 1; j < Dth; ++j) {
            const double th = std::numbers::pi * j / Dth;
            for (int i = 0; i < Dphi; ++i) {
                const double ph = 2.0 * std::numbers::pi * i / Dphi;
                dirs.push_back({std::cos(th), std::sin(th) * std::cos(ph),
                                std::sin(th) * std::sin(ph)});
            }
        }
    } else {
        throw std::invalid_argument("cosphere_lattice: dimensions 1..3 supported");
    }

    std::vector<PhasePoint> rays;
    std::vector<int> idx(static_cast<std::size_t>(dim), 0);
    const auto bases = static_cast<std::size_t>(std::pow(base_count, dim) + 0.5);
    for (std::size_t b = 0; b < bases; ++b) {
        std::size_t rem = b;
        std::vector<double> x(static_cast<std::size_t>(dim));
        for (int ax = dim - 1; ax >= 0; --ax) {
            const int j = static_cast<int>(rem % static_cast<std::size_t>(base_count));
            rem /= static_cast<std::size_t>(base_count);
            const double L = T.lengths[static_cast<std::size_t>(ax)];
            x[static_cast<std::size_t>(ax)] = -0.5 * L + L * j / base_count;
        }
        for (const auto& d : dirs) rays.push_back(normalize_cosphere(T, PhasePoint{x, d}));
    }
    return rays;
}

Certification gcc_certify(const FlatTorus& T, const RegionPred& pred, int direction_count,
                          int base_count, double t_max, double dt_scan) {
    const std::vector<PhasePoint> rays = cosphere_lattice(T, direction_count, base_count);
    std::vector<RayVerdict> verdicts(rays.size());
    parallel_for(rays.size(), [&](std::size_t i) {
        verdicts[i] = {rays[i], first_hit_time(T, rays[i], pred, t_max, dt_scan)};
    });

    Certification cert;
    cert.rays_sampled = static_cast<int>(rays.size());
    cert.satisfied = true;
    for (auto& v : verdicts) {
        if (v.hit_time) {
            cert.max_hit_time = std::max(cert.max_hit_time, *v.hit_time);
        } else {
            cert.satisfied = false;
            cert.witnesses.push_back(v);
        }
    }
    return cert;
}

std::vector<PhasePoint> undamped_set_sample(const FlatTorus& T, const RegionPred& pred,
                                            int direction_count, int base_count, double t_max,
                                            double dt_scan) {
    Certification cert = gcc_certify(T, pred, direction_count, base_count, t_max, dt_scan);
    std::vector<PhasePoint> out;
    out.reserve(cert.witnesses.size());
    for (auto& w : cert.witnesses) out.push_back(w.ray);
    return out;
}

} // namespace declab
