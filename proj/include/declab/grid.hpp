#pragma once

#include <cstddef>
#include <vector>

namespace declab {

enum class AxisKind { periodic, box };

// Product Fourier grid on M' x T^{n''}. The first n_prime axes are the
// transversal factor M' (periodic circles or truncated boxes used as an R^d
// surrogate), the last n_second axes are the periodic torus factor.
//
// Conventions, fixed here once for the whole library:
//   nodes        x_j = -L/2 + j*L/N  per axis (coordinates centered at 0)
//   wavenumbers  k_m = (2*pi/L) * s(m),  s(m) = m for m <= N/2-1, else m-N
//   synthesis    u(x) = sum_k uhat_k e^{i k.x}   (no prefactor)
//   analysis     carries 1/N per axis
//   Plancherel   ||u||_{L^2}^2 = volume * sum |uhat_k|^2
//                              = cell_volume * sum_nodes |u_j|^2
class Grid {
  public:
    Grid() = default;
    Grid(int n_prime, int n_second, std::vector<int> modes,
         std::vector<double> lengths, std::vector<AxisKind> kinds);

    int dim() const { return static_cast<int>(modes_.size()); }
    int n_prime() const { return n_prime_; }
    int n_second() const { return n_second_; }
    const std::vector<int>& modes() const { return modes_; }
    const std::vector<double>& lengths() const { return lengths_; }
    const std::vector<AxisKind>& kinds() const { return kinds_; }

    std::size_t total_modes() const { return total_; }
    double volume() const { return volume_; }
    double cell_volume() const { return volume_ / static_cast<double>(total_); }

    // Signed integer mode index s(m) in [-N/2, N/2).
    int mode_number(int axis, int idx) const;
    double wavenumber(int axis, int idx) const {
        return wn_[static_cast<std::size_t>(axis)][static_cast<std::size_t>(idx)];
    }
    double coord(int axis, int idx) const {
        double L = lengths_[static_cast<std::size_t>(axis)];
        return -0.5 * L + L * static_cast<double>(idx) / modes_[static_cast<std::size_t>(axis)];
    }

    // |k|^2 over all axes at a flat modal index.
    double wavenumber_sq(std::size_t flat) const;
    // |k|^2 restricted to the trailing n_second axes.
    double wavenumber_sq_second(std::size_t flat) const;

    void unflatten(std::size_t flat, std::vector<int>& idx) const;
    std::size_t flatten(const std::vector<int>& idx) const;

    // 3/2 zero-padded companion grid for dealiased products.
    Grid padded() const;
    // Leading n_prime axes as a standalone grid (errors if n_second == 0 fits all).
    Grid prime_subgrid() const;

    bool operator==(const Grid& o) const {
        return n_prime_ == o.n_prime_ && n_second_ == o.n_second_ &&
               modes_ == o.modes_ && lengths_ == o.lengths_ && kinds_ == o.kinds_;
    }

  private:
    int n_prime_ = 0;
    int n_second_ = 0;
    std::vector<int> modes_;
    std::vector<double> lengths_;
    std::vector<AxisKind> kinds_;
    std::vector<std::vector<double>> wn_; // per-axis wavenumber tables
    std::size_t total_ = 0;
    double volume_ = 1.0;
};

Grid make_grid(int n_prime, int n_second, std::vector<int> modes,
               std::vector<double> lengths, std::vector<AxisKind> kinds);

// n-torus with all lengths 2*pi, split (n_prime, n_second).
Grid make_torus_grid(int n_prime, int n_second, const std::vector<int>& modes);

// 1-D truncated line of length L centered at 0.
Grid make_box_grid(const std::vector<int>& modes, const std::vector<double>& lengths);

} // namespace declab
