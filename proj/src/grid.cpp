#include "declab/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace declab {

Grid::Grid(int n_prime, int n_second, std::vector<int> modes,
           std::vector<double> lengths, std::vector<AxisKind> kinds)
    : n_prime_(n_prime), n_second_(n_second), modes_(std::move(modes)),
      lengths_(std::move(lengths)), kinds_(std::move(kinds)) {
    const int n = n_prime_ + n_second_;
    if (n < 1) throw std::invalid_argument("grid: dimension must be >= 1");
    if (n_prime_ < 0 || n_second_ < 0)
        throw std::invalid_argument("grid: negative split counts");
    if (static_cast<int>(modes_.size()) != n || static_cast<int>(lengths_.size()) != n ||
        static_cast<int>(kinds_.size()) != n)
        throw std::invalid_argument("grid: per-axis arrays must match dimension");
    for (int i = 0; i < n; ++i) {
        if (modes_[i] < 2 || modes_[i] % 2 != 0)
            throw std::invalid_argument("grid: mode counts must be even and >= 2");
        if (!(lengths_[i] > 0.0))
            throw std::invalid_argument("grid: box lengths must be positive");
        if (i >= n_prime_ && kinds_[i] != AxisKind::periodic)
            throw std::invalid_argument("grid: torus axes must be periodic");
    }

    total_ = 1;
    volume_ = 1.0;
    wn_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        total_ *= static_cast<std::size_t>(modes_[i]);
        volume_ *= lengths_[i];
        const double dk = 2.0 * std::numbers::pi / lengths_[i];
        auto& t = wn_[static_cast<std::size_t>(i)];
        t.resize(static_cast<std::size_t>(modes_[i]));
        for (int m = 0; m < modes_[i]; ++m)
            t[static_cast<std::size_t>(m)] = dk * (m <= modes_[i] / 2 - 1 ? m : m - modes_[i]);
    }
}

int Grid::mode_number(int axis, int idx) const {
    const int N = modes_[static_cast<std::size_t>(axis)];
    return idx <= N / 2 - 1 ? idx : idx - N;
}

double Grid::wavenumber_sq(std::size_t flat) const {
    double s = 0.0;
    for (int ax = dim() - 1; ax >= 0; --ax) {
        const auto N = static_cast<std::size_t>(modes_[static_cast<std::size_t>(ax)]);
        const double k = wn_[static_cast<std::size_t>(ax)][flat % N];
        s += k * k;
        flat /= N;
    }
    return s;
}

double Grid::wavenumber_sq_second(std::size_t flat) const {
    double s = 0.0;
    for (int ax = dim() - 1; ax >= n_prime_; --ax) {
        const auto N = static_cast<std::size_t>(modes_[static_cast<std::size_t>(ax)]);
        const double k = wn_[static_cast<std::size_t>(ax)][flat % N];
        s += k * k;
        flat /= N;
    }
    return s;
}

void Grid::unflatten(std::size_t flat, std::vector<int>& idx) const {
    idx.resize(static_cast<std::size_t>(dim()));
    for (int ax = dim() - 1; ax >= 0; --ax) {
        const auto N = static_cast<std::size_t>(modes_[static_cast<std::size_t>(ax)]);
        idx[static_cast<std::size_t>(ax)] = static_cast<int>(flat % N);
        flat /= N;
    }
}

std::size_t Grid::flatten(const std::vector<int>& idx) const {
    std::size_t flat = 0;
    for (int ax = 0; ax < dim(); ++ax)
        flat = flat * static_cast<std::size_t>(modes_[static_cast<std::size_t>(ax)]) +
               static_cast<std::size_t>(idx[static_cast<std::size_t>(ax)]);
    return flat;
}

Grid Grid::padded() const {
    std::vector<int> m(modes_);
    for (auto& N : m) N = 2 * ((3 * N + 3) / 4); // >= 3N/2, even
    return Grid(n_prime_, n_second_, std::move(m), lengths_, kinds_);
}

Grid Grid::prime_subgrid() const {
    if (n_prime_ < 1) throw std::invalid_argument("prime_subgrid: n' = 0");
    std::vector<int> m(modes_.begin(), modes_.begin() + n_prime_);
    std::vector<double> l(lengths_.begin(), lengths_.begin() + n_prime_);
    std::vector<AxisKind> k(kinds_.begin(), kinds_.begin() + n_prime_);
    return Grid(n_prime_, 0, std::move(m), std::move(l), std::move(k));
}

Grid make_grid(int n_prime, int n_second, std::vector<int> modes,
               std::vector<double> lengths, std::vector<AxisKind> kinds) {
    return Grid(n_prime, n_second, std::move(modes), std::move(lengths), std::move(kinds));
}

Grid make_torus_grid(int n_prime, int n_second, const std::vector<int>& modes) {
    const int n = n_prime + n_second;
    return Grid(n_prime, n_second, modes,
                std::vector<double>(static_cast<std::size_t>(n), 2.0 * std::numbers::pi),
                std::vector<AxisKind>(static_cast<std::size_t>(n), AxisKind::periodic));
}

Grid make_box_grid(const std::vector<int>& modes, const std::vector<double>& lengths) {
    return Grid(static_cast<int>(modes.size()), 0, modes, lengths,
                std::vector<AxisKind>(modes.size(), AxisKind::box));
}

} // namespace declab
