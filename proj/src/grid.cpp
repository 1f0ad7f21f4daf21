#include "bplab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bplab {

namespace {

// Relative tolerance for snapping a query point onto a cell interface.
constexpr double kInterfaceSnap = 1e-9;

}  // namespace

Grid::Grid(double x_min, double x_max, int n_cells)
    : x_min_(x_min), x_max_(x_max), n_cells_(n_cells) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max)) {
        throw std::invalid_argument("grid bounds must be finite");
    }
    if (!(x_min < x_max)) {
        throw std::invalid_argument("grid requires x_min < x_max");
    }
    if (n_cells < 2) {
        throw std::invalid_argument("grid requires at least 2 cells");
    }
    dx_ = (x_max - x_min) / n_cells;
}

int Grid::cell_index(double x) const {
    int i = static_cast<int>(std::floor((x - x_min_) / dx_));
    return std::clamp(i, 0, n_cells_ - 1);
}

Grid make_grid(double x_min, double x_max, int n_cells) {
    return Grid(x_min, x_max, n_cells);
}

CellProfile::CellProfile(Grid g, Eigen::ArrayXd v)
    : grid(g), values(std::move(v)) {
    if (values.size() != grid.n_cells()) {
        throw std::invalid_argument("profile length must equal cell count");
    }
    if (!values.isFinite().all()) {
        throw std::invalid_argument("profile values must be finite");
    }
}

CellProfile zero_profile(const Grid& grid) {
    return CellProfile(grid, Eigen::ArrayXd::Zero(grid.n_cells()));
}

double l1_norm(const CellProfile& p) {
    return p.values.abs().sum() * p.grid.dx();
}

double linf_norm(const CellProfile& p) {
    return p.values.abs().maxCoeff();
}

double CellProfile::value_at(double x) const {
    if (!grid.contains(x)) return 0.0;
    return values[grid.cell_index(x)];
}

SideLimits one_sided_limits(const CellProfile& p, double x) {
    const Grid& g = p.grid;
    if (!g.contains(x)) {
        throw std::invalid_argument("one_sided_limits: x outside grid");
    }
    const double s = (x - g.x_min()) / g.dx();
    const double k = std::round(s);
    if (std::abs(s - k) <= kInterfaceSnap * std::max(1.0, std::abs(s))) {
        const int ki = static_cast<int>(k);
        const double lo = ki >= 1 ? p.values[ki - 1] : 0.0;
        const double hi = ki <= g.n_cells() - 1 ? p.values[ki] : 0.0;
        return {lo, hi};
    }
    const double v = p.values[g.cell_index(x)];
    return {v, v};
}

void Trajectory::append(double t, CellProfile profile) {
    if (!std::isfinite(t) || t < 0.0) {
        throw std::invalid_argument("trajectory times must be finite and >= 0");
    }
    if (!times_.empty()) {
        if (t <= times_.back()) {
            throw std::invalid_argument("trajectory times must strictly increase");
        }
        if (profile.grid != profiles_.front().grid) {
            throw std::invalid_argument("trajectory profiles must share one grid");
        }
    } else {
        u0_l1_ = l1_norm(profile);
    }
    times_.push_back(t);
    profiles_.push_back(std::move(profile));
}

const Grid& Trajectory::grid() const {
    if (profiles_.empty()) throw std::logic_error("empty trajectory");
    return profiles_.front().grid;
}

int Trajectory::index_of(double t) const {
    const double tol = 1e-12 * std::max(1.0, std::abs(t));
    auto it = std::lower_bound(times_.begin(), times_.end(), t - tol);
    if (it != times_.end() && std::abs(*it - t) <= tol) {
        return static_cast<int>(it - times_.begin());
    }
    throw std::invalid_argument("time is not a snapshot time of this trajectory");
}

int Trajectory::lower_index(double t) const {
    if (empty() || t < times_.front() - 1e-12 || t > times_.back() + 1e-12) {
        throw std::invalid_argument("time outside trajectory range");
    }
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    int k = static_cast<int>(it - times_.begin()) - 1;
    return std::clamp(k, 0, size() - 1);
}

Eigen::ArrayXd Trajectory::values_at_time(double t) const {
    const int k = lower_index(t);
    if (k == size() - 1) return profiles_[k].values;
    const double t0 = times_[k];
    const double t1 = times_[k + 1];
    const double w = std::clamp((t - t0) / (t1 - t0), 0.0, 1.0);
    if (w == 0.0) return profiles_[k].values;
    return (1.0 - w) * profiles_[k].values + w * profiles_[k + 1].values;
}

double Trajectory::max_spacing() const {
    double m = 0.0;
    for (std::size_t k = 1; k < times_.size(); ++k) {
        m = std::max(m, times_[k] - times_[k - 1]);
    }
    return m;
}

}  // namespace bplab
