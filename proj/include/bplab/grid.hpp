#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <utility>
#include <vector>

namespace bplab {

/// Uniform 1-D grid on [x_min, x_max]. Cell i covers
/// [x_min + i*dx, x_min + (i+1)*dx) with its center at x_min + (i+1/2)*dx.
/// The represented function is extended by zero outside the domain.
class Grid {
public:
    Grid(double x_min, double x_max, int n_cells);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    int n_cells() const { return n_cells_; }
    double dx() const { return dx_; }

    double cell_left(int i) const { return x_min_ + i * dx_; }
    double cell_center(int i) const { return x_min_ + (i + 0.5) * dx_; }
    /// Interface k sits between cells k-1 and k; k ranges over [0, n_cells].
    double interface(int k) const { return x_min_ + k * dx_; }

    bool contains(double x) const { return x >= x_min_ && x <= x_max_; }

    /// Index of the cell containing x, clamped to [0, n_cells-1].
    int cell_index(double x) const;

    bool operator==(const Grid& other) const {
        return x_min_ == other.x_min_ && x_max_ == other.x_max_ &&
               n_cells_ == other.n_cells_;
    }
    bool operator!=(const Grid& other) const { return !(*this == other); }

private:
    double x_min_;
    double x_max_;
    int n_cells_;
    double dx_;
};

Grid make_grid(double x_min, double x_max, int n_cells);

/// Piecewise-constant profile: one cell average per cell, zero outside.
struct CellProfile {
    Grid grid;
    Eigen::ArrayXd values;

    CellProfile(Grid g, Eigen::ArrayXd v);

    double value(int i) const { return values[i]; }
    /// Cell value at position x, zero outside the domain.
    double value_at(double x) const;
};

CellProfile zero_profile(const Grid& grid);

double l1_norm(const CellProfile& p);
double linf_norm(const CellProfile& p);

struct SideLimits {
    double minus;
    double plus;
};

/// One-sided limits of the piecewise-constant function at x. Interior to a
/// cell both sides agree; at a cell interface they are the adjacent cell
/// values (zero on the outside of the two boundary interfaces).
SideLimits one_sided_limits(const CellProfile& p, double x);

/// Time-ordered sequence of profiles on a common grid.
class Trajectory {
public:
    Trajectory() = default;

    /// Appends a snapshot; times must be strictly increasing and every
    /// profile must live on the same grid as the first.
    void append(double t, CellProfile profile);

    int size() const { return static_cast<int>(times_.size()); }
    bool empty() const { return times_.empty(); }
    double time(int k) const { return times_[k]; }
    const std::vector<double>& times() const { return times_; }
    const CellProfile& profile(int k) const { return profiles_[k]; }
    const Grid& grid() const;

    double t_front() const { return times_.front(); }
    double t_back() const { return times_.back(); }

    /// L1 norm of the first snapshot, cached at append time.
    double u0_l1() const { return u0_l1_; }

    /// Index of the snapshot at time t; throws if t is not a snapshot time.
    int index_of(double t) const;
    const CellProfile& profile_at(double t) const { return profiles_[index_of(t)]; }

    /// Greatest k with time(k) <= t (requires t within the time range).
    int lower_index(double t) const;

    /// Cell values linearly interpolated in time between the two bracketing
    /// snapshots. Returns profile(k) exactly when t is a snapshot time.
    Eigen::ArrayXd values_at_time(double t) const;

    /// Largest spacing between consecutive snapshot times.
    double max_spacing() const;

private:
    std::vector<double> times_;
    std::vector<CellProfile> profiles_;
    double u0_l1_ = 0.0;
};

}  // namespace bplab
