#ifndef CTSMC_GRID_HPP
#define CTSMC_GRID_HPP

#include <memory>
#include <vector>

#include "ctsmc/numerics.hpp"

namespace ctsmc {

// Solver mesh over [0, T].  Every observation time is a node; between
// boundaries the steps are of equal length h except the final step of
// each stretch, which shrinks to land exactly on the boundary.
class TimeGrid {
 public:
  TimeGrid(double horizon, const std::vector<double> &obs_times, double h);

  double horizon() const { return horizon_; }
  double step() const { return h_; }
  std::size_t size() const { return nodes_.size(); }
  double node(std::size_t i) const { return nodes_[i]; }
  const std::vector<double> &nodes() const { return nodes_; }

  // Node index of observation k (obs_times must have been passed sorted).
  std::size_t obs_node(std::size_t k) const { return obs_nodes_[k]; }
  const std::vector<std::size_t> &obs_nodes() const { return obs_nodes_; }

  // Largest i with node(i) <= t.
  std::size_t locate(double t) const;

  bool same_mesh(const TimeGrid &other) const;

 private:
  double horizon_, h_;
  std::vector<double> nodes_;
  std::vector<std::size_t> obs_nodes_;
};

using GridPtr = std::shared_ptr<const TimeGrid>;

enum class Interp { Linear, Spline };

// Per-state values on a time grid.  Piecewise-linear evaluation feeds the
// quadrature rules; cubic splines are for output interpolation.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(GridPtr grid, std::size_t n_states, Interp output_interp = Interp::Spline);

  std::size_t n_states() const { return n_states_; }
  const TimeGrid &grid() const { return *grid_; }
  GridPtr grid_ptr() const { return grid_; }

  double &at(std::size_t node, std::size_t x) { return values_[node * n_states_ + x]; }
  double at(std::size_t node, std::size_t x) const { return values_[node * n_states_ + x]; }

  // Interpolated evaluation at an arbitrary time in [0, T].
  double operator()(double t, std::size_t x, Interp how) const;
  double operator()(double t, std::size_t x) const { return (*this)(t, x, output_interp_); }

  std::vector<double> node_values(std::size_t node) const;
  void set_node(std::size_t node, const std::vector<double> &v);

  bool all_finite() const;

 private:
  GridPtr grid_;
  std::size_t n_states_ = 0;
  Interp output_interp_ = Interp::Spline;
  std::vector<double> values_;
  mutable std::vector<num::CubicSpline> splines_;  // built on first spline query
  mutable bool splines_ready_ = false;
};

}  // namespace ctsmc

#endif
