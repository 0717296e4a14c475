#include "ctsmc/grid.hpp"

#include <algorithm>
#include <cmath>

#include "ctsmc/errors.hpp"

namespace ctsmc {

TimeGrid::TimeGrid(double horizon, const std::vector<double> &obs_times, double h)
    : horizon_(horizon), h_(h) {
  if (!(horizon > 0.0)) throw ValidationError("grid horizon must be > 0");
  if (!(h > 0.0)) throw ValidationError("grid step must be > 0");

  std::vector<double> bounds{0.0};
  for (double t : obs_times) {
    if (t < 0.0 || t > horizon) throw ValidationError("observation time outside [0, horizon]");
    if (t > bounds.back()) bounds.push_back(t);
  }
  if (bounds.back() < horizon) bounds.push_back(horizon);

  nodes_.push_back(0.0);
  for (std::size_t b = 1; b < bounds.size(); ++b) {
    const double a = bounds[b - 1], c = bounds[b];
    const double len = c - a;
    std::size_t steps = static_cast<std::size_t>(std::floor(len / h)) + 1;
    // Avoid a zero-length trailing step when len is an exact multiple of h.
    if (len - static_cast<double>(steps - 1) * h <= 1e-12 * h && steps > 1) --steps;
    for (std::size_t i = 1; i < steps; ++i) nodes_.push_back(a + static_cast<double>(i) * h);
    nodes_.push_back(c);
  }

  obs_nodes_.reserve(obs_times.size());
  for (double t : obs_times) obs_nodes_.push_back(locate(t));
}

std::size_t TimeGrid::locate(double t) const {
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
  if (it == nodes_.begin()) return 0;
  return static_cast<std::size_t>(it - nodes_.begin()) - 1;
}

bool TimeGrid::same_mesh(const TimeGrid &other) const {
  return nodes_ == other.nodes_;
}

GridFunction::GridFunction(GridPtr grid, std::size_t n_states, Interp output_interp)
    : grid_(std::move(grid)),
      n_states_(n_states),
      output_interp_(output_interp),
      values_(grid_->size() * n_states, 0.0) {}

double GridFunction::operator()(double t, std::size_t x, Interp how) const {
  const auto &nodes = grid_->nodes();
  if (t <= nodes.front()) return at(0, x);
  if (t >= nodes.back()) return at(grid_->size() - 1, x);
  if (how == Interp::Spline) {
    if (!splines_ready_) {
      splines_.clear();
      splines_.reserve(n_states_);
      for (std::size_t s = 0; s < n_states_; ++s) {
        std::vector<double> y(grid_->size());
        for (std::size_t i = 0; i < grid_->size(); ++i) y[i] = at(i, s);
        splines_.emplace_back(nodes, std::move(y));
      }
      splines_ready_ = true;
    }
    return splines_[x](t);
  }
  const std::size_t i = grid_->locate(t);
  const double a = nodes[i], b = nodes[i + 1];
  const double w = (t - a) / (b - a);
  return (1.0 - w) * at(i, x) + w * at(i + 1, x);
}

std::vector<double> GridFunction::node_values(std::size_t node) const {
  std::vector<double> v(n_states_);
  for (std::size_t x = 0; x < n_states_; ++x) v[x] = at(node, x);
  return v;
}

void GridFunction::set_node(std::size_t node, const std::vector<double> &v) {
  for (std::size_t x = 0; x < n_states_; ++x) at(node, x) = v[x];
  splines_ready_ = false;
}

bool GridFunction::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace ctsmc
