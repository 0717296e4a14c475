#include "ctsmc/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ctsmc/errors.hpp"
#include "ctsmc/rng.hpp"

namespace ctsmc {

EmbeddedChain::EmbeddedChain(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
  for (const auto &r : rows_)
    if (r.size() != rows_.size()) throw ValidationError("embedded chain matrix not square");
}

std::vector<double> EmbeddedChain::apply_forward(const std::vector<double> &g) const {
  std::vector<double> out(size(), 0.0);
  for (std::size_t from = 0; from < size(); ++from) {
    const double gv = g[from];
    if (gv == 0.0) continue;
    for (std::size_t to = 0; to < size(); ++to) out[to] += rows_[from][to] * gv;
  }
  return out;
}

std::vector<double> EmbeddedChain::apply_backward(const std::vector<double> &g) const {
  std::vector<double> out(size(), 0.0);
  for (std::size_t from = 0; from < size(); ++from) {
    double s = 0.0;
    for (std::size_t to = 0; to < size(); ++to) s += rows_[from][to] * g[to];
    out[from] = s;
  }
  return out;
}

std::size_t CTSMCModel::state_index(const std::string &name) const {
  const auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) throw DomainError("unknown state name: " + name);
  return static_cast<std::size_t>(it - states.begin());
}

ValidationReport validate_model(const CTSMCModel &model) {
  ValidationReport rep;
  auto fail = [&rep](const std::string &msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };

  const std::size_t n = model.states.size();
  if (n < 2) fail("state space needs at least 2 states");
  if (model.waiting.size() != n) fail("waiting-time vector size mismatch");
  if (model.embedded.size() != n) fail("embedded chain dimension mismatch");
  if (model.initial.size() != n) fail("initial distribution size mismatch");
  if (!rep.ok) return rep;

  for (std::size_t i = 0; i < n; ++i) {
    if (model.embedded(i, i) != 0.0) {
      std::ostringstream os;
      os << "nonzero diagonal: m(" << model.states[i] << " -> " << model.states[i] << ") = "
         << model.embedded(i, i);
      fail(os.str());
    }
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (model.embedded(i, j) < 0.0) fail("negative transition probability in row " + model.states[i]);
      row_sum += model.embedded(i, j);
    }
    if (std::abs(row_sum - 1.0) > 1e-12) {
      std::ostringstream os;
      os << "row not stochastic: row " << model.states[i] << " sums to " << row_sum;
      fail(os.str());
    }
  }
  double init_sum = 0.0;
  for (double p : model.initial) {
    if (p < 0.0) fail("negative initial probability");
    init_sum += p;
  }
  if (std::abs(init_sum - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "initial distribution sums to " << init_sum;
    fail(os.str());
  }
  return rep;
}

void require_valid(const CTSMCModel &model) {
  const ValidationReport rep = validate_model(model);
  if (rep.ok) return;
  std::string msg = "invalid model:";
  for (const auto &v : rep.violations) msg += "\n  - " + v;
  throw ValidationError(msg);
}

Trajectory sample_trajectory(const CTSMCModel &model, double horizon, std::uint64_t seed) {
  require_valid(model);
  if (!(horizon > 0.0)) throw DomainError("horizon must be > 0");

  Rng rng(seed);
  Trajectory traj;
  traj.horizon = horizon;

  // Initial state from p_0 by inverse CDF.
  std::size_t x = 0;
  {
    const double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < model.n_states(); ++i) {
      acc += model.initial[i];
      if (u < acc) { x = i; break; }
      x = i;
    }
  }
  traj.jump_times.push_back(0.0);
  traj.states.push_back(x);

  double t = 0.0;
  for (;;) {
    t += model.waiting[x].sample(rng);
    if (t >= horizon) break;
    const auto &row = model.embedded.row(x);
    const double u = rng.uniform();
    double acc = 0.0;
    std::size_t next = x;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j == x) continue;
      acc += row[j];
      if (u < acc) { next = j; break; }
      next = j;
    }
    // Guard against rounding leaving next == x on the last bucket.
    if (next == x) next = (x + 1) % model.n_states();
    x = next;
    traj.jump_times.push_back(t);
    traj.states.push_back(x);
  }
  return traj;
}

std::size_t state_at(const Trajectory &traj, double t) {
  if (t < 0.0 || t > traj.horizon) throw DomainError("t outside [0, horizon]");
  // Right-continuous: at a jump instant the new state is already active.
  const auto it = std::upper_bound(traj.jump_times.begin(), traj.jump_times.end(), t);
  const std::size_t idx = static_cast<std::size_t>(it - traj.jump_times.begin());
  return traj.states[idx - 1];
}

CTSMCModel steady_state_ctmc(const CTSMCModel &model) {
  require_valid(model);
  CTSMCModel out = model;
  out.waiting.clear();
  out.waiting.reserve(model.n_states());
  for (const auto &w : model.waiting)
    out.waiting.push_back(WaitingTimeDistribution::exponential(1.0 / w.mean()));
  return out;
}

}  // namespace ctsmc
