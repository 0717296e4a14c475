#ifndef CTSMC_MODEL_HPP
#define CTSMC_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ctsmc/waiting_time.hpp"

namespace ctsmc {

// Jump-chain transition matrix.  m(x, x') is the probability of moving to
// x' when leaving x; rows are stochastic with a zero diagonal.
class EmbeddedChain {
 public:
  EmbeddedChain() = default;
  explicit EmbeddedChain(std::vector<std::vector<double>> rows);

  std::size_t size() const { return rows_.size(); }
  double operator()(std::size_t from, std::size_t to) const { return rows_[from][to]; }
  const std::vector<double> &row(std::size_t from) const { return rows_[from]; }

  // (M g)(x) = sum_{x'} m(x | x') g(x'): flux collected into x.
  std::vector<double> apply_forward(const std::vector<double> &g) const;
  // (M† g)(x) = sum_{x'} m(x' | x) g(x'): expectation over the next state.
  std::vector<double> apply_backward(const std::vector<double> &g) const;

 private:
  std::vector<std::vector<double>> rows_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

struct CTSMCModel {
  std::vector<std::string> states;
  std::vector<WaitingTimeDistribution> waiting;
  EmbeddedChain embedded;
  std::vector<double> initial;

  std::size_t n_states() const { return states.size(); }
  std::size_t state_index(const std::string &name) const;
};

// Checks the structural invariants and returns every violation found.
ValidationReport validate_model(const CTSMCModel &model);

// Throws ValidationError listing the violations, if any.
void require_valid(const CTSMCModel &model);

// Right-continuous sample path on [0, horizon]: states[i] is held on
// [jump_times[i], jump_times[i+1]).
struct Trajectory {
  std::vector<double> jump_times;  // jump_times[0] == 0
  std::vector<std::size_t> states;
  double horizon = 0.0;

  std::size_t n_jumps() const { return states.size() - 1; }
};

Trajectory sample_trajectory(const CTSMCModel &model, double horizon, std::uint64_t seed);

std::size_t state_at(const Trajectory &traj, double t);

// Exponential-waiting approximation with matched mean holding times.
CTSMCModel steady_state_ctmc(const CTSMCModel &model);

}  // namespace ctsmc

#endif
