#ifndef CTSMC_OBSERVATION_HPP
#define CTSMC_OBSERVATION_HPP

#include <cstdint>
#include <vector>

#include "ctsmc/model.hpp"
#include "ctsmc/waiting_time.hpp"

namespace ctsmc {

// Gaussian emission of a per-state level b(x) with common noise scale.
struct EmissionModel {
  std::vector<double> levels;  // b(x), indexed like the model states
  double stddev = 1.0;         // d
};

// Ordered observations with per-state likelihood vectors.  Values are
// optional; inference only ever touches the likelihood vectors, so any
// user-supplied likelihoods work in place of the Gaussian model.
// Duplicate time stamps are merged by multiplying their vectors.
class ObservationSet {
 public:
  ObservationSet() = default;

  static ObservationSet from_values(std::vector<double> times, std::vector<double> values,
                                    const EmissionModel &emission, std::size_t n_states);
  static ObservationSet from_likelihoods(std::vector<double> times,
                                         std::vector<std::vector<double>> likelihoods);

  std::size_t size() const { return times_.size(); }
  bool empty() const { return times_.empty(); }
  double time(std::size_t k) const { return times_[k]; }
  const std::vector<double> &times() const { return times_; }
  const std::vector<double> &likelihood(std::size_t k) const { return likelihoods_[k]; }
  bool has_values() const { return !values_.empty(); }
  double value(std::size_t k) const { return values_[k]; }
  std::size_t n_states() const { return likelihoods_.empty() ? 0 : likelihoods_[0].size(); }

 private:
  std::vector<double> times_;
  std::vector<double> values_;
  std::vector<std::vector<double>> likelihoods_;
};

// Renewal-process observation times over the trajectory horizon, noisy
// levels, Gaussian likelihood vectors.  Deterministic per seed.
ObservationSet sample_observations(const Trajectory &traj, const EmissionModel &emission,
                                   const WaitingTimeDistribution &renewal, std::uint64_t seed);

// upsilon(x, t', t): product of L_k(x)/c_k over observations in [t', t).
// The normalizers c_k come out of the forward pass; constructing without
// them leaves upsilon unusable (StateError), matching the requirement
// that a full forward pass precede the backward quantities.
class ScaledLikelihood {
 public:
  explicit ScaledLikelihood(ObservationSet obs);
  ScaledLikelihood(ObservationSet obs, std::vector<double> normalizers);

  bool has_normalizers() const { return !normalizers_.empty(); }
  const std::vector<double> &normalizers() const { return normalizers_; }
  const ObservationSet &observations() const { return obs_; }

  double upsilon(std::size_t x, double t_from, double t_to) const;
  double log_upsilon(std::size_t x, double t_from, double t_to) const;

  // log(L_k(x)/c_k)
  double log_ratio(std::size_t x, std::size_t k) const;

 private:
  ObservationSet obs_;
  std::vector<double> normalizers_;
  // prefix_[x][k] = sum_{j<k} log(L_j(x)/c_j)
  std::vector<std::vector<double>> prefix_;
};

}  // namespace ctsmc

#endif
