#include "ctsmc/observation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ctsmc/errors.hpp"
#include "ctsmc/rng.hpp"

namespace ctsmc {

namespace {

void check_sorted_merge(std::vector<double> &times, std::vector<double> *values,
                        std::vector<std::vector<double>> &liks) {
  for (double t : times)
    if (!std::isfinite(t) || t < 0.0) throw ValidationError("observation times must be finite and >= 0");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (times[k] < times[k - 1]) throw ValidationError("observation times must be non-decreasing");

  // Merge duplicates by multiplying likelihood vectors.
  std::size_t w = 0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (w > 0 && times[k] == times[w - 1]) {
      for (std::size_t x = 0; x < liks[w - 1].size(); ++x) liks[w - 1][x] *= liks[k][x];
      continue;  // merged observations keep the first value
    }
    times[w] = times[k];
    if (values && !values->empty()) (*values)[w] = (*values)[k];
    liks[w] = std::move(liks[k]);
    ++w;
  }
  times.resize(w);
  if (values && !values->empty()) values->resize(w);
  liks.resize(w);

  for (const auto &l : liks) {
    bool any_pos = false;
    for (double v : l) {
      if (!(v >= 0.0) || !std::isfinite(v)) throw ValidationError("likelihood entries must be finite and >= 0");
      any_pos = any_pos || v > 0.0;
    }
    if (!any_pos) throw ValidationError("likelihood vector with no positive entry");
  }
}

}  // namespace

ObservationSet ObservationSet::from_values(std::vector<double> times, std::vector<double> values,
                                           const EmissionModel &emission, std::size_t n_states) {
  if (times.size() != values.size()) throw ValidationError("times/values size mismatch");
  if (emission.levels.size() != n_states) throw ValidationError("emission level count mismatch");
  if (!(emission.stddev > 0.0)) throw ValidationError("emission stddev must be > 0");

  ObservationSet obs;
  obs.times_ = std::move(times);
  obs.values_ = std::move(values);
  obs.likelihoods_.resize(obs.times_.size());
  const double inv2d2 = 1.0 / (2.0 * emission.stddev * emission.stddev);
  const double norm = 1.0 / (emission.stddev * std::sqrt(2.0 * 3.14159265358979323846));
  for (std::size_t k = 0; k < obs.times_.size(); ++k) {
    auto &lk = obs.likelihoods_[k];
    lk.resize(n_states);
    for (std::size_t x = 0; x < n_states; ++x) {
      const double r = obs.values_[k] - emission.levels[x];
      lk[x] = norm * std::exp(-r * r * inv2d2);
    }
  }
  check_sorted_merge(obs.times_, &obs.values_, obs.likelihoods_);
  return obs;
}

ObservationSet ObservationSet::from_likelihoods(std::vector<double> times,
                                                std::vector<std::vector<double>> likelihoods) {
  if (times.size() != likelihoods.size()) throw ValidationError("times/likelihoods size mismatch");
  for (std::size_t k = 1; k < likelihoods.size(); ++k)
    if (likelihoods[k].size() != likelihoods[0].size())
      throw ValidationError("ragged likelihood vectors");
  ObservationSet obs;
  obs.times_ = std::move(times);
  obs.likelihoods_ = std::move(likelihoods);
  check_sorted_merge(obs.times_, nullptr, obs.likelihoods_);
  return obs;
}

ObservationSet sample_observations(const Trajectory &traj, const EmissionModel &emission,
                                   const WaitingTimeDistribution &renewal, std::uint64_t seed) {
  if (traj.states.empty()) throw DomainError("empty trajectory");
  Rng rng(seed);
  std::vector<double> times, values;
  double t = 0.0;
  for (;;) {
    t += renewal.sample(rng);
    if (t >= traj.horizon) break;
    times.push_back(t);
    const std::size_t x = state_at(traj, t);
    values.push_back(emission.levels[x] + emission.stddev * rng.normal());
  }
  return ObservationSet::from_values(std::move(times), std::move(values), emission,
                                     emission.levels.size());
}

ScaledLikelihood::ScaledLikelihood(ObservationSet obs) : obs_(std::move(obs)) {}

ScaledLikelihood::ScaledLikelihood(ObservationSet obs, std::vector<double> normalizers)
    : obs_(std::move(obs)), normalizers_(std::move(normalizers)) {
  if (normalizers_.size() != obs_.size())
    throw ValidationError("normalizer count must match observation count");
  for (double c : normalizers_)
    if (!(c > 0.0) || !std::isfinite(c)) throw ValidationError("normalizers must be finite and > 0");

  const std::size_t n = obs_.n_states();
  prefix_.assign(n, std::vector<double>(obs_.size() + 1, 0.0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < obs_.size(); ++k)
      prefix_[x][k + 1] = prefix_[x][k] + std::log(obs_.likelihood(k)[x]) - std::log(normalizers_[k]);
}

double ScaledLikelihood::log_ratio(std::size_t x, std::size_t k) const {
  if (!has_normalizers())
    throw StateError("scaled likelihood has no normalizers; run the forward pass first");
  return prefix_[x][k + 1] - prefix_[x][k];
}

double ScaledLikelihood::log_upsilon(std::size_t x, double t_from, double t_to) const {
  if (!has_normalizers())
    throw StateError("scaled likelihood has no normalizers; run the forward pass first");
  if (t_from > t_to) throw DomainError("upsilon requires t_from <= t_to");
  if (x >= prefix_.size()) throw DomainError("state index out of range");
  const auto &ts = obs_.times();
  const std::size_t lo = std::lower_bound(ts.begin(), ts.end(), t_from) - ts.begin();
  const std::size_t hi = std::lower_bound(ts.begin(), ts.end(), t_to) - ts.begin();
  return prefix_[x][hi] - prefix_[x][lo];
}

double ScaledLikelihood::upsilon(std::size_t x, double t_from, double t_to) const {
  return std::exp(log_upsilon(x, t_from, t_to));
}

}  // namespace ctsmc
