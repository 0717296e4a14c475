#ifndef CTSMC_WAITING_TIME_HPP
#define CTSMC_WAITING_TIME_HPP

#include <string>
#include <vector>

namespace ctsmc {

enum class Family { Exponential, Gamma, Weibull };

enum class EvalKind { Density, Survival, Hazard };
enum class IntegralKind { Density, Survival };

// Holding-time law of a single state.  Provides the density f, survival
// function L (often written Lambda), hazard rate, and the definite
// integrals/moments the quadrature rules are built from.  Immutable.
class WaitingTimeDistribution {
 public:
  static WaitingTimeDistribution exponential(double rate);
  static WaitingTimeDistribution gamma(double shape, double rate);
  static WaitingTimeDistribution weibull(double shape, double scale);

  Family family() const { return family_; }
  // Exponential: {rate}; Gamma: {shape, rate}; Weibull: {shape, scale}.
  double param1() const { return p1_; }
  double param2() const { return p2_; }

  double density(double tau) const;
  double log_density(double tau) const;
  double survival(double tau) const;
  double log_survival(double tau) const;
  double cdf(double tau) const { return 1.0 - survival(tau); }
  // Analytic hazard; +inf at tau = 0 for shape < 1 families.
  double hazard(double tau) const;

  double evaluate(double tau, EvalKind kind) const;

  // Integral of f (kind Density) or of the survival function (kind
  // Survival) over [a, b]; b may be +inf.
  double interval_integral(double a, double b, IntegralKind kind) const;

  double mean() const;
  double quantile(double p) const;

  // Moment integrals used by the product-trapezoidal rules.
  double mass(double a, double b) const;                   // int_a^b f
  double partial_mean(double a, double b) const;           // int_a^b s f(s) ds
  double survival_integral(double a, double b) const;      // int_a^b L
  double survival_partial_mean(double a, double b) const;  // int_a^b s L(s) ds

  // Deterministic draw from f.
  double sample(class Rng &rng) const;

  std::string describe() const;

  bool operator==(const WaitingTimeDistribution &o) const = default;

 private:
  WaitingTimeDistribution(Family f, double p1, double p2);

  double second_moment_integral(double a, double b) const;  // int_a^b s^2 f ds

  Family family_;
  double p1_, p2_;
};

// Cumulative moment tables of one distribution on a uniform offset grid,
// built once per state and shared read-only by the solver loops.
class MomentTable {
 public:
  MomentTable() = default;
  MomentTable(const WaitingTimeDistribution &dist, double dt, double horizon);

  // All cumulative from 0; linear interpolation between cached nodes.
  double cum_mass(double s) const;            // F(s)
  double cum_partial_mean(double s) const;    // int_0^s u f(u) du
  double cum_survival(double s) const;        // int_0^s L
  double cum_survival_pm(double s) const;     // int_0^s u L(u) du
  double survival(double s) const;            // L(s)

  double mean() const { return mean_; }
  bool empty() const { return grid_f_.empty(); }

 private:
  double interp(const std::vector<double> &v, double s) const;

  double dt_ = 0.0, inv_dt_ = 0.0, horizon_ = 0.0;
  double mean_ = 0.0;
  // Exact closed forms below the first node, where F has unbounded slope
  // for shape < 1 laws.
  WaitingTimeDistribution dist_ = WaitingTimeDistribution::exponential(1.0);
  std::vector<double> grid_f_, grid_pm_, grid_s_, grid_spm_, grid_surv_;
};

}  // namespace ctsmc

#endif
