#include "ctsmc/waiting_time.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include "ctsmc/errors.hpp"
#include "ctsmc/rng.hpp"

namespace ctsmc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double gamma_p(double a, double x) { return boost::math::gamma_p(a, x); }
double gamma_q(double a, double x) { return boost::math::gamma_q(a, x); }

// log Q(a, x) with an asymptotic continuation once Q underflows.
double log_gamma_q(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double q = gamma_q(a, x);
  if (q > 1e-290) return std::log(q);
  // Q(a,x) ~ x^{a-1} e^{-x} / Gamma(a) * sum_j prod_{i<j} (a-1-i)/x
  double term = 1.0, sum = 1.0;
  for (int j = 1; j < 30; ++j) {
    term *= (a - j) / x;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    sum += term;
  }
  return (a - 1.0) * std::log(x) - x - boost::math::lgamma(a) + std::log(std::max(sum, 1e-300));
}

void require_positive(double v, const char *name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw ValidationError(std::string("waiting time parameter '") + name +
                          "' must be finite and > 0");
}

void require_time(double tau) {
  if (std::isnan(tau)) throw DomainError("tau is NaN");
  if (tau < 0.0) throw DomainError("tau must be >= 0");
}

}  // namespace

WaitingTimeDistribution::WaitingTimeDistribution(Family f, double p1, double p2)
    : family_(f), p1_(p1), p2_(p2) {}

WaitingTimeDistribution WaitingTimeDistribution::exponential(double rate) {
  require_positive(rate, "rate");
  return {Family::Exponential, rate, 0.0};
}

WaitingTimeDistribution WaitingTimeDistribution::gamma(double shape, double rate) {
  require_positive(shape, "shape");
  require_positive(rate, "rate");
  return {Family::Gamma, shape, rate};
}

WaitingTimeDistribution WaitingTimeDistribution::weibull(double shape, double scale) {
  require_positive(shape, "shape");
  require_positive(scale, "scale");
  return {Family::Weibull, shape, scale};
}

double WaitingTimeDistribution::density(double tau) const {
  require_time(tau);
  switch (family_) {
    case Family::Exponential:
      return p1_ * std::exp(-p1_ * tau);
    case Family::Gamma: {
      if (tau == 0.0) {
        if (p1_ > 1.0) return 0.0;
        if (p1_ == 1.0) return p2_;
        return kInf;
      }
      return std::exp(log_density(tau));
    }
    case Family::Weibull: {
      if (tau == 0.0) {
        if (p1_ > 1.0) return 0.0;
        if (p1_ == 1.0) return 1.0 / p2_;
        return kInf;
      }
      return std::exp(log_density(tau));
    }
  }
  return 0.0;
}

double WaitingTimeDistribution::log_density(double tau) const {
  require_time(tau);
  switch (family_) {
    case Family::Exponential:
      return std::log(p1_) - p1_ * tau;
    case Family::Gamma:
      if (tau == 0.0) return p1_ == 1.0 ? std::log(p2_) : (p1_ > 1.0 ? -kInf : kInf);
      return p1_ * std::log(p2_) + (p1_ - 1.0) * std::log(tau) - p2_ * tau -
             boost::math::lgamma(p1_);
    case Family::Weibull: {
      if (tau == 0.0) return p1_ == 1.0 ? -std::log(p2_) : (p1_ > 1.0 ? -kInf : kInf);
      const double z = tau / p2_;
      return std::log(p1_ / p2_) + (p1_ - 1.0) * std::log(z) - std::pow(z, p1_);
    }
  }
  return -kInf;
}

double WaitingTimeDistribution::survival(double tau) const {
  require_time(tau);
  switch (family_) {
    case Family::Exponential:
      return std::exp(-p1_ * tau);
    case Family::Gamma:
      return gamma_q(p1_, p2_ * tau);
    case Family::Weibull:
      return std::exp(-std::pow(tau / p2_, p1_));
  }
  return 0.0;
}

double WaitingTimeDistribution::log_survival(double tau) const {
  require_time(tau);
  switch (family_) {
    case Family::Exponential:
      return -p1_ * tau;
    case Family::Gamma:
      return log_gamma_q(p1_, p2_ * tau);
    case Family::Weibull:
      return -std::pow(tau / p2_, p1_);
  }
  return -kInf;
}

double WaitingTimeDistribution::hazard(double tau) const {
  require_time(tau);
  switch (family_) {
    case Family::Exponential:
      return p1_;
    case Family::Weibull: {
      if (tau == 0.0) {
        if (p1_ < 1.0) return kInf;
        if (p1_ == 1.0) return 1.0 / p2_;
        return 0.0;
      }
      return (p1_ / p2_) * std::pow(tau / p2_, p1_ - 1.0);
    }
    case Family::Gamma: {
      if (tau == 0.0) {
        if (p1_ < 1.0) return kInf;
        if (p1_ == 1.0) return p2_;
        return 0.0;
      }
      // Stable log-domain quotient; log_survival switches to the
      // asymptotic tail once Q underflows, so this never hits 0/0.
      return std::exp(log_density(tau) - log_survival(tau));
    }
  }
  return 0.0;
}

double WaitingTimeDistribution::evaluate(double tau, EvalKind kind) const {
  switch (kind) {
    case EvalKind::Density:
      return density(tau);
    case EvalKind::Survival:
      return survival(tau);
    case EvalKind::Hazard:
      return hazard(tau);
  }
  return 0.0;
}

double WaitingTimeDistribution::mass(double a, double b) const {
  if (a > b) throw DomainError("interval integral requires a <= b");
  require_time(a);
  if (b == kInf) return survival(a);
  switch (family_) {
    case Family::Exponential:
      return std::exp(-p1_ * a) - std::exp(-p1_ * b);
    case Family::Gamma:
      return gamma_q(p1_, p2_ * a) - gamma_q(p1_, p2_ * b);
    case Family::Weibull:
      return std::exp(-std::pow(a / p2_, p1_)) - std::exp(-std::pow(b / p2_, p1_));
  }
  return 0.0;
}

double WaitingTimeDistribution::partial_mean(double a, double b) const {
  if (a > b) throw DomainError("interval integral requires a <= b");
  require_time(a);
  switch (family_) {
    case Family::Exponential: {
      auto pm = [&](double t) {
        if (t == kInf) return 1.0 / p1_;
        const double z = p1_ * t;
        return (1.0 - std::exp(-z) * (1.0 + z)) / p1_;
      };
      return pm(b) - pm(a);
    }
    case Family::Gamma: {
      const double m = p1_ / p2_;
      const double pb = (b == kInf) ? 1.0 : gamma_p(p1_ + 1.0, p2_ * b);
      return m * (pb - gamma_p(p1_ + 1.0, p2_ * a));
    }
    case Family::Weibull: {
      const double m = mean();
      const double ub = (b == kInf) ? 1.0 : gamma_p(1.0 + 1.0 / p1_, std::pow(b / p2_, p1_));
      return m * (ub - gamma_p(1.0 + 1.0 / p1_, std::pow(a / p2_, p1_)));
    }
  }
  return 0.0;
}

double WaitingTimeDistribution::survival_integral(double a, double b) const {
  if (a > b) throw DomainError("interval integral requires a <= b");
  require_time(a);
  auto cum = [&](double t) -> double {  // int_0^t L(s) ds
    if (t == kInf) return mean();
    switch (family_) {
      case Family::Exponential:
        return -std::expm1(-p1_ * t) / p1_;
      case Family::Gamma:
        return t * gamma_q(p1_, p2_ * t) + (p1_ / p2_) * gamma_p(p1_ + 1.0, p2_ * t);
      case Family::Weibull:
        return mean() * gamma_p(1.0 / p1_, std::pow(t / p2_, p1_));
    }
    return 0.0;
  };
  return cum(b) - cum(a);
}

double WaitingTimeDistribution::second_moment_integral(double a, double b) const {
  switch (family_) {
    case Family::Exponential: {
      auto cum = [&](double t) {
        if (t == kInf) return 2.0 / (p1_ * p1_);
        return (2.0 / (p1_ * p1_)) * gamma_p(3.0, p1_ * t);
      };
      return cum(b) - cum(a);
    }
    case Family::Gamma: {
      const double m2 = p1_ * (p1_ + 1.0) / (p2_ * p2_);
      const double pb = (b == kInf) ? 1.0 : gamma_p(p1_ + 2.0, p2_ * b);
      return m2 * (pb - gamma_p(p1_ + 2.0, p2_ * a));
    }
    case Family::Weibull: {
      const double m2 = p2_ * p2_ * boost::math::tgamma(1.0 + 2.0 / p1_);
      const double ub = (b == kInf) ? 1.0 : gamma_p(1.0 + 2.0 / p1_, std::pow(b / p2_, p1_));
      return m2 * (ub - gamma_p(1.0 + 2.0 / p1_, std::pow(a / p2_, p1_)));
    }
  }
  return 0.0;
}

double WaitingTimeDistribution::survival_partial_mean(double a, double b) const {
  if (a > b) throw DomainError("interval integral requires a <= b");
  require_time(a);
  // By parts: int_a^b s L ds = [s^2 L / 2]_a^b + 1/2 int_a^b s^2 f ds.
  const double sb = (b == kInf) ? 0.0 : b * b * survival(b);
  return 0.5 * (sb - a * a * survival(a)) + 0.5 * second_moment_integral(a, b);
}

double WaitingTimeDistribution::interval_integral(double a, double b, IntegralKind kind) const {
  if (std::isnan(a) || std::isnan(b)) throw DomainError("interval bounds are NaN");
  if (a < 0.0 || a > b) throw DomainError("interval integral requires 0 <= a <= b");
  if (a == b) return 0.0;
  return kind == IntegralKind::Density ? mass(a, b) : survival_integral(a, b);
}

double WaitingTimeDistribution::mean() const {
  switch (family_) {
    case Family::Exponential:
      return 1.0 / p1_;
    case Family::Gamma:
      return p1_ / p2_;
    case Family::Weibull:
      return p2_ * boost::math::tgamma(1.0 + 1.0 / p1_);
  }
  return 0.0;
}

double WaitingTimeDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p < 1.0)) throw DomainError("quantile requires p in [0, 1)");
  switch (family_) {
    case Family::Exponential:
      return -std::log1p(-p) / p1_;
    case Family::Gamma:
      return boost::math::gamma_p_inv(p1_, p) / p2_;
    case Family::Weibull:
      return p2_ * std::pow(-std::log1p(-p), 1.0 / p1_);
  }
  return 0.0;
}

double WaitingTimeDistribution::sample(Rng &rng) const {
  switch (family_) {
    case Family::Exponential:
      return rng.exponential(p1_);
    case Family::Gamma:
      return rng.gamma(p1_, p2_);
    case Family::Weibull:
      return rng.weibull(p1_, p2_);
  }
  return 0.0;
}

std::string WaitingTimeDistribution::describe() const {
  std::ostringstream os;
  switch (family_) {
    case Family::Exponential:
      os << "exponential(rate=" << p1_ << ")";
      break;
    case Family::Gamma:
      os << "gamma(shape=" << p1_ << ", rate=" << p2_ << ")";
      break;
    case Family::Weibull:
      os << "weibull(shape=" << p1_ << ", scale=" << p2_ << ")";
      break;
  }
  return os.str();
}

MomentTable::MomentTable(const WaitingTimeDistribution &dist, double dt, double horizon)
    : dt_(dt), inv_dt_(1.0 / dt), horizon_(horizon), dist_(dist) {
  if (!(dt > 0.0) || !(horizon > 0.0)) throw ValidationError("moment table: dt, horizon > 0");
  const std::size_t n = static_cast<std::size_t>(std::ceil(horizon / dt)) + 2;
  grid_f_.resize(n);
  grid_pm_.resize(n);
  grid_s_.resize(n);
  grid_spm_.resize(n);
  grid_surv_.resize(n);
  mean_ = dist.mean();
  for (std::size_t i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) * dt;
    grid_f_[i] = dist.cdf(s);
    grid_pm_[i] = dist.partial_mean(0.0, s);
    grid_s_[i] = dist.survival_integral(0.0, s);
    grid_spm_[i] = dist.survival_partial_mean(0.0, s);
    grid_surv_[i] = dist.survival(s);
  }
}

double MomentTable::interp(const std::vector<double> &v, double s) const {
  if (s <= 0.0) return 0.0;
  double pos = s * inv_dt_;
  const auto n = v.size();
  std::size_t i = static_cast<std::size_t>(pos);
  if (i + 1 >= n) return v[n - 1];
  const double w = pos - static_cast<double>(i);
  return v[i] + w * (v[i + 1] - v[i]);
}

double MomentTable::cum_mass(double s) const {
  if (s <= 0.0) return 0.0;
  if (s < dt_) return dist_.cdf(s);  // F can have unbounded slope at 0
  return interp(grid_f_, s);
}

double MomentTable::cum_partial_mean(double s) const { return interp(grid_pm_, s); }
double MomentTable::cum_survival(double s) const { return interp(grid_s_, s); }
double MomentTable::cum_survival_pm(double s) const { return interp(grid_spm_, s); }

double MomentTable::survival(double s) const {
  if (s <= 0.0) return 1.0;
  double pos = s * inv_dt_;
  const auto n = grid_surv_.size();
  std::size_t i = static_cast<std::size_t>(pos);
  if (i + 1 >= n) return dist_.survival(s);
  const double w = pos - static_cast<double>(i);
  return grid_surv_[i] + w * (grid_surv_[i + 1] - grid_surv_[i]);
}

}  // namespace ctsmc
