#include "acre/special.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

namespace acre {
namespace {

// Asymptotic series, used where erfc underflows.
double erfcx_asymptotic(double x) {
  const double inv = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 40; ++k) {
    term *= -(2.0 * k - 1.0) * inv;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum / (x * kSqrtPi);
}

double erfcx_nonneg(double x) {
  if (x >= 25.0) return erfcx_asymptotic(x);
  const double hi = x * x;
  const double lo = std::fma(x, x, -hi);
  return std::exp(hi) * (1.0 + lo) * std::erfc(x);
}

// exp(-t^2/2 + m) over a short interval by 20-point Gauss-Legendre.
double short_gauss(double a, double b, double m) {
  using GL = boost::math::quadrature::gauss<double, 20>;
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double s = 0.0;
  const auto& x = GL::abscissa();
  const auto& w = GL::weights();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t1 = c + h * x[i];
    const double t2 = c - h * x[i];
    s += w[i] * (std::exp(m - 0.5 * t1 * t1) + std::exp(m - 0.5 * t2 * t2));
  }
  return s * h;
}

}  // namespace

double erfcx(double x) {
  if (std::isnan(x)) return x;
  if (x >= 0.0) return erfcx_nonneg(x);
  if (x < -26.7) return kInf;
  const double hi = x * x;
  const double lo = std::fma(x, x, -hi);
  return 2.0 * std::exp(hi) * (1.0 + lo) - erfcx_nonneg(-x);
}

double log_gauss_interval(double a, double b) {
  if (!(a < b)) return -kInf;
  if (b <= 0.0) return log_gauss_interval(-b, -a);
  if (a >= 0.0) {
    const double width = b - a;
    if (std::isfinite(b) && width * std::max(b, 1.0) <= 1.0) {
      const double m = 0.5 * a * a;
      return std::log(short_gauss(a, b, m)) - m;
    }
    const double ea = erfcx(a / kSqrt2);
    double eb = 0.0;
    if (std::isfinite(b)) {
      eb = erfcx(b / kSqrt2) * std::exp(-0.5 * width * (a + b));
    }
    return std::log(kSqrtHalfPi * (ea - eb)) - 0.5 * a * a;
  }
  // a < 0 < b: erf values have opposite signs, no cancellation.
  if (std::max(-a, b) > 5.0) {
    const double tail_b = std::exp(log_gauss_interval(b, kInf));
    const double tail_a = std::exp(log_gauss_interval(-a, kInf));
    return std::log(kSqrt2Pi - tail_a - tail_b);
  }
  return std::log(kSqrtHalfPi * (std::erf(b / kSqrt2) - std::erf(a / kSqrt2)));
}

double gauss_interval(double a, double b) {
  return std::exp(log_gauss_interval(a, b));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double log_add_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -kInf) return a;
  return a + std::log1p(std::exp(b - a));
}

}  // namespace acre
