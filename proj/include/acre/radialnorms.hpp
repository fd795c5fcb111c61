#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "acre/potentials.hpp"

namespace acre {

/// Radial density of degree j in the variable u = log r:
///   exp(phi(u)),  phi(u) = log 2 + 2 (j+1) u - n Q_eff(e^u),
/// so that its integral over the support is the squared norm of z^j.
/// phi is concave on the support.
class RadialWeight {
 public:
  RadialWeight(const Ensemble& ensemble, int j);
  /// Reuses a known maximizer.
  RadialWeight(const Ensemble& ensemble, int j, double argmax);

  double phi(double u) const;
  double dphi(double u) const;
  double argmax() const { return argmax_; }
  double phi_max() const { return phi_max_; }
  /// Gaussian width 1/sqrt(-phi'') at the maximizer.
  double width() const { return width_; }

  /// log of the integral of exp(phi) over [a, b] intersected with the support.
  /// The absolute error target is exp(log_abs_tol).
  double log_integral(double a, double b, double log_abs_tol = -1e300) const;
  double log_total() const;

  /// Subinterval of [a, b] outside which the integrand is below
  /// e^-60 times its maximum on [a, b].
  std::pair<double, double> window(double a, double b) const;

 private:
  const Ensemble& e_;
  int j_;
  double argmax_ = 0.0;
  double phi_max_ = 0.0;
  double width_ = 0.0;
};

/// Maximizer of the degree-j radial density.
double radial_argmax(const Ensemble& ensemble, int j);

/// g(r) - 2 (j/n) log r.
double v_nj(const EnsembleSpec& spec, int j, double r);

/// log of the squared norm of z^j, i.e. the integral of 2 r^{2j+1}
/// exp(-n Q_eff(r)) dr.
double log_weighted_norm(const EnsembleSpec& spec, int j);

/// Leading-order asymptotic value of log_weighted_norm. Hard-wall boundary
/// conditions require allow_hard, which switches to the truncated Gaussian
/// integral in place of Phi_c.
double asymptotic_norm(const EnsembleSpec& spec, int j, bool allow_hard = false);

struct NormTable {
  std::shared_ptr<const Ensemble> ensemble;
  std::vector<double> log_norm;
  /// r_{j/n}, clamped into the support of the weight.
  std::vector<double> pivot;
  /// -n v_{n,j}(pivot).
  std::vector<double> log_peak;
  /// Maximizer in u of the degree-j radial density.
  std::vector<double> argmax;

  const EnsembleSpec& spec() const { return ensemble->spec(); }
  std::size_t size() const { return log_norm.size(); }
};

NormTable norm_table(const EnsembleSpec& spec);
NormTable norm_table(std::shared_ptr<const Ensemble> ensemble);

/// Like norm_table, but reads and writes a CSV cache in ACRE_CACHE_DIR when
/// that variable is set.
NormTable norm_table_cached(const EnsembleSpec& spec);

std::string norm_table_csv(const NormTable& table);

}  // namespace acre
