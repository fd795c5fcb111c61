#pragma once

#include <vector>

#include "acre/radialnorms.hpp"

namespace acre {

struct ScalingConstants {
  enum class Regime { InterpolatedFinite, SoftHard };
  Regime regime = Regime::InterpolatedFinite;
  int n = 0;
  double rho = 0.0;
  double r0 = 0.0;
  double r1 = 0.0;
  double c1 = 1.0;
  double c2 = 1.0;
  // Interpolated, finite c.
  double a_n = 0.0;
  double b_n = 0.0;
  double a_n_prime = 0.0;
  double b_n_prime = 0.0;
  double c_n = 0.0;
  double c_n_prime = 0.0;
  // Soft/hard.
  double c = 0.0;
  double c_prime = 0.0;

  /// Radius r with P(omega_n <= x) = P(max modulus <= r).
  double max_radius(double x) const;
  /// Radius r with P(u_n <= x) = P(min modulus >= r).
  double min_radius(double x) const;
  /// Limit law at x: Gumbel or exponential.
  double reference(double x) const;
};

ScalingConstants scaling_constants(const EnsembleSpec& spec);

/// Per-degree probability I_j that the degree-j radius lies beyond r
/// (upper = true) or below r (upper = false), together with log(1 - I_j).
struct TailMass {
  double mass = 0.0;
  double log_complement = 0.0;
};
TailMass degree_tail(const NormTable& table, int j, double r, bool upper);

/// P(max modulus <= r).
double gap_cdf_max(const NormTable& table, double r);
/// P(min modulus >= r).
double gap_cdf_min(const NormTable& table, double r);

double omega_cdf(const NormTable& table, const ScalingConstants& sc, double x);
double u_cdf(const NormTable& table, const ScalingConstants& sc, double x);

/// Sum over degrees of the tail masses beyond r1 + eps_n(x).
double En(const NormTable& table, const ScalingConstants& sc, double x);

double gumbel_cdf(double x);
double exponential_cdf(double x);

struct GapCurve {
  std::vector<double> x;
  std::vector<double> p_max;
  std::vector<double> p_min;
  std::vector<double> reference;

  double sup_distance_max() const;
  double sup_distance_min() const;
};

GapCurve gap_curve(const NormTable& table, const ScalingConstants& sc,
                   const std::vector<double>& x);

}  // namespace acre
