#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace acre {

enum class Family { InducedGinibre, PowerLog, Custom };

std::string to_string(Family f);

/// Radial profile g(r) of a potential Q(z) = g(|z|), normalized so that
/// g(1) = 0.
///
/// Every built-in family is a finite sum
///   g(r) = sum_i A_i (r^{p_i} - 1) - 2 B log r,
/// which is evaluated in the variable u = log r where it is numerically
/// stable near the unit circle.
class RadialPotential {
 public:
  /// a r^2 - 2 b log r - a with a = n / rho^2 and b = a - 1/2.
  static RadialPotential induced_ginibre(double n, double rho);
  /// A r^{2 lambda} - 2 B log r + const with A = n / (rho lambda)^2 and
  /// B = lambda A - 1/2.
  static RadialPotential power_log(double n, double rho, double lambda);
  /// sum_k alpha[k-1] r^{2k} - 2 beta log r + const.
  static RadialPotential custom(std::vector<double> alpha, double beta);

  Family family() const { return family_; }
  /// Family parameters: (a, b) for induced Ginibre, (A, lambda, B) for
  /// power-log, (alpha..., beta) for custom.
  std::vector<double> parameters() const;

  double g(double r) const;
  double dg(double r) const;
  double d2g(double r) const;
  double d3g(double r) const;
  /// Quarter Laplacian (g'' + g'/r) / 4.
  double laplacian(double r) const;

  /// g(e^u).
  double g_log(double u) const;
  /// r g'(r) at r = e^u.
  double rgp_log(double u) const;
  /// d/du of r g'(r), equal to 4 r^2 Laplacian.
  double lap_log(double u) const;
  /// Second u-derivative of r g'(r).
  double lap_log_du(double u) const;
  /// Limit of r g'(r) as r -> 0.
  double rgp_at_zero() const { return -2.0 * log_weight_; }

 private:
  struct Term {
    double amp;
    double power;
  };
  Family family_ = Family::Custom;
  std::vector<Term> terms_;
  double log_weight_ = 0.0;  // B
  double slope_at_one_ = 0.0;  // r g'(r) at r = 1
  std::vector<double> params_;
};

RadialPotential make_induced_ginibre(int n, double rho);

struct BoundaryCondition {
  enum class Kind { Free, Interpolated, HardAnnulus, HardDisk };
  Kind kind = Kind::Free;
  double c1 = 1.0;
  double c2 = 1.0;
  double tau1 = 0.0;
  double tau2 = 1.0;
  double tau = 1.0;

  static BoundaryCondition free();
  /// c = infinity (kInf) truncates that side at the droplet edge.
  static BoundaryCondition interpolated(double c1, double c2);
  static BoundaryCondition hard_annulus(double tau1, double tau2);
  static BoundaryCondition hard_disk(double tau);

  /// True for Interpolated(1, 1), which is handled exactly as Free.
  bool is_free() const;
};

std::string to_string(const BoundaryCondition& bc);

struct EnsembleSpec {
  int n = 1;
  double rho = 1.0;
  RadialPotential potential;
  BoundaryCondition bc;
};

/// Checks parameter ranges; throws DomainError.
void check_spec(const EnsembleSpec& spec);

struct Droplet {
  double r0 = 0.0;
  double r1 = 0.0;
  /// sqrt(n / Laplacian(1)).
  double rho_n = 0.0;
};

Droplet droplet_radii(const EnsembleSpec& spec);

/// Solves r g'(r) = 2 tau.
double r_tau(const EnsembleSpec& spec, double tau);
/// Same in the variable u = log r; returns -inf when the root is r = 0.
double u_tau(const RadialPotential& g, double tau);

double obstacle(const EnsembleSpec& spec, double r);

/// Effective potential for the boundary condition; +inf marks zero weight.
double effective_potential(const EnsembleSpec& spec, double r);

struct EquilibriumDensity {
  double density = 0.0;
  double inner_mass = 0.0;
  double outer_mass = 0.0;
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  /// Set for Interpolated with finite c != 1, where the Free answer is
  /// returned.
  bool unsupported_bc = false;
};

EquilibriumDensity equilibrium_density(const EnsembleSpec& spec, double r);
/// Absolutely continuous mass plus boundary masses, by quadrature.
double equilibrium_total_mass(const EnsembleSpec& spec);

struct ValidationReport {
  double subharmonic_min = 0.0;
  bool subharmonic_ok = false;
  double g_at_one = 0.0;
  double slope_error = 0.0;
  bool normalization_ok = false;
  double third_derivative_ratio = 0.0;
  bool third_derivative_finite = false;
  double growth_ratio = 0.0;
  bool growth_ok = false;
  bool rgp_increasing = false;
  double rho_estimated = 0.0;
  double rho_declared = 0.0;
  bool rho_ok = false;
  bool passed() const;
};

ValidationReport validate(const EnsembleSpec& spec);

/// Precomputed view of a spec in the variable u = log r. Immutable and
/// shared by the norm, kernel, extreme and sampling code.
class Ensemble {
 public:
  explicit Ensemble(EnsembleSpec spec);

  const EnsembleSpec& spec() const { return spec_; }
  const RadialPotential& potential() const { return spec_.potential; }
  int n() const { return spec_.n; }
  const Droplet& droplet() const { return droplet_; }
  double u0() const { return u0_; }
  double u1() const { return u1_; }

  /// Support of the weight in u; ends may be infinite.
  double lower() const { return lower_; }
  double upper() const { return upper_; }
  /// Points where the effective potential is not smooth, inside the support.
  const std::vector<double>& kinks() const { return kinks_; }

  /// Q_eff(e^u); +inf outside the support.
  double q_eff(double u) const;
  /// d/du Q_eff(e^u) inside the support.
  double dq_eff(double u) const;
  /// d^2/du^2 Q_eff(e^u) inside the support.
  double d2q_eff(double u) const;

 private:
  EnsembleSpec spec_;
  Droplet droplet_;
  double u0_ = 0.0;
  double u1_ = 0.0;
  double g0_ = 0.0;
  double g1_ = 0.0;
  double lower_ = 0.0;
  double upper_ = 0.0;
  bool free_ = true;
  std::vector<double> kinks_;
};

}  // namespace acre
