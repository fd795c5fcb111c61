#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace acre {

/// A limiting 1-point function of the rescaled ensemble, as a function of
/// x = Re z (all variants are invariant under vertical translation).
struct LimitProfile {
  enum class Variant {
    Free,
    SoftHard,
    Interpolated,
    HardAnnulus,
    HardDiskOuter,
    HardDiskRescaled,
    GinibreSoftHard,
    GinibreHard
  };

  Variant variant = Variant::Free;
  double rho = 1.0;
  double c1 = 1.0;
  double c2 = 1.0;
  double tau1 = 0.0;
  double tau2 = 1.0;
  double tau = 1.0;

  static LimitProfile free(double rho);
  static LimitProfile soft_hard(double rho);
  static LimitProfile interpolated(double rho, double c1, double c2);
  static LimitProfile hard_annulus(double rho, double tau1, double tau2);
  static LimitProfile hard_disk_outer(double rho, double tau);
  static LimitProfile hard_disk_rescaled(double rho, double tau);
  static LimitProfile ginibre_soft_hard();
  static LimitProfile ginibre_hard();

  std::string name() const;
  /// Closed support [lo, hi] in x; ends may be infinite.
  std::pair<double, double> support() const;
  /// Points where the profile or its first derivative jumps.
  std::vector<double> walls() const;
};

/// (1-c1)/2 min(t + rho/2, 0)^2 + (1-c2)/2 max(t - rho/2, 0)^2; a side with
/// c = inf contributes -inf outside the droplet.
double I_c(double t, double c1, double c2, double rho);

/// Integral of exp(-(t-xi)^2/2 + I_c(t)) over the real line, in closed form.
double Phi_c(double xi, double c1, double c2, double rho);
double log_Phi_c(double xi, double c1, double c2, double rho);

/// Integral over [-rho/2, rho/2] of exp(-(u-xi)^2/2) / Phi_c(xi).
double F_c(double u, double c1, double c2, double rho);
double log_F_c(double u, double c1, double c2, double rho);

double R_limit(const LimitProfile& p, double x);

/// Integral of R_limit over the real line.
double limit_mass(const LimitProfile& p);

/// (sqrt((1-tau)^2/4 + 1/rho^2) + (1-tau)/2)^{-1}.
double c_of_tau(double tau, double rho);

std::complex<double> K_limit(const LimitProfile& p, std::complex<double> z,
                             std::complex<double> w);

/// Largest deviation of the normalized kernel modulus from
/// |sin(u-v)| / (pi |u-v|) over pairs (u, v), for the hard annulus profile
/// at small rho in the circular scaling z -> z / (rho/2).
double sine_limit_error(double rho, double tau1, double tau2,
                        const std::vector<std::pair<double, double>>& points);

/// Circular-scaling line kernel |K(xc + iu/a, xc + iv/a)| (tau2 - tau1) / pi with
/// a = rho/2 and xc the strip centre; tends to |sin(u-v)| / (pi |u-v|).
double sine_scaled_modulus(double rho, double tau1, double tau2, double u, double v);

/// Structure of the kernel K = G(z,w) B(x) B(x') L(z + conj(w)) with
/// |G|^2 = exp(-|z-w|^2), shared by every variant.
///
/// Gaussian form: L(s) = int exp(-(s-xi)^2/2) mu(xi) dxi over [xi_lo, xi_hi].
/// Exponential form: L(s) = int xi exp(s xi) dxi over [0, 1], with G = 1.
/// The profile is scale^2 times the base profile evaluated at scale * x.
struct KernelForm {
  bool exponential = false;
  double xi_lo = 0.0;
  double xi_hi = 0.0;
  double x_lo = 0.0;
  double x_hi = 0.0;
  double scale = 1.0;
  LimitProfile base;

  double log_mu(double xi) const;
  /// log B(x)^2 for x inside [x_lo, x_hi].
  double log_amp2(double x) const;
  bool inside(double x) const { return x >= x_lo && x <= x_hi; }
};

KernelForm kernel_form(const LimitProfile& p);

}  // namespace acre
