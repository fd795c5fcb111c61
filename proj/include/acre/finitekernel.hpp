#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "acre/radialnorms.hpp"

namespace acre {

/// Finite-n kernel together with the zoom point and rescaling factor.
/// Rescaled coordinates are z = gamma (zeta - alpha).
struct KernelContext {
  std::shared_ptr<const NormTable> table;
  double alpha = 1.0;
  double gamma = 1.0;

  const Ensemble& ensemble() const { return *table->ensemble; }
  int n() const { return table->ensemble->n(); }
};

/// Zoom at 1 with gamma = sqrt(n Laplacian(1)); for a hard disk, zoom at r_tau
/// with gamma the inverse of the local spacing.
KernelContext make_kernel_context(std::shared_ptr<const NormTable> table);

/// Positive root of Laplacian(r_tau) s^2 + ((1 - tau) / r_tau) s = 1/n.
double hard_disk_spacing(const EnsembleSpec& spec, double tau);

std::complex<double> kernel_n(const KernelContext& ctx, std::complex<double> zeta,
                              std::complex<double> eta);

double rho1_rescaled(const KernelContext& ctx, std::complex<double> z);

/// det[gamma^-2 K(zeta_i, zeta_j)] for k <= 8 points.
double rhok_rescaled(const KernelContext& ctx, const std::vector<std::complex<double>>& z);

std::vector<double> profile(const KernelContext& ctx, const std::vector<double>& x_grid);

/// Integral of K(zeta, zeta) dA over the plane; equals n.
double total_mass(const KernelContext& ctx);

/// Diagonal K(r, r) at radius r, used for radial intensities.
double kernel_diagonal(const KernelContext& ctx, double r);

}  // namespace acre
