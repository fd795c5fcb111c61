#pragma once

#include <complex>
#include <string>
#include <vector>

#include "acre/limits.hpp"

namespace acre {

struct WardOptions {
  double h = 0.02;
  /// Cutoff on |w - z| in the Cauchy transform.
  double L = 8.0;
  /// Gauss-Legendre points per panel.
  int order = 16;
  /// Keep the (1 - c) indicator terms of the interpolated equation.
  bool indicator_terms = true;
};

/// C(z) = R(z)^-1 int |K(z,w)|^2 / (z - w) dA(w), with the vertical
/// direction integrated in closed form. Depends on Re z only.
std::complex<double> cauchy_transform(const LimitProfile& p, std::complex<double> z,
                                      const WardOptions& opt = {});

/// Same transform by direct polar quadrature centred at z; slow, used as a
/// cross-check.
std::complex<double> cauchy_transform_polar(const LimitProfile& p, std::complex<double> z,
                                            double L = 32.0, int angles = 256);

struct WardPoint {
  double x = 0.0;
  double y = 0.0;
  std::complex<double> dbar_c;
  double rhs = 0.0;
  std::complex<double> residual;
};

struct WardReport {
  std::string variant;
  WardOptions options;
  std::vector<WardPoint> points;
  /// Grid points dropped for lying within 3h of a wall or indicator line.
  std::vector<std::pair<double, double>> excluded;
  double max_residual = 0.0;
};

/// Right-hand side of Ward's equation at x, without the dbar C term.
double ward_rhs(const LimitProfile& p, double x, double h, bool indicator_terms = true);

WardReport ward_residual(const LimitProfile& p, const std::vector<double>& xs,
                         const std::vector<double>& ys, const WardOptions& opt = {});

}  // namespace acre
