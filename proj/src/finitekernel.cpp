#include "acre/finitekernel.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "acre/errors.hpp"
#include "acre/parallel.hpp"
#include "acre/quadrature.hpp"
#include "acre/special.hpp"

namespace acre {
namespace {

constexpr double kCut = 40.0;

struct Point {
  double u;
  double theta;
  double q;  // n Q_eff / 2
};

Point polar_point(const Ensemble& e, std::complex<double> z) {
  Point p;
  p.u = std::log(std::abs(z));
  p.theta = std::arg(z);
  p.q = 0.5 * e.n() * e.q_eff(p.u);
  return p;
}

// Sum of exp(j s - log_norm[j]) e^{i j t} - q over degrees, with the dominant
// term factored out.
std::complex<double> degree_sum(const NormTable& t, double s, double dtheta, double q) {
  const int n = static_cast<int>(t.size());
  if (s == -kInf) return std::exp(-q - t.log_norm[0]);
  double m = -kInf;
  for (int j = 0; j < n; ++j) m = std::max(m, j * s - t.log_norm[j]);
  double re = 0.0;
  double im = 0.0;
  for (int j = 0; j < n; ++j) {
    const double l = j * s - t.log_norm[j] - m;
    if (l < -kCut) continue;
    const double mag = std::exp(l);
    if (dtheta == 0.0) {
      re += mag;
    } else {
      re += mag * std::cos(j * dtheta);
      im += mag * std::sin(j * dtheta);
    }
  }
  const double scale = std::exp(m - q);
  return {re * scale, im * scale};
}

}  // namespace

double hard_disk_spacing(const EnsembleSpec& spec, double tau) {
  const double r = r_tau(spec, tau);
  const double a = spec.potential.laplacian(r);
  const double b = (1.0 - tau) / r;
  const double c = 1.0 / spec.n;
  return 2.0 * c / (b + std::sqrt(b * b + 4.0 * a * c));
}

KernelContext make_kernel_context(std::shared_ptr<const NormTable> table) {
  KernelContext ctx;
  ctx.table = std::move(table);
  const EnsembleSpec& spec = ctx.table->spec();
  if (spec.bc.kind == BoundaryCondition::Kind::HardDisk) {
    ctx.alpha = r_tau(spec, spec.bc.tau);
    ctx.gamma = 1.0 / hard_disk_spacing(spec, spec.bc.tau);
  } else {
    ctx.alpha = 1.0;
    ctx.gamma = std::sqrt(spec.n * spec.potential.laplacian(1.0));
  }
  return ctx;
}

std::complex<double> kernel_n(const KernelContext& ctx, std::complex<double> zeta,
                              std::complex<double> eta) {
  const Ensemble& e = ctx.ensemble();
  const Point a = polar_point(e, zeta);
  const Point b = polar_point(e, eta);
  if (!std::isfinite(a.q) || !std::isfinite(b.q)) return 0.0;
  const double s = a.u + b.u;
  return degree_sum(*ctx.table, s, a.theta - b.theta, a.q + b.q);
}

double kernel_diagonal(const KernelContext& ctx, double r) {
  const Ensemble& e = ctx.ensemble();
  const double u = std::log(r);
  const double q = e.n() * e.q_eff(u);
  if (!std::isfinite(q)) return 0.0;
  return degree_sum(*ctx.table, 2.0 * u, 0.0, q).real();
}

double rho1_rescaled(const KernelContext& ctx, std::complex<double> z) {
  const std::complex<double> zeta = ctx.alpha + z / ctx.gamma;
  return kernel_diagonal(ctx, std::abs(zeta)) / (ctx.gamma * ctx.gamma);
}

double rhok_rescaled(const KernelContext& ctx, const std::vector<std::complex<double>>& z) {
  const int k = static_cast<int>(z.size());
  if (k == 0) return 1.0;
  if (k > ctx.n()) throw DomainError("k-point function needs k <= n");
  if (k > 8) throw DomainError("k-point function is limited to k <= 8");
  Eigen::MatrixXcd m(k, k);
  const double g2 = ctx.gamma * ctx.gamma;
  for (int i = 0; i < k; ++i) {
    const std::complex<double> zi = ctx.alpha + z[i] / ctx.gamma;
    for (int j = 0; j < k; ++j) {
      const std::complex<double> zj = ctx.alpha + z[j] / ctx.gamma;
      m(i, j) = kernel_n(ctx, zi, zj) / g2;
    }
  }
  return m.partialPivLu().determinant().real();
}

std::vector<double> profile(const KernelContext& ctx, const std::vector<double>& x_grid) {
  return parallel_map<double>(x_grid.size(),
                              [&](std::size_t i) { return rho1_rescaled(ctx, {x_grid[i], 0.0}); });
}

double total_mass(const KernelContext& ctx) {
  const Ensemble& e = ctx.ensemble();
  const NormTable& t = *ctx.table;
  const int n = e.n();
  const RadialWeight first(e, 0, t.argmax[0]);
  const RadialWeight last(e, n - 1, t.argmax[n - 1]);
  const double lo = first.window(e.lower(), e.upper()).first;
  const double hi = last.window(e.lower(), e.upper()).second;
  std::vector<double> pts{lo};
  for (double k : e.kinks()) {
    if (k > lo && k < hi) pts.push_back(k);
  }
  pts.push_back(hi);
  // K(r, r) r^2 du = K(r, r) r dr; dA = 2 r dr after the angular integral.
  auto f = [&](double u) {
    const double r = std::exp(u);
    return 2.0 * r * r * kernel_diagonal(ctx, r);
  };
  QuadOptions opt;
  opt.rel_tol = 1e-10;
  return integrate(f, std::span<const double>(pts), opt).value;
}

}  // namespace acre
