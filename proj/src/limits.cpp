#include "acre/limits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "acre/errors.hpp"
#include "acre/io.hpp"
#include "acre/quadrature.hpp"
#include "acre/special.hpp"

namespace acre {
namespace {

using cd = std::complex<double>;

// log of the integral of exp(psi) over [lo, hi], shifted by a grid maximum.
template <class Psi>
double log_integrate_exp(Psi&& psi, double lo, double hi, double rel_tol = 1e-13) {
  if (!(lo < hi)) return -kInf;
  constexpr int kGrid = 48;
  double m = -kInf;
  double at = lo;
  for (int i = 0; i <= kGrid; ++i) {
    const double t = lo + (hi - lo) * i / kGrid;
    const double v = psi(t);
    if (v > m) {
      m = v;
      at = t;
    }
  }
  if (m == -kInf) return -kInf;
  auto f = [&](double t) { return std::exp(psi(t) - m); };
  QuadOptions opt;
  opt.rel_tol = rel_tol;
  opt.abs_tol = 1e-300;
  std::vector<double> pts{lo};
  if (at > lo && at < hi) pts.push_back(at);
  pts.push_back(hi);
  const auto res = integrate(f, std::span<const double>(pts), opt);
  return m + std::log(res.value);
}

double log_D_minus(double xi) { return log_gauss_interval(-kInf, -xi); }

double ginibre_hard(double y) {
  if (std::abs(y) <= 1.0) {
    // sum_k y^k / (k! (k + 2))
    double term = 1.0;
    double s = 0.5;
    for (int k = 1; k < 30; ++k) {
      term *= y / k;
      s += term / (k + 2);
    }
    return s;
  }
  return (std::exp(y) * (y - 1.0) + 1.0) / (y * y);
}

cd ginibre_hard(cd s) {
  if (std::abs(s) <= 1.0) {
    cd term = 1.0;
    cd sum = 0.5;
    for (int k = 1; k < 30; ++k) {
      term *= s / static_cast<double>(k);
      sum += term / static_cast<double>(k + 2);
    }
    return sum;
  }
  return (std::exp(s) * (s - 1.0) + 1.0) / (s * s);
}

double base_R(const KernelForm& f, double x) {
  if (!f.inside(x)) return 0.0;
  if (f.exponential) return ginibre_hard(2.0 * x);
  const double lo = std::isfinite(f.xi_lo) ? f.xi_lo : std::min(2.0 * x, f.xi_hi) - 40.0;
  auto psi = [&](double xi) {
    const double d = 2.0 * x - xi;
    return -0.5 * d * d + f.log_mu(xi);
  };
  return std::exp(f.log_amp2(x) + log_integrate_exp(psi, lo, f.xi_hi));
}

void check_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("rho must be positive and finite");
}

}  // namespace

LimitProfile LimitProfile::free(double rho) {
  check_rho(rho);
  LimitProfile p;
  p.rho = rho;
  return p;
}

LimitProfile LimitProfile::soft_hard(double rho) {
  check_rho(rho);
  LimitProfile p;
  p.variant = Variant::SoftHard;
  p.rho = rho;
  p.c1 = p.c2 = kInf;
  return p;
}

LimitProfile LimitProfile::interpolated(double rho, double c1, double c2) {
  check_rho(rho);
  if (!(c1 > 0.0) || !(c2 > 0.0)) throw DomainError("interpolation weights must be positive");
  LimitProfile p;
  p.variant = Variant::Interpolated;
  p.rho = rho;
  p.c1 = c1;
  p.c2 = c2;
  return p;
}

LimitProfile LimitProfile::hard_annulus(double rho, double tau1, double tau2) {
  check_rho(rho);
  if (!(tau1 < tau2)) throw DomainError("hard annulus needs tau1 < tau2");
  LimitProfile p;
  p.variant = Variant::HardAnnulus;
  p.rho = rho;
  p.tau1 = tau1;
  p.tau2 = tau2;
  return p;
}

LimitProfile LimitProfile::hard_disk_outer(double rho, double tau) {
  check_rho(rho);
  if (!(tau > 0.0 && tau <= 1.0)) throw DomainError("hard disk needs tau in (0, 1]");
  LimitProfile p;
  p.variant = Variant::HardDiskOuter;
  p.rho = rho;
  p.tau = tau;
  return p;
}

LimitProfile LimitProfile::hard_disk_rescaled(double rho, double tau) {
  LimitProfile p = hard_disk_outer(rho, tau);
  p.variant = Variant::HardDiskRescaled;
  return p;
}

LimitProfile LimitProfile::ginibre_soft_hard() {
  LimitProfile p;
  p.variant = Variant::GinibreSoftHard;
  p.rho = kInf;
  return p;
}

LimitProfile LimitProfile::ginibre_hard() {
  LimitProfile p;
  p.variant = Variant::GinibreHard;
  p.rho = kInf;
  return p;
}

std::string LimitProfile::name() const {
  std::ostringstream os;
  auto f = [](double v) { return format_double(v); };
  switch (variant) {
    case Variant::Free: os << "free(rho=" << f(rho) << ")"; break;
    case Variant::SoftHard: os << "softhard(rho=" << f(rho) << ")"; break;
    case Variant::Interpolated:
      os << "interpolated(rho=" << f(rho) << ",c1=" << f(c1) << ",c2=" << f(c2) << ")";
      break;
    case Variant::HardAnnulus:
      os << "hard-annulus(rho=" << f(rho) << ",tau1=" << f(tau1) << ",tau2=" << f(tau2) << ")";
      break;
    case Variant::HardDiskOuter: os << "hard-disk-outer(rho=" << f(rho) << ",tau=" << f(tau) << ")"; break;
    case Variant::HardDiskRescaled:
      os << "hard-disk-rescaled(rho=" << f(rho) << ",tau=" << f(tau) << ")";
      break;
    case Variant::GinibreSoftHard: os << "ginibre-softhard"; break;
    case Variant::GinibreHard: os << "ginibre-hard"; break;
  }
  return os.str();
}

double KernelForm::log_mu(double xi) const {
  using V = LimitProfile::Variant;
  switch (base.variant) {
    case V::Free: return -std::log(kSqrt2Pi);
    case V::SoftHard:
    case V::Interpolated: return -log_Phi_c(xi, base.c1, base.c2, base.rho);
    case V::HardAnnulus: {
      const double lo = 0.5 * base.rho * (2.0 * base.tau1 - 1.0);
      const double hi = 0.5 * base.rho * (2.0 * base.tau2 - 1.0);
      return -log_gauss_interval(lo - xi, hi - xi);
    }
    case V::HardDiskOuter:
    case V::HardDiskRescaled:
    case V::GinibreSoftHard: return -log_D_minus(xi);
    case V::GinibreHard: return std::log(xi);
  }
  return 0.0;
}

double KernelForm::log_amp2(double x) const {
  using V = LimitProfile::Variant;
  if (base.variant == V::Interpolated) return I_c(2.0 * x, base.c1, base.c2, base.rho);
  return 0.0;
}

KernelForm kernel_form(const LimitProfile& p) {
  using V = LimitProfile::Variant;
  KernelForm f;
  f.base = p;
  const double h = 0.5 * p.rho;
  f.xi_lo = -h;
  f.xi_hi = h;
  f.x_lo = -kInf;
  f.x_hi = kInf;
  switch (p.variant) {
    case V::Free: break;
    case V::SoftHard:
    case V::Interpolated:
      if (p.c1 == kInf) f.x_lo = -0.25 * p.rho;
      if (p.c2 == kInf) f.x_hi = 0.25 * p.rho;
      break;
    case V::HardAnnulus:
      f.x_lo = 0.25 * p.rho * (2.0 * p.tau1 - 1.0);
      f.x_hi = 0.25 * p.rho * (2.0 * p.tau2 - 1.0);
      break;
    case V::HardDiskRescaled:
      f.scale = c_of_tau(p.tau, p.rho) / p.rho;
      f.base.variant = V::HardDiskOuter;
      [[fallthrough]];
    case V::HardDiskOuter:
      f.xi_lo = -p.rho * p.tau;
      f.xi_hi = p.rho * (1.0 - p.tau);
      f.x_hi = 0.0;
      break;
    case V::GinibreSoftHard:
      f.xi_lo = -kInf;
      f.xi_hi = 0.0;
      f.x_hi = 0.0;
      break;
    case V::GinibreHard:
      f.exponential = true;
      f.xi_lo = 0.0;
      f.xi_hi = 1.0;
      f.x_hi = 0.0;
      break;
  }
  return f;
}

std::pair<double, double> LimitProfile::support() const {
  const KernelForm f = kernel_form(*this);
  return {f.x_lo / f.scale, f.x_hi / f.scale};
}

std::vector<double> LimitProfile::walls() const {
  std::vector<double> w;
  const auto [lo, hi] = support();
  if (std::isfinite(lo)) w.push_back(lo);
  if (variant == Variant::Interpolated) {
    if (c1 != 1.0 && c1 != kInf) w.push_back(-0.25 * rho);
    if (c2 != 1.0 && c2 != kInf) w.push_back(0.25 * rho);
  }
  if (std::isfinite(hi)) w.push_back(hi);
  std::sort(w.begin(), w.end());
  return w;
}

double I_c(double t, double c1, double c2, double rho) {
  const double h = 0.5 * rho;
  double s = 0.0;
  if (t < -h) {
    if (c1 == kInf) return -kInf;
    s += 0.5 * (1.0 - c1) * (t + h) * (t + h);
  }
  if (t > h) {
    if (c2 == kInf) return -kInf;
    s += 0.5 * (1.0 - c2) * (t - h) * (t - h);
  }
  return s;
}

double log_Phi_c(double xi, double c1, double c2, double rho) {
  const double h = 0.5 * rho;
  double s = log_gauss_interval(-h - xi, h - xi);
  auto side = [](double d, double c) {
    return -0.5 * d * d * (1.0 - 1.0 / c) - 0.5 * std::log(c) +
           log_gauss_interval(d / std::sqrt(c), kInf);
  };
  if (c2 != kInf) s = log_add_exp(s, side(h - xi, c2));
  if (c1 != kInf) s = log_add_exp(s, side(h + xi, c1));
  return s;
}

double Phi_c(double xi, double c1, double c2, double rho) {
  return std::exp(log_Phi_c(xi, c1, c2, rho));
}

double log_F_c(double u, double c1, double c2, double rho) {
  const double h = 0.5 * rho;
  auto psi = [&](double xi) {
    const double d = u - xi;
    return -0.5 * d * d - log_Phi_c(xi, c1, c2, rho);
  };
  return log_integrate_exp(psi, -h, h, 1e-14);
}

double F_c(double u, double c1, double c2, double rho) {
  return std::exp(log_F_c(u, c1, c2, rho));
}

double R_limit(const LimitProfile& p, double x) {
  using V = LimitProfile::Variant;
  if (p.variant == V::Free) {
    const double h = 0.5 * p.rho;
    return gauss_interval(2.0 * x - h, 2.0 * x + h) / kSqrt2Pi;
  }
  const KernelForm f = kernel_form(p);
  const double k = f.scale;
  if (k == 1.0) return base_R(f, x);
  return k * k * base_R(f, k * x);
}

double limit_mass(const LimitProfile& p) {
  using V = LimitProfile::Variant;
  if (p.variant == V::GinibreSoftHard || p.variant == V::GinibreHard) {
    throw Unsupported("the rho = infinity profiles have infinite mass");
  }
  const auto [lo, hi] = p.support();
  const double core = std::clamp(0.0, lo, hi);
  const double peak = std::max(R_limit(p, core), 1e-300);
  const double step = 0.25 / std::min(1.0, kernel_form(p).scale);
  auto edge = [&](double dir, double wall) {
    double x = core;
    for (int i = 0; i < 100000; ++i) {
      const double nx = x + dir * step;
      if ((dir > 0 && nx >= wall) || (dir < 0 && nx <= wall)) return wall;
      x = nx;
      if (R_limit(p, x) < 1e-18 * peak) return x;
    }
    return x;
  };
  const double a = edge(-1.0, lo);
  const double b = edge(1.0, hi);
  std::vector<double> pts{a};
  for (double w : p.walls()) {
    if (w > a && w < b) pts.push_back(w);
  }
  if (core > a && core < b) pts.push_back(core);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  QuadOptions opt;
  opt.rel_tol = 1e-12;
  auto f = [&](double x) { return R_limit(p, x); };
  return integrate(f, std::span<const double>(pts), opt).value;
}

double c_of_tau(double tau, double rho) {
  if (tau == 1.0) return rho;
  const double a = 0.5 * (1.0 - tau);
  return 1.0 / (std::sqrt(a * a + 1.0 / (rho * rho)) + a);
}

std::complex<double> K_limit(const LimitProfile& p, std::complex<double> z,
                             std::complex<double> w) {
  const KernelForm f = kernel_form(p);
  const double k = f.scale;
  z *= k;
  w *= k;
  const double x1 = z.real(), y1 = z.imag();
  const double x2 = w.real(), y2 = w.imag();
  if (!f.inside(x1) || !f.inside(x2)) return 0.0;
  if (f.exponential) {
    return k * k * ginibre_hard(z + std::conj(w));
  }
  const double pp = x1 + x2;
  const double q = y1 - y2;
  const double dx = x1 - x2;
  const double phase0 = y1 * x2 - x1 * y2;
  auto re = [&](double xi) {
    const double d = pp - xi;
    return -0.5 * dx * dx - 0.5 * d * d + f.log_mu(xi);
  };
  const double lo = std::isfinite(f.xi_lo) ? f.xi_lo : std::min(pp, f.xi_hi) - 40.0;
  const double hi = f.xi_hi;
  double m = -kInf;
  for (int i = 0; i <= 48; ++i) m = std::max(m, re(lo + (hi - lo) * i / 48.0));
  auto g = [&](double xi) {
    return std::polar(std::exp(re(xi) - m), phase0 - (pp - xi) * q);
  };
  QuadOptions opt;
  opt.rel_tol = 1e-12;
  opt.abs_tol = 1e-300;
  const auto res = integrate(g, {lo, hi}, opt);
  const double amp = std::exp(m + 0.5 * (f.log_amp2(x1) + f.log_amp2(x2)));
  return k * k * amp * res.value;
}

double sine_scaled_modulus(double rho, double tau1, double tau2, double u, double v) {
  const LimitProfile p = LimitProfile::hard_annulus(rho, tau1, tau2);
  const double a = 0.5 * rho;
  const double xc = 0.25 * rho * (tau1 + tau2 - 1.0);
  // Strip width a (tau2 - tau1) turns |K| into a line kernel in u = a y.
  const double off = std::abs(K_limit(p, {xc, u / a}, {xc, v / a}));
  return off * (tau2 - tau1) / kPi;
}

double sine_limit_error(double rho, double tau1, double tau2,
                        const std::vector<std::pair<double, double>>& points) {
  if (!(rho > 0.0 && rho <= 0.2)) throw DomainError("circular limit needs 0 < rho <= 0.2");
  double worst = 0.0;
  for (const auto& [u, v] : points) {
    const double d = u - v;
    const double target = d == 0.0 ? 1.0 / kPi : std::abs(std::sin(d) / (kPi * d));
    worst = std::max(worst, std::abs(sine_scaled_modulus(rho, tau1, tau2, u, v) - target));
  }
  return worst;
}

}  // namespace acre
