#include "acre/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "acre/errors.hpp"
#include "acre/quadrature.hpp"
#include "acre/special.hpp"

namespace acre {

std::string to_string(Family f) {
  switch (f) {
    case Family::InducedGinibre: return "induced-ginibre";
    case Family::PowerLog: return "power-log";
    case Family::Custom: return "custom";
  }
  return "?";
}

RadialPotential RadialPotential::induced_ginibre(double n, double rho) {
  if (!(n >= 1.0) || !(rho > 0.0)) throw DomainError("induced Ginibre needs n >= 1 and rho > 0");
  const double a = n / (rho * rho);
  const double b = (2.0 * a - 1.0) / 2.0;
  if (b < 0.0) throw DomainError("induced Ginibre: n < rho^2/2 gives a negative log weight");
  RadialPotential p;
  p.family_ = Family::InducedGinibre;
  p.terms_ = {{a, 2.0}};
  p.log_weight_ = b;
  p.slope_at_one_ = 1.0;
  p.params_ = {a, b};
  return p;
}

RadialPotential RadialPotential::power_log(double n, double rho, double lambda) {
  if (!(n >= 1.0) || !(rho > 0.0) || !(lambda > 0.0)) {
    throw DomainError("power-log needs n >= 1, rho > 0, lambda > 0");
  }
  const double amp = n / (rho * rho * lambda * lambda);
  const double power = 2.0 * lambda;
  const double b = (power * amp - 1.0) / 2.0;
  if (b < 0.0) throw DomainError("power-log: parameters give a negative log weight");
  RadialPotential p;
  p.family_ = Family::PowerLog;
  p.terms_ = {{amp, power}};
  p.log_weight_ = b;
  p.slope_at_one_ = 1.0;
  p.params_ = {amp, lambda, b};
  return p;
}

RadialPotential RadialPotential::custom(std::vector<double> alpha, double beta) {
  if (alpha.empty()) throw DomainError("custom potential needs at least one coefficient");
  RadialPotential p;
  p.family_ = Family::Custom;
  double slope = -2.0 * beta;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] == 0.0) continue;
    const double power = 2.0 * static_cast<double>(k + 1);
    p.terms_.push_back({alpha[k], power});
    slope += power * alpha[k];
  }
  p.log_weight_ = beta;
  p.slope_at_one_ = slope;
  p.params_ = alpha;
  p.params_.push_back(beta);
  return p;
}

std::vector<double> RadialPotential::parameters() const { return params_; }

namespace {

double expm1_minus_x(double x) {
  if (std::abs(x) < 0.25) {
    double term = x * x / 2.0;
    double s = term;
    for (int k = 3; k < 20; ++k) {
      term *= x / k;
      s += term;
      if (std::abs(term) < 1e-17 * std::abs(s)) break;
    }
    return s;
  }
  return std::expm1(x) - x;
}

}  // namespace

double RadialPotential::g_log(double u) const {
  if (u == -kInf && log_weight_ == 0.0) {
    double s = 0.0;
    for (const Term& t : terms_) s -= t.amp;
    return s;
  }
  // sum A (e^{pu} - 1 - pu) + (sum A p - 2B) u avoids the cancellation
  // between the large A and B terms near u = 0.
  double s = slope_at_one_ * u;
  for (const Term& t : terms_) s += t.amp * expm1_minus_x(t.power * u);
  return s;
}

double RadialPotential::rgp_log(double u) const {
  double s = slope_at_one_;
  for (const Term& t : terms_) s += t.amp * t.power * std::expm1(t.power * u);
  return s;
}

double RadialPotential::lap_log(double u) const {
  double s = 0.0;
  for (const Term& t : terms_) s += t.amp * t.power * t.power * std::exp(t.power * u);
  return s;
}

double RadialPotential::lap_log_du(double u) const {
  double s = 0.0;
  for (const Term& t : terms_) {
    s += t.amp * t.power * t.power * t.power * std::exp(t.power * u);
  }
  return s;
}

double RadialPotential::g(double r) const { return g_log(std::log(r)); }

double RadialPotential::dg(double r) const { return rgp_log(std::log(r)) / r; }

double RadialPotential::d2g(double r) const {
  const double u = std::log(r);
  return (lap_log(u) - rgp_log(u)) / (r * r);
}

double RadialPotential::d3g(double r) const {
  const double u = std::log(r);
  return (lap_log_du(u) - 3.0 * lap_log(u) + 2.0 * rgp_log(u)) / (r * r * r);
}

double RadialPotential::laplacian(double r) const {
  return lap_log(std::log(r)) / (4.0 * r * r);
}

RadialPotential make_induced_ginibre(int n, double rho) {
  return RadialPotential::induced_ginibre(static_cast<double>(n), rho);
}

BoundaryCondition BoundaryCondition::free() { return {}; }

BoundaryCondition BoundaryCondition::interpolated(double c1, double c2) {
  BoundaryCondition bc;
  bc.kind = Kind::Interpolated;
  bc.c1 = c1;
  bc.c2 = c2;
  return bc;
}

BoundaryCondition BoundaryCondition::hard_annulus(double tau1, double tau2) {
  BoundaryCondition bc;
  bc.kind = Kind::HardAnnulus;
  bc.tau1 = tau1;
  bc.tau2 = tau2;
  return bc;
}

BoundaryCondition BoundaryCondition::hard_disk(double tau) {
  BoundaryCondition bc;
  bc.kind = Kind::HardDisk;
  bc.tau = tau;
  return bc;
}

bool BoundaryCondition::is_free() const {
  return kind == Kind::Free || (kind == Kind::Interpolated && c1 == 1.0 && c2 == 1.0);
}

std::string to_string(const BoundaryCondition& bc) {
  std::ostringstream os;
  os.precision(17);
  switch (bc.kind) {
    case BoundaryCondition::Kind::Free: os << "free"; break;
    case BoundaryCondition::Kind::Interpolated:
      os << "interpolated(" << bc.c1 << "," << bc.c2 << ")";
      break;
    case BoundaryCondition::Kind::HardAnnulus:
      os << "hard-annulus(" << bc.tau1 << "," << bc.tau2 << ")";
      break;
    case BoundaryCondition::Kind::HardDisk: os << "hard-disk(" << bc.tau << ")"; break;
  }
  return os.str();
}

void check_spec(const EnsembleSpec& spec) {
  if (spec.n < 1) throw DomainError("n must be at least 1");
  if (!(spec.rho > 0.0) || !std::isfinite(spec.rho)) throw DomainError("rho must be positive");
  const auto& bc = spec.bc;
  switch (bc.kind) {
    case BoundaryCondition::Kind::Free: break;
    case BoundaryCondition::Kind::Interpolated:
      if (!(bc.c1 > 0.0) || !(bc.c2 > 0.0)) throw DomainError("interpolation weights must be positive");
      break;
    case BoundaryCondition::Kind::HardAnnulus:
      if (!(bc.tau1 < bc.tau2)) throw DomainError("hard annulus needs tau1 < tau2");
      break;
    case BoundaryCondition::Kind::HardDisk:
      if (!(bc.tau > 0.0 && bc.tau <= 1.0)) throw DomainError("hard disk needs tau in (0, 1]");
      break;
  }
}

double u_tau(const RadialPotential& g, double tau) {
  const double target = 2.0 * tau;
  const double floor = g.rgp_at_zero();
  if (target == floor) return -kInf;
  if (target < floor) {
    std::ostringstream os;
    os << "r g'(r) = " << target << " has no positive root (infimum " << floor << ")";
    throw DomainError(os.str());
  }
  auto h = [&](double u) { return g.rgp_log(u) - target; };
  if (h(0.0) == 0.0) return 0.0;
  double lo = -0.5;
  double hi = 0.5;
  while (h(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 20.0) {
      throw SolverError("no sign change for r g'(r) = " + std::to_string(target) + " below r = e^20");
    }
  }
  if (lo > 0.0 && h(lo) > 0.0) lo = 0.0;
  while (h(lo) > 0.0) {
    hi = lo;
    lo *= 2.0;
    if (lo < -700.0) {
      throw SolverError("no sign change for r g'(r) = " + std::to_string(target) + " above r = e^-700");
    }
  }
  double u = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = h(u);
    if (f == 0.0) return u;
    if (f < 0.0) lo = u; else hi = u;
    const double d = g.lap_log(u);
    double next = u - f / d;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - u) <= 1e-15 * std::max(1.0, std::abs(u))) return next;
    u = next;
    if (hi - lo <= 1e-16 * std::max(1.0, std::abs(u))) return u;
  }
  throw SolverError("r g'(r) = " + std::to_string(target) + ": iteration did not converge");
}

double r_tau(const EnsembleSpec& spec, double tau) {
  return std::exp(u_tau(spec.potential, tau));
}

Droplet droplet_radii(const EnsembleSpec& spec) {
  Droplet d;
  d.r0 = r_tau(spec, 0.0);
  d.r1 = r_tau(spec, 1.0);
  d.rho_n = std::sqrt(spec.n / spec.potential.laplacian(1.0));
  return d;
}

double obstacle(const EnsembleSpec& spec, double r) {
  const Droplet d = droplet_radii(spec);
  const auto& g = spec.potential;
  if (r < d.r0) return g.g(d.r0);
  if (r > d.r1) return 2.0 * std::log(r / d.r1) + g.g(d.r1);
  return g.g(r);
}

double effective_potential(const EnsembleSpec& spec, double r) {
  if (r < 0.0) throw DomainError("radius must be nonnegative");
  return Ensemble(spec).q_eff(std::log(r));
}

Ensemble::Ensemble(EnsembleSpec spec) : spec_(std::move(spec)) {
  check_spec(spec_);
  const auto& g = spec_.potential;
  u0_ = u_tau(g, 0.0);
  u1_ = u_tau(g, 1.0);
  droplet_.r0 = std::exp(u0_);
  droplet_.r1 = std::exp(u1_);
  droplet_.rho_n = std::sqrt(spec_.n / g.laplacian(1.0));
  g0_ = std::isfinite(u0_) ? g.g_log(u0_) : 0.0;
  g1_ = g.g_log(u1_);
  lower_ = -kInf;
  upper_ = kInf;
  const auto& bc = spec_.bc;
  free_ = bc.is_free();
  using K = BoundaryCondition::Kind;
  if (free_) return;
  switch (bc.kind) {
    case K::Free: break;
    case K::Interpolated:
      if (bc.c1 == kInf) lower_ = u0_;
      else if (bc.c1 != 1.0 && std::isfinite(u0_)) kinks_.push_back(u0_);
      if (bc.c2 == kInf) upper_ = u1_;
      else if (bc.c2 != 1.0) kinks_.push_back(u1_);
      break;
    case K::HardAnnulus:
      lower_ = u_tau(g, bc.tau1);
      upper_ = u_tau(g, bc.tau2);
      if (!(lower_ < upper_)) throw DomainError("hard annulus has an empty domain");
      break;
    case K::HardDisk:
      upper_ = u_tau(g, bc.tau);
      break;
  }
}

double Ensemble::q_eff(double u) const {
  const auto& g = spec_.potential;
  if (free_) return g.g_log(u);
  if (u < lower_ || u > upper_) return kInf;
  if (spec_.bc.kind != BoundaryCondition::Kind::Interpolated) return g.g_log(u);
  const double c1 = spec_.bc.c1;
  const double c2 = spec_.bc.c2;
  if (u > u1_ && c2 != 1.0) {
    return c2 * g.g_log(u) + (1.0 - c2) * (2.0 * (u - u1_) + g1_);
  }
  if (u < u0_ && c1 != 1.0) return c1 * g.g_log(u) + (1.0 - c1) * g0_;
  return g.g_log(u);
}

double Ensemble::dq_eff(double u) const {
  const auto& g = spec_.potential;
  if (free_ || spec_.bc.kind != BoundaryCondition::Kind::Interpolated) return g.rgp_log(u);
  const double c1 = spec_.bc.c1;
  const double c2 = spec_.bc.c2;
  if (u > u1_ && c2 != 1.0) return c2 * g.rgp_log(u) + (1.0 - c2) * 2.0;
  if (u < u0_ && c1 != 1.0) return c1 * g.rgp_log(u);
  return g.rgp_log(u);
}

double Ensemble::d2q_eff(double u) const {
  const auto& g = spec_.potential;
  if (free_ || spec_.bc.kind != BoundaryCondition::Kind::Interpolated) return g.lap_log(u);
  if (u > u1_ && spec_.bc.c2 != 1.0) return spec_.bc.c2 * g.lap_log(u);
  if (u < u0_ && spec_.bc.c1 != 1.0) return spec_.bc.c1 * g.lap_log(u);
  return g.lap_log(u);
}

EquilibriumDensity equilibrium_density(const EnsembleSpec& spec, double r) {
  check_spec(spec);
  EquilibriumDensity e;
  const auto& bc = spec.bc;
  double t_lo = 0.0;
  double t_hi = 1.0;
  using K = BoundaryCondition::Kind;
  if (bc.kind == K::HardAnnulus) {
    t_lo = std::clamp(bc.tau1, 0.0, 1.0);
    t_hi = std::clamp(bc.tau2, 0.0, 1.0);
  } else if (bc.kind == K::HardDisk) {
    t_hi = bc.tau;
  } else if (bc.kind == K::Interpolated && !bc.is_free()) {
    e.unsupported_bc = !(bc.c1 == kInf && bc.c2 == kInf);
  }
  e.inner_mass = t_lo;
  e.outer_mass = 1.0 - t_hi;
  e.inner_radius = r_tau(spec, t_lo);
  e.outer_radius = r_tau(spec, t_hi);
  if (r >= e.inner_radius && r <= e.outer_radius && r > 0.0) {
    e.density = spec.potential.laplacian(r);
  }
  return e;
}

double equilibrium_total_mass(const EnsembleSpec& spec) {
  const EquilibriumDensity e = equilibrium_density(spec, 1.0);
  const double lo = std::log(std::max(e.inner_radius, 1e-300));
  const double hi = std::log(e.outer_radius);
  // density * 2 r dr = Laplacian * 2 r^2 du
  const auto& g = spec.potential;
  auto f = [&](double u) { return 0.5 * g.lap_log(u); };
  QuadOptions opt;
  opt.rel_tol = 1e-13;
  const double a = std::max(lo, -700.0);
  const auto res = integrate(f, {a, hi}, opt);
  return res.value + e.inner_mass + e.outer_mass;
}

bool ValidationReport::passed() const {
  return subharmonic_ok && normalization_ok && third_derivative_finite && growth_ok &&
         rgp_increasing && rho_ok;
}

ValidationReport validate(const EnsembleSpec& spec) {
  ValidationReport rep;
  const auto& g = spec.potential;
  const Droplet d = droplet_radii(spec);
  const double lo = d.r0 > 0.0 ? d.r0 / 2.0 : d.r1 * 1e-3;
  const double hi = 2.0 * d.r1;
  const int m = 512;
  rep.subharmonic_min = kInf;
  double prev = -kInf;
  rep.rgp_increasing = true;
  for (int i = 0; i < m; ++i) {
    const double u = std::log(lo) + (std::log(hi) - std::log(lo)) * i / (m - 1);
    const double r = std::exp(u);
    rep.subharmonic_min = std::min(rep.subharmonic_min, 0.25 * (g.d2g(r) + g.dg(r) / r));
    const double v = g.rgp_log(u);
    if (std::abs(u) < 0.1 && !(v > prev)) rep.rgp_increasing = false;
    prev = v;
  }
  rep.subharmonic_ok = rep.subharmonic_min >= 0.0;
  rep.g_at_one = std::abs(g.g(1.0));
  rep.slope_error = std::abs(g.dg(1.0) - 1.0);
  rep.normalization_ok = rep.g_at_one <= 1e-12 && rep.slope_error <= 1e-12;
  double t = 0.0;
  for (int i = -50; i <= 50; ++i) {
    const double r = 1.0 + 0.1 * i / 50.0;
    t = std::max(t, std::abs(g.d3g(r)) / spec.n);
  }
  rep.third_derivative_ratio = t;
  rep.third_derivative_finite = std::isfinite(t);
  const double big = 100.0 * std::max(d.r1, 1.0);
  rep.growth_ratio = g.g(big) / (2.0 * std::log(big));
  rep.growth_ok = rep.growth_ratio > 1.0;
  rep.rho_estimated = d.rho_n;
  rep.rho_declared = spec.rho;
  rep.rho_ok = std::abs(rep.rho_estimated - spec.rho) <= 1e-9 * spec.rho;
  return rep;
}

}  // namespace acre
