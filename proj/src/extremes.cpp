#include "acre/extremes.hpp"

#include <algorithm>
#include <cmath>

#include "acre/errors.hpp"
#include "acre/limits.hpp"
#include "acre/parallel.hpp"
#include "acre/special.hpp"

namespace acre {
namespace {

// Tail masses below e^-42 are dropped; 1e5 of them change a product by
// less than 1e-13.
constexpr double kSkip = -42.0;
// Tail integrals are resolved to 1e-12 of the norm.
const double kLogTol = std::log(1e-12);

double sum_log_complement(const NormTable& table, double r, bool upper) {
  const int n = static_cast<int>(table.size());
  std::vector<double> parts(n);
  parallel_for(n, [&](std::size_t j) {
    parts[j] = degree_tail(table, static_cast<int>(j), r, upper).log_complement;
  });
  double s = 0.0;
  for (double v : parts) s += v;
  return s;
}

}  // namespace

double ScalingConstants::max_radius(double x) const {
  if (regime == Regime::SoftHard) {
    if (x > 0.0) throw DomainError("the soft/hard limit law lives on x <= 0");
    return r1 + rho * rho * x / (c * n * static_cast<double>(n));
  }
  return b_n + x / a_n;
}

double ScalingConstants::min_radius(double x) const {
  if (regime == Regime::SoftHard) {
    if (x > 0.0) throw DomainError("the soft/hard limit law lives on x <= 0");
    return r0 - rho * rho * x / (c_prime * n * static_cast<double>(n));
  }
  return b_n_prime - x / a_n_prime;
}

double ScalingConstants::reference(double x) const {
  return regime == Regime::SoftHard ? exponential_cdf(x) : gumbel_cdf(x);
}

ScalingConstants scaling_constants(const EnsembleSpec& spec) {
  check_spec(spec);
  const auto& bc = spec.bc;
  ScalingConstants sc;
  sc.n = spec.n;
  sc.rho = spec.rho;
  const Droplet d = droplet_radii(spec);
  sc.r0 = d.r0;
  sc.r1 = d.r1;
  double c1 = 1.0;
  double c2 = 1.0;
  if (bc.kind == BoundaryCondition::Kind::Interpolated) {
    c1 = bc.c1;
    c2 = bc.c2;
  } else if (bc.kind != BoundaryCondition::Kind::Free) {
    throw Unsupported("extreme-value scaling is defined for free and interpolated conditions only");
  }
  sc.c1 = c1;
  sc.c2 = c2;
  const double rho = spec.rho;
  if (c1 == kInf && c2 == kInf) {
    sc.regime = ScalingConstants::Regime::SoftHard;
    const LimitProfile p = LimitProfile::soft_hard(rho);
    sc.c = 2.0 * R_limit(p, 0.25 * rho);
    sc.c_prime = 2.0 * R_limit(p, -0.25 * rho);
    return sc;
  }
  if (c1 == kInf || c2 == kInf) {
    throw Unsupported("mixed finite/infinite confinement has no stated limit law");
  }
  const double n = spec.n;
  const double base = 2.0 * std::log(n / rho) - 2.0 * std::log(std::log(n));
  sc.c_n = base - 2.0 * std::log(2.0 * Phi_c(0.5 * rho, c1, c2, rho));
  sc.c_n_prime = base - 2.0 * std::log(2.0 * Phi_c(-0.5 * rho, c1, c2, rho));
  if (!(sc.c_n > 0.0) || !(sc.c_n_prime > 0.0)) {
    throw DomainError("n is too small for positive Gumbel centering constants");
  }
  sc.a_n = (2.0 * n / rho) * std::sqrt(c2 * sc.c_n);
  sc.b_n = d.r1 + (rho / (2.0 * n)) * std::sqrt(sc.c_n / c2);
  sc.a_n_prime = (2.0 * n / rho) * std::sqrt(c1 * sc.c_n_prime);
  sc.b_n_prime = d.r0 - (rho / (2.0 * n)) * std::sqrt(sc.c_n_prime / c1);
  return sc;
}

TailMass degree_tail(const NormTable& table, int j, double r, bool upper) {
  const Ensemble& e = *table.ensemble;
  const double a = r > 0.0 ? std::log(r) : -kInf;
  TailMass out;
  // Which side of the cut holds the requested mass.
  const bool beyond_all = upper ? a >= e.upper() : a <= e.lower();
  const bool covers_all = upper ? a <= e.lower() : a >= e.upper();
  if (beyond_all) return out;
  if (covers_all) {
    out.mass = 1.0;
    out.log_complement = -kInf;
    return out;
  }
  const RadialWeight w(e, j, table.argmax[j]);
  const double log_n = table.log_norm[j];
  const double top = w.argmax();
  const bool far_side = upper ? a >= top : a <= top;
  if (far_side) {
    // Requested mass is the small tail; tangent bound for log-concave tails.
    const double slope = std::abs(w.dphi(a));
    if (slope > 0.0 && w.phi(a) - std::log(slope) - log_n < kSkip) return out;
    const double tol = log_n + kLogTol;
    const double lt = (upper ? w.log_integral(a, e.upper(), tol) : w.log_integral(e.lower(), a, tol)) - log_n;
    const double m = std::exp(lt);
    if (m > 1.0 + 1e-9) {
      throw ConsistencyError("tail mass exceeds one at degree " + std::to_string(j));
    }
    out.mass = std::min(m, 1.0);
    out.log_complement = std::log1p(-out.mass);
    return out;
  }
  // Complement is the small side.
  const double slope = std::abs(w.dphi(a));
  double lh;
  if (slope > 0.0 && w.phi(a) - std::log(slope) - log_n < kSkip + std::log(1e-30)) {
    lh = -kInf;
  } else {
    const double tol = log_n + kLogTol;
    lh = (upper ? w.log_integral(e.lower(), a, tol) : w.log_integral(a, e.upper(), tol)) - log_n;
  }
  if (lh > 1e-9) throw ConsistencyError("head mass exceeds one at degree " + std::to_string(j));
  lh = std::min(lh, 0.0);
  out.log_complement = lh;
  out.mass = -std::expm1(lh);
  return out;
}

double gap_cdf_max(const NormTable& table, double r) {
  return std::exp(sum_log_complement(table, r, true));
}

double gap_cdf_min(const NormTable& table, double r) {
  return std::exp(sum_log_complement(table, r, false));
}

double omega_cdf(const NormTable& table, const ScalingConstants& sc, double x) {
  return gap_cdf_max(table, sc.max_radius(x));
}

double u_cdf(const NormTable& table, const ScalingConstants& sc, double x) {
  return gap_cdf_min(table, sc.min_radius(x));
}

double En(const NormTable& table, const ScalingConstants& sc, double x) {
  if (sc.regime != ScalingConstants::Regime::InterpolatedFinite) {
    throw Unsupported("E_n is defined for finite confinement");
  }
  const double eps = (sc.rho / (2.0 * sc.n * std::sqrt(sc.c2))) *
                     (std::sqrt(sc.c_n) + x / std::sqrt(sc.c_n));
  const double r = sc.r1 + eps;
  const int n = static_cast<int>(table.size());
  std::vector<double> parts(n);
  parallel_for(n, [&](std::size_t j) {
    parts[j] = degree_tail(table, static_cast<int>(j), r, true).mass;
  });
  double s = 0.0;
  for (double v : parts) s += v;
  return s;
}

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

double exponential_cdf(double x) { return x >= 0.0 ? 1.0 : std::exp(x); }

double GapCurve::sup_distance_max() const {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(p_max[i] - reference[i]));
  return d;
}

double GapCurve::sup_distance_min() const {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(p_min[i] - reference[i]));
  return d;
}

GapCurve gap_curve(const NormTable& table, const ScalingConstants& sc,
                   const std::vector<double>& x) {
  GapCurve g;
  g.x = x;
  for (double v : x) {
    g.p_max.push_back(omega_cdf(table, sc, v));
    g.p_min.push_back(u_cdf(table, sc, v));
    g.reference.push_back(sc.reference(v));
  }
  return g;
}

}  // namespace acre
