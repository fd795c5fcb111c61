#include "acre/radialnorms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "acre/errors.hpp"
#include "acre/io.hpp"
#include "acre/limits.hpp"
#include "acre/parallel.hpp"
#include "acre/quadrature.hpp"
#include "acre/special.hpp"
#include "acre/specfile.hpp"

namespace acre {
namespace {

constexpr double kLog2 = 0.69314718055994530942;
constexpr double kDrop = 60.0;
constexpr int kCacheVersion = 1;

}  // namespace

double radial_argmax(const Ensemble& e, int j) {
  const double t = (j + 1.0) / e.n();
  const auto& bc = e.spec().bc;
  double u;
  if (t > 1.0 && bc.kind == BoundaryCondition::Kind::Interpolated && !bc.is_free() &&
      bc.c2 != kInf) {
    u = u_tau(e.potential(), 1.0 + (t - 1.0) / bc.c2);
  } else {
    u = u_tau(e.potential(), t);
  }
  return std::clamp(u, e.lower(), e.upper());
}

RadialWeight::RadialWeight(const Ensemble& ensemble, int j)
    : RadialWeight(ensemble, j, radial_argmax(ensemble, j)) {}

RadialWeight::RadialWeight(const Ensemble& ensemble, int j, double argmax)
    : e_(ensemble), j_(j), argmax_(argmax) {
  if (j < 0) throw DomainError("degree must be nonnegative");
  phi_max_ = phi(argmax_);
  if (!std::isfinite(phi_max_)) {
    throw DomainError("degree " + std::to_string(j) + ": weight vanishes on the support");
  }
  width_ = 1.0 / std::sqrt(e_.n() * e_.d2q_eff(argmax_));
}

double RadialWeight::phi(double u) const {
  if (u < e_.lower() || u > e_.upper()) return -kInf;
  return kLog2 + 2.0 * (j_ + 1.0) * u - e_.n() * e_.q_eff(u);
}

double RadialWeight::dphi(double u) const {
  return 2.0 * (j_ + 1.0) - e_.n() * e_.dq_eff(u);
}

std::pair<double, double> RadialWeight::window(double a, double b) const {
  a = std::max(a, e_.lower());
  b = std::min(b, e_.upper());
  const double top = std::clamp(argmax_, a, b);
  const double m = phi(top);
  // March outward until the integrand has dropped by e^-kDrop.
  auto reach = [&](double dir, double bound) {
    double s = width_;
    const double slope = std::abs(dphi(top));
    if (slope > 0.0) s = std::min(s, 4.0 / slope);
    if (!(s > 0.0) || !std::isfinite(s)) s = 1e-3;
    double u = top;
    for (int i = 0; i < 200; ++i) {
      const double next = u + dir * s;
      if ((dir > 0 && next >= bound) || (dir < 0 && next <= bound)) return bound;
      u = next;
      if (phi(u) < m - kDrop) return u;
      s *= 1.6;
    }
    return u;
  };
  const double lo = top > a ? reach(-1.0, a) : a;
  const double hi = top < b ? reach(1.0, b) : b;
  return {lo, hi};
}

double RadialWeight::log_integral(double a, double b, double log_abs_tol) const {
  a = std::max(a, e_.lower());
  b = std::min(b, e_.upper());
  if (!(a < b)) return -kInf;
  const double top = std::clamp(argmax_, a, b);
  const double m = phi(top);
  if (m == -kInf) return -kInf;
  const auto [lo, hi] = window(a, b);

  std::vector<double> pts{lo};
  for (double k : e_.kinks()) {
    if (k > lo && k < hi) pts.push_back(k);
  }
  if (top > lo && top < hi) pts.push_back(top);
  pts.push_back(hi);
  std::sort(pts.begin(), pts.end());

  auto f = [&](double u) { return std::exp(phi(u) - m); };
  QuadOptions opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = std::max(1e-300, std::exp(log_abs_tol - m));
  const auto res = integrate(f, std::span<const double>(pts), opt);
  return m + std::log(res.value);
}

double RadialWeight::log_total() const { return log_integral(e_.lower(), e_.upper()); }

double v_nj(const EnsembleSpec& spec, int j, double r) {
  if (!(r > 0.0)) throw DomainError("v_nj needs r > 0");
  return spec.potential.g(r) - 2.0 * (static_cast<double>(j) / spec.n) * std::log(r);
}

double log_weighted_norm(const EnsembleSpec& spec, int j) {
  if (j < 0) throw DomainError("degree must be nonnegative");
  const Ensemble e(spec);
  return RadialWeight(e, j).log_total();
}

double asymptotic_norm(const EnsembleSpec& spec, int j, bool allow_hard) {
  using K = BoundaryCondition::Kind;
  const auto& bc = spec.bc;
  const double tau = static_cast<double>(j) / spec.n;
  const double rho = spec.rho;
  const double xi = rho * (tau - 0.5);
  const double u = u_tau(spec.potential, tau);
  const double v = spec.potential.g_log(u) - 2.0 * tau * u;
  const double base = -spec.n * v + std::log(rho / spec.n);
  switch (bc.kind) {
    case K::Free: return base + log_Phi_c(xi, 1.0, 1.0, rho);
    case K::Interpolated: return base + log_Phi_c(xi, bc.c1, bc.c2, rho);
    case K::HardAnnulus:
    case K::HardDisk: {
      if (!allow_hard) throw Unsupported("asymptotic norm for hard walls needs allow_hard");
      const double lo = bc.kind == K::HardDisk ? -kInf : 0.5 * rho * (2.0 * bc.tau1 - 1.0);
      const double hi = 0.5 * rho * (2.0 * (bc.kind == K::HardDisk ? bc.tau : bc.tau2) - 1.0);
      return base + log_gauss_interval(lo - xi, hi - xi);
    }
  }
  return base;
}

NormTable norm_table(std::shared_ptr<const Ensemble> ensemble) {
  NormTable t;
  t.ensemble = std::move(ensemble);
  const Ensemble& e = *t.ensemble;
  const int n = e.n();
  t.log_norm.assign(n, 0.0);
  t.pivot.assign(n, 0.0);
  t.log_peak.assign(n, 0.0);
  t.argmax.assign(n, 0.0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    try {
      const RadialWeight w(e, j);
      t.argmax[j] = w.argmax();
      t.log_norm[j] = w.log_total();
      const double tau = static_cast<double>(j) / n;
      const double up = std::clamp(u_tau(e.potential(), tau), e.lower(), e.upper());
      t.pivot[j] = std::exp(up);
      const double v = std::isfinite(up) ? e.potential().g_log(up) - 2.0 * tau * up
                                         : e.potential().g_log(up);
      t.log_peak[j] = -n * v;
      if (!std::isfinite(t.log_norm[j])) throw ConsistencyError("non-finite norm");
    } catch (const std::exception& ex) {
      throw ConsistencyError("norm table, degree j=" + std::to_string(j) + ": " + ex.what());
    }
  });
  return t;
}

NormTable norm_table(const EnsembleSpec& spec) {
  return norm_table(std::make_shared<const Ensemble>(spec));
}

std::string norm_table_csv(const NormTable& table) {
  CsvTable csv({"j", "log_norm", "pivot", "log_peak", "argmax"});
  csv.add_comment("acre norm table v" + std::to_string(kCacheVersion) +
                  " spec_hash=" + spec_hash(table.spec()));
  for (std::size_t j = 0; j < table.size(); ++j) {
    csv.add_row({static_cast<double>(j), table.log_norm[j], table.pivot[j], table.log_peak[j],
                 table.argmax[j]});
  }
  return csv.str();
}

namespace {

bool load_cache(const std::string& path, const std::string& header, NormTable& t) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception&) {
    return false;
  }
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "# " + header) return false;
  if (!std::getline(in, line)) return false;
  const std::size_t n = t.ensemble->n();
  std::vector<double> cols[5];
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string cell;
    int c = 0;
    while (std::getline(ls, cell, ',') && c < 5) cols[c++].push_back(parse_double(cell));
    if (c != 5) return false;
  }
  if (cols[0].size() != n) return false;
  t.log_norm = cols[1];
  t.pivot = cols[2];
  t.log_peak = cols[3];
  t.argmax = cols[4];
  return true;
}

}  // namespace

NormTable norm_table_cached(const EnsembleSpec& spec) {
  const char* dir = std::getenv("ACRE_CACHE_DIR");
  if (!dir || !*dir) return norm_table(spec);
  const std::string hash = spec_hash(spec);
  const std::string header =
      "acre norm table v" + std::to_string(kCacheVersion) + " spec_hash=" + hash;
  const std::string path = (std::filesystem::path(dir) / ("norms-" + hash + ".csv")).string();
  NormTable t;
  t.ensemble = std::make_shared<const Ensemble>(spec);
  try {
    if (load_cache(path, header, t)) return t;
  } catch (const std::exception&) {
  }
  t = norm_table(t.ensemble);
  write_atomic(path, norm_table_csv(t));
  return t;
}

}  // namespace acre
