#include "acre/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "acre/errors.hpp"
#include "acre/parallel.hpp"
#include "acre/quadrature.hpp"
#include "acre/special.hpp"

namespace acre {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t degree)
    : key_(splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ (degree * 0xD1B54A32D192ED03ULL))) {}

std::uint64_t CounterRng::next() { return splitmix64(key_ + 0x632BE59BD9B4E019ULL * ++counter_); }

double CounterRng::uniform() {
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

ModuliSampler::ModuliSampler(std::shared_ptr<const NormTable> table, std::uint64_t seed)
    : table_(std::move(table)), seed_(seed) {
  const Ensemble& e = *table_->ensemble;
  const int n = static_cast<int>(table_->size());
  const RuleNodes& gl = gauss_legendre_rule(10);
  degrees_ = parallel_map<Degree>(n, [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    const RadialWeight w(e, j, table_->argmax[j]);
    const double log_n = table_->log_norm[j];
    const auto [a, b] = w.window(e.lower(), e.upper());
    Degree d;
    d.log_norm = log_n;
    d.u.resize(kNodes + 1);
    for (int i = 0; i <= kNodes; ++i) d.u[i] = a + (b - a) * i / kNodes;
    d.u.back() = b;
    for (double k : e.kinks()) {
      if (k > a && k < b) d.u.insert(std::upper_bound(d.u.begin(), d.u.end(), k), k);
    }
    const double p_lo = a > e.lower() ? std::exp(w.log_integral(e.lower(), a) - log_n) : 0.0;
    const double p_hi = b < e.upper() ? std::exp(w.log_integral(b, e.upper()) - log_n) : 0.0;
    const std::size_t m = d.u.size();
    std::vector<double> mass(m - 1);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      const double c = 0.5 * (d.u[i] + d.u[i + 1]);
      const double h = 0.5 * (d.u[i + 1] - d.u[i]);
      double s = 0.0;
      for (std::size_t k = 0; k < gl.x.size(); ++k) s += gl.w[k] * std::exp(w.phi(c + h * gl.x[k]) - log_n);
      mass[i] = s * h;
      total += mass[i];
    }
    const double scale = (1.0 - p_lo - p_hi) / total;
    d.scale = scale;
    d.cdf.resize(m);
    d.cdf[0] = p_lo;
    for (std::size_t i = 0; i + 1 < m; ++i) d.cdf[i + 1] = d.cdf[i] + mass[i] * scale;
    d.slope.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      d.slope[i] = 1.0 / (scale * std::exp(w.phi(d.u[i]) - log_n));
    }
    // Fritsch-Carlson limiter on each panel.
    for (std::size_t i = 0; i + 1 < m; ++i) {
      const double df = d.cdf[i + 1] - d.cdf[i];
      if (!(df > 0.0)) continue;
      const double delta = (d.u[i + 1] - d.u[i]) / df;
      const double al = d.slope[i] / delta;
      const double be = d.slope[i + 1] / delta;
      const double r2 = al * al + be * be;
      if (r2 > 9.0) {
        const double t = 3.0 / std::sqrt(r2);
        d.slope[i] = t * al * delta;
        d.slope[i + 1] = t * be * delta;
      }
    }
    return d;
  });
}

std::pair<double, double> ModuliSampler::table_range(int j) const {
  const Degree& d = degrees_.at(j);
  return {d.cdf.front(), d.cdf.back()};
}

double ModuliSampler::cdf_log(int j, double u) const {
  const Degree& d = degrees_.at(j);
  if (u <= d.u.front()) return degree_cdf(*table_, j, std::exp(u));
  if (u >= d.u.back()) return degree_cdf(*table_, j, std::exp(u));
  const std::size_t i = std::upper_bound(d.u.begin(), d.u.end(), u) - d.u.begin() - 1;
  const Ensemble& e = *table_->ensemble;
  const RadialWeight w(e, j, table_->argmax[j]);
  const RuleNodes& gl = gauss_legendre_rule(10);
  const double c = 0.5 * (d.u[i] + u);
  const double h = 0.5 * (u - d.u[i]);
  double s = 0.0;
  for (std::size_t k = 0; k < gl.x.size(); ++k) s += gl.w[k] * std::exp(w.phi(c + h * gl.x[k]) - d.log_norm);
  return d.cdf[i] + s * h * d.scale;
}

double ModuliSampler::inverse_cdf_log(int j, double p) const {
  const Degree& d = degrees_.at(j);
  std::size_t i = std::upper_bound(d.cdf.begin(), d.cdf.end(), p) - d.cdf.begin();
  if (i == 0) return d.u.front();
  if (i >= d.cdf.size()) return d.u.back();
  --i;
  const double f0 = d.cdf[i];
  const double f1 = d.cdf[i + 1];
  const double h = f1 - f0;
  const double t = (p - f0) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * d.u[i] + h10 * h * d.slope[i] + h01 * d.u[i + 1] + h11 * h * d.slope[i + 1];
}

double ModuliSampler::tail_draw(int j, bool upper, CounterRng& rng) const {
  const Degree& d = degrees_[j];
  const Ensemble& e = *table_->ensemble;
  const RadialWeight w(e, j, table_->argmax[j]);
  const double edge = upper ? d.u.back() : d.u.front();
  const double phi0 = w.phi(edge);
  const double k = std::abs(w.dphi(edge));
  for (;;) {
    const double step = -std::log(rng.uniform()) / k;
    const double v = upper ? edge + step : edge - step;
    if (v > e.upper() || v < e.lower()) continue;
    if (std::log(rng.uniform()) <= w.phi(v) - phi0 + k * step) return v;
  }
}

double ModuliSampler::sample_degree(int j, CounterRng& rng) const {
  const Degree& d = degrees_[j];
  const double p = rng.uniform();
  if (p < d.cdf.front()) return tail_draw(j, false, rng);
  if (p >= d.cdf.back()) return tail_draw(j, true, rng);
  return inverse_cdf_log(j, p);
}

std::vector<double> ModuliSampler::sample_moduli(std::uint64_t trial) const {
  const int n = this->n();
  std::vector<double> r(n);
  for (int j = 0; j < n; ++j) {
    CounterRng rng(seed_, trial, static_cast<std::uint64_t>(j));
    r[j] = std::exp(sample_degree(j, rng));
  }
  return r;
}

double degree_cdf(const NormTable& table, int j, double r) {
  if (!(r > 0.0)) return 0.0;
  if (std::log(r) <= table.argmax.at(j)) return degree_tail(table, j, r, false).mass;
  return 1.0 - degree_tail(table, j, r, true).mass;
}

double ecdf(const std::vector<double>& sorted, double x) {
  if (sorted.empty()) return 0.0;
  const auto k = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
  return static_cast<double>(k) / static_cast<double>(sorted.size());
}

double ExtremesSample::ecdf_omega(double x) const { return ecdf(omega, x); }
double ExtremesSample::ecdf_u(double x) const { return ecdf(u, x); }

ExtremesSample ecdf_extremes(const ModuliSampler& sampler, const ScalingConstants& sc,
                             int trials) {
  if (trials < 1) throw DomainError("trials must be positive");
  if (sampler.n() != sc.n) throw DomainError("scaling constants belong to a different n");
  struct Pair {
    double omega;
    double u;
  };
  const double n2 = static_cast<double>(sc.n) * sc.n;
  const auto pairs = parallel_map<Pair>(trials, [&](std::size_t t) {
    const auto r = sampler.sample_moduli(t);
    const double mx = *std::max_element(r.begin(), r.end());
    const double mn = *std::min_element(r.begin(), r.end());
    if (sc.regime == ScalingConstants::Regime::SoftHard) {
      return Pair{sc.c * n2 / (sc.rho * sc.rho) * (mx - sc.r1),
                  sc.c_prime * n2 / (sc.rho * sc.rho) * (sc.r0 - mn)};
    }
    return Pair{sc.a_n * (mx - sc.b_n), sc.a_n_prime * (sc.b_n_prime - mn)};
  });
  ExtremesSample s;
  for (const auto& p : pairs) {
    s.omega.push_back(p.omega);
    s.u.push_back(p.u);
  }
  std::sort(s.omega.begin(), s.omega.end());
  std::sort(s.u.begin(), s.u.end());
  return s;
}

Histogram histogram_profile(const ModuliSampler& sampler, int trials,
                            const std::vector<double>& edges) {
  if (edges.size() < 2) throw DomainError("histogram needs at least two edges");
  if (!std::is_sorted(edges.begin(), edges.end())) throw DomainError("histogram edges must increase");
  const std::size_t bins = edges.size() - 1;
  const auto per_trial = parallel_map<std::vector<int>>(trials, [&](std::size_t t) {
    std::vector<int> c(bins, 0);
    for (double r : sampler.sample_moduli(t)) {
      if (r < edges.front() || r >= edges.back()) continue;
      const std::size_t k = std::upper_bound(edges.begin(), edges.end(), r) - edges.begin() - 1;
      ++c[k];
    }
    return c;
  });
  Histogram h;
  h.edges = edges;
  h.trials = trials;
  h.counts.assign(bins, 0.0);
  for (const auto& c : per_trial) {
    for (std::size_t k = 0; k < bins; ++k) h.counts[k] += c[k];
  }
  h.density.resize(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    h.density[k] = h.counts[k] / (trials * (edges[k + 1] - edges[k]));
  }
  return h;
}

double ks_distance(const std::vector<double>& sorted, const std::function<double(double)>& cdf) {
  const double m = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, std::abs(f - i / m), std::abs((i + 1) / m - f)});
  }
  return d;
}

double ks_two_sample(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> x = a;
  std::vector<double> y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double d = 0.0;
  for (double v : x) d = std::max(d, std::abs(ecdf(x, v) - ecdf(y, v)));
  for (double v : y) d = std::max(d, std::abs(ecdf(x, v) - ecdf(y, v)));
  return d;
}

std::function<double(double)> tabulated_cdf(std::vector<double> x, std::vector<double> p) {
  return [x = std::move(x), p = std::move(p)](double v) {
    if (v <= x.front()) return p.front();
    if (v >= x.back()) return p.back();
    const std::size_t i = std::upper_bound(x.begin(), x.end(), v) - x.begin() - 1;
    const double t = (v - x[i]) / (x[i + 1] - x[i]);
    return p[i] + t * (p[i + 1] - p[i]);
  };
}

}  // namespace acre
