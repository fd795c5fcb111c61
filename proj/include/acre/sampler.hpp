#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "acre/extremes.hpp"
#include "acre/radialnorms.hpp"

namespace acre {

/// Counter-based generator: each (seed, trial, degree) pair owns an
/// independent stream.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t degree);
  std::uint64_t next();
  /// Uniform on (0, 1).
  double uniform();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Exact sampler of the moduli: the radius of degree j has density
/// 2 r^{2j+1} exp(-n Q_eff(r)) / ||z^j||^2, independently over j.
class ModuliSampler {
 public:
  static constexpr int kNodes = 2048;

  ModuliSampler(std::shared_ptr<const NormTable> table, std::uint64_t seed);

  const NormTable& table() const { return *table_; }
  int n() const { return static_cast<int>(degrees_.size()); }
  std::uint64_t seed() const { return seed_; }

  /// All n radii of one trial, ordered by degree.
  std::vector<double> sample_moduli(std::uint64_t trial) const;
  /// One draw of u = log r for degree j.
  double sample_degree(int j, CounterRng& rng) const;

  /// Table CDF of degree j at u = log r.
  double cdf_log(int j, double u) const;
  /// Inverse of cdf_log, returning u.
  double inverse_cdf_log(int j, double p) const;

  /// Range of probabilities covered by the table of degree j.
  std::pair<double, double> table_range(int j) const;

 private:
  struct Degree {
    std::vector<double> u;
    std::vector<double> cdf;
    std::vector<double> slope;  // du/dF at the nodes, limited for monotonicity
    double log_norm = 0.0;
    double scale = 1.0;
  };

  double tail_draw(int j, bool upper, CounterRng& rng) const;

  std::shared_ptr<const NormTable> table_;
  std::uint64_t seed_;
  std::vector<Degree> degrees_;
};

/// Exact per-degree CDF P(radius_j <= r) by quadrature.
double degree_cdf(const NormTable& table, int j, double r);

struct ExtremesSample {
  std::vector<double> omega;  // sorted
  std::vector<double> u;      // sorted

  double ecdf_omega(double x) const;
  double ecdf_u(double x) const;
};

ExtremesSample ecdf_extremes(const ModuliSampler& sampler, const ScalingConstants& sc,
                             int trials);

/// Counts per unit radius of all moduli, averaged over trials; integrates to n
/// over a grid that covers the support. edges has one more entry than the result.
struct Histogram {
  std::vector<double> edges;
  std::vector<double> counts;  // raw counts summed over trials
  std::vector<double> density; // counts / (trials * bin width)
  int trials = 0;
};

Histogram histogram_profile(const ModuliSampler& sampler, int trials,
                            const std::vector<double>& edges);

/// Empirical CDF of sorted samples.
double ecdf(const std::vector<double>& sorted, double x);

/// sup |F_emp - F| over the jump points of the sorted sample.
double ks_distance(const std::vector<double>& sorted, const std::function<double(double)>& cdf);

double ks_two_sample(const std::vector<double>& a, const std::vector<double>& b);

/// Piecewise-linear CDF through (x, p) with clamping at the ends.
std::function<double(double)> tabulated_cdf(std::vector<double> x, std::vector<double> p);

}  // namespace acre
