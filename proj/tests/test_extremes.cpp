#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "acre/errors.hpp"
#include "acre/extremes.hpp"
#include "acre/limits.hpp"
#include "acre/quadrature.hpp"
#include "acre/special.hpp"

using namespace acre;

namespace {

EnsembleSpec ginibre(int n, double rho, BoundaryCondition bc = BoundaryCondition::free()) {
  EnsembleSpec s;
  s.n = n;
  s.rho = rho;
  s.potential = RadialPotential::induced_ginibre(n, rho);
  s.bc = bc;
  return s;
}

// P(max <= r) from per-degree quadrature in r.
double brute_cdf_max(const EnsembleSpec& s, double r) {
  double p = 1.0;
  for (int j = 0; j < s.n; ++j) {
    auto f = [&](double t) { return 2.0 * std::pow(t, 2 * j + 1) * std::exp(-s.n * s.potential.g(t)); };
    QuadOptions opt;
    opt.rel_tol = 1e-13;
    const double below = integrate(f, {0.0, std::min(r, 1.0), r}, opt).value;
    const double above = integrate(f, {r, std::max(r, 1.0), 4.0}, opt).value;
    p *= below / (below + above);
  }
  return p;
}

}  // namespace

TEST_CASE("one Gaussian point") {
  EnsembleSpec s;
  s.n = 1;
  s.rho = 1.0;
  s.potential = RadialPotential::custom({1.0}, 0.0);
  const NormTable t = norm_table(s);
  for (double r : {0.05, 0.3, 1.0, 2.0, 4.5}) {
    CAPTURE(r);
    CHECK(gap_cdf_max(t, r) == doctest::Approx(-std::expm1(-r * r)).epsilon(1e-12));
    CHECK(gap_cdf_min(t, r) == doctest::Approx(std::exp(-r * r)).epsilon(1e-12));
    const TailMass up = degree_tail(t, 0, r, true);
    CHECK(up.mass == doctest::Approx(std::exp(-r * r)).epsilon(1e-12));
    CHECK(up.log_complement == doctest::Approx(std::log1p(-std::exp(-r * r))).epsilon(1e-12));
  }
  CHECK(gap_cdf_max(t, 0.0) == 0.0);
  CHECK(gap_cdf_min(t, 0.0) == 1.0);
}

TEST_CASE("product formula agrees with direct quadrature") {
  const EnsembleSpec s = ginibre(12, 2.0);
  const NormTable t = norm_table(s);
  for (double r : {0.97, 1.0, 1.05, 1.1, 1.2}) {
    CAPTURE(r);
    CHECK(gap_cdf_max(t, r) == doctest::Approx(brute_cdf_max(s, r)).epsilon(1e-10));
  }
}

TEST_CASE("tail masses are probabilities and monotone in r") {
  const NormTable t = norm_table(ginibre(200, 3.0, BoundaryCondition::interpolated(2.0, 0.5)));
  for (int j : {0, 100, 199}) {
    double prev = 1.0;
    for (double r = 0.95; r <= 1.05; r += 0.0025) {
      const TailMass m = degree_tail(t, j, r, true);
      CHECK(m.mass >= 0.0);
      CHECK(m.mass <= prev + 1e-15);
      CHECK(std::abs(-std::expm1(m.log_complement) - m.mass) <= 1e-15);
      const TailMass lo = degree_tail(t, j, r, false);
      CHECK(lo.mass + m.mass == doctest::Approx(1.0).epsilon(1e-10));
      prev = m.mass;
    }
  }
}

TEST_CASE("CDFs are monotone") {
  const NormTable t = norm_table(ginibre(400, 2.0));
  const ScalingConstants sc = scaling_constants(t.spec());
  double pmax = 0.0, pmin = 0.0;
  for (double x = -2.0; x <= 4.0; x += 0.25) {
    const double a = omega_cdf(t, sc, x);
    const double b = u_cdf(t, sc, x);
    CHECK(a >= pmax);
    CHECK(b >= pmin);
    CHECK(a <= 1.0);
    CHECK(b <= 1.0);
    pmax = a;
    pmin = b;
  }
}

TEST_CASE("E_n controls the log of the maximum law") {
  const NormTable t = norm_table(ginibre(1000, 2.0));
  const ScalingConstants sc = scaling_constants(t.spec());
  double prev = INFINITY;
  for (double x = 0.0; x <= 6.0; x += 0.5) {
    const double e = En(t, sc, x);
    CAPTURE(x);
    CHECK(e < prev);
    prev = e;
    if (e < 0.5) {
      // omega_n <= x is max modulus <= b_n + x/a_n, while E_n uses r1 + eps_n(x); they coincide.
      CHECK(std::abs(-std::log(omega_cdf(t, sc, x)) - e) <= e * e);
    }
  }
}

TEST_CASE("scaling constants") {
  const ScalingConstants sc = scaling_constants(ginibre(1000, 2.0));
  const double n = 1000.0, rho = 2.0;
  const double cn = 2 * std::log(n / rho) - 2 * std::log(std::log(n)) - 2 * std::log(2 * kSqrt2Pi);
  CHECK(sc.c_n == doctest::Approx(cn).epsilon(1e-12));
  CHECK(sc.c_n_prime == doctest::Approx(cn).epsilon(1e-12));
  CHECK(sc.a_n == doctest::Approx(2 * n / rho * std::sqrt(cn)).epsilon(1e-12));
  CHECK(sc.max_radius(0.0) == doctest::Approx(sc.b_n).epsilon(1e-15));
  CHECK(sc.min_radius(1.0) < sc.min_radius(0.0));
  CHECK(sc.reference(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("soft/hard regime") {
  const ScalingConstants sc = scaling_constants(ginibre(2000, 4.0, BoundaryCondition::interpolated(kInf, kInf)));
  CHECK(sc.regime == ScalingConstants::Regime::SoftHard);
  CHECK(sc.c == doctest::Approx(1.3917209442863911).epsilon(1e-12));
  CHECK(sc.c_prime == doctest::Approx(sc.c).epsilon(1e-12));
  CHECK(sc.max_radius(0.0) == sc.r1);
  CHECK(sc.reference(-1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK_THROWS_AS(sc.max_radius(0.5), DomainError);
  const NormTable t = norm_table(ginibre(200, 4.0, BoundaryCondition::interpolated(kInf, kInf)));
  const double r1 = droplet_radii(t.spec()).r1;
  CHECK(gap_cdf_max(t, r1) == 1.0);
  CHECK(gap_cdf_max(t, r1 * 0.999) < 1.0);
}

TEST_CASE("limit laws") {
  CHECK(gumbel_cdf(0.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(exponential_cdf(0.5) == 1.0);
  CHECK(exponential_cdf(-2.0) == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("unsupported regimes") {
  CHECK_THROWS_AS(scaling_constants(ginibre(1000, 2.0, BoundaryCondition::hard_annulus(0.1, 0.9))), Unsupported);
  CHECK_THROWS_AS(scaling_constants(ginibre(1000, 2.0, BoundaryCondition::hard_disk(0.5))), Unsupported);
  CHECK_THROWS_AS(scaling_constants(ginibre(1000, 2.0, BoundaryCondition::interpolated(kInf, 1.0))), Unsupported);
  CHECK_THROWS_AS(scaling_constants(ginibre(3, 2.0)), DomainError);
  const NormTable t = norm_table(ginibre(200, 4.0, BoundaryCondition::interpolated(kInf, kInf)));
  CHECK_THROWS_AS(En(t, scaling_constants(t.spec()), 0.0), Unsupported);
}

TEST_CASE("gap curve tracks the reference at moderate n") {
  const NormTable t = norm_table(ginibre(2000, 4.0, BoundaryCondition::interpolated(kInf, kInf)));
  const ScalingConstants sc = scaling_constants(t.spec());
  std::vector<double> xs;
  for (double x = -3.0; x <= 0.0; x += 0.25) xs.push_back(x);
  const GapCurve g = gap_curve(t, sc, xs);
  CHECK(g.sup_distance_max() <= 0.05);
  CHECK(g.sup_distance_min() <= 0.05);
}
