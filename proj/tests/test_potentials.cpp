#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "acre/errors.hpp"
#include "acre/potentials.hpp"
#include "acre/specfile.hpp"
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

EnsembleSpec power_log(int n, double rho, double lambda) {
  EnsembleSpec s = ginibre(n, rho);
  s.potential = RadialPotential::power_log(n, rho, lambda);
  return s;
}

}  // namespace

TEST_CASE("potentials vanish at the unit circle") {
  CHECK(RadialPotential::induced_ginibre(100, 2.0).g(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(RadialPotential::power_log(100, 2.0, 3.0).g(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(RadialPotential::custom({2.0, 0.5}, 1.5).g(1.0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("log-variable forms agree with the radial forms") {
  const RadialPotential pots[] = {RadialPotential::induced_ginibre(64, 2.0),
                                  RadialPotential::power_log(64, 3.0, 2.5),
                                  RadialPotential::custom({1.0, 0.25, 0.1}, 0.75)};
  for (const auto& g : pots) {
    for (double r : {0.3, 0.9, 0.999, 1.0, 1.001, 1.4, 2.5}) {
      const double u = std::log(r);
      CAPTURE(r);
      CHECK(g.g_log(u) == doctest::Approx(g.g(r)).epsilon(1e-12).scale(1.0));
      CHECK(g.rgp_log(u) == doctest::Approx(r * g.dg(r)).epsilon(1e-12));
      CHECK(g.lap_log(u) == doctest::Approx(4.0 * r * r * g.laplacian(r)).epsilon(1e-12));
    }
  }
}

TEST_CASE("derivatives match central differences") {
  const RadialPotential g = RadialPotential::power_log(32, 2.0, 1.7);
  const double h = 1e-5;
  for (double r : {0.5, 1.0, 1.6}) {
    CAPTURE(r);
    CHECK(g.dg(r) == doctest::Approx((g.g(r + h) - g.g(r - h)) / (2 * h)).epsilon(1e-7));
    CHECK(g.d2g(r) == doctest::Approx((g.dg(r + h) - g.dg(r - h)) / (2 * h)).epsilon(1e-7));
    CHECK(g.d3g(r) == doctest::Approx((g.d2g(r + h) - g.d2g(r - h)) / (2 * h)).epsilon(1e-6));
  }
}

TEST_CASE("g_log stays accurate near the unit circle at large n") {
  const RadialPotential g = RadialPotential::induced_ginibre(100000, 2.0);
  const double a = 100000.0 / 4.0;
  for (double u : {1e-9, -3e-7, 2e-5}) {
    // a (e^{2u} - 1) - 2 (a - 1/2) u, expanded.
    const double x = 2.0 * u;
    const double exact = a * (x * x / 2 + x * x * x / 6 + x * x * x * x / 24) + u;
    CAPTURE(u);
    CHECK(g.g_log(u) == doctest::Approx(exact).epsilon(1e-9));
  }
}

TEST_CASE("induced Ginibre r_tau has a closed form") {
  const int n = 1024;
  const double rho = 2.0;
  const EnsembleSpec s = ginibre(n, rho);
  const double a = n / (rho * rho);
  const double b = a - 0.5;
  for (double tau : {0.0, 0.1, 0.25, 0.5, 0.75, 1.0}) {
    CAPTURE(tau);
    CHECK(r_tau(s, tau) == doctest::Approx(std::sqrt((b + tau) / a)).epsilon(1e-12));
  }
  CHECK(r_tau(s, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("r_tau solves r g'(r) = 2 tau and increases in tau") {
  const EnsembleSpec s = power_log(500, 3.0, 2.0);
  double prev = 0.0;
  for (double tau = 0.05; tau <= 1.0; tau += 0.05) {
    const double r = r_tau(s, tau);
    CHECK(r * s.potential.dg(r) == doctest::Approx(2.0 * tau).epsilon(1e-12));
    CHECK(r > prev);
    prev = r;
  }
  CHECK(r_tau(s, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::exp(u_tau(s.potential, 0.3)) == doctest::Approx(r_tau(s, 0.3)).epsilon(1e-14));
}

TEST_CASE("u_tau returns -inf when the root is the origin") {
  const RadialPotential g = RadialPotential::custom({1.0}, 0.0);
  CHECK(u_tau(g, 0.0) == -kInf);
}

TEST_CASE("droplet radii follow the width expansion") {
  const double rho = 2.0;
  const int n = 1024;
  const Droplet d = droplet_radii(ginibre(n, rho));
  CHECK(std::abs(d.r1 - (1.0 + rho * rho / (4.0 * n))) <= 1e-5);
  CHECK(std::abs(d.r0 - (1.0 - rho * rho / (4.0 * n))) <= 1e-5);
  CHECK(d.rho_n == doctest::Approx(rho).epsilon(1e-12));
}

TEST_CASE("r_tau expansion error shrinks faster than 1/n") {
  const double rho = 2.0, tau = 0.25;
  double prev = INFINITY;
  for (int n : {256, 1024, 4096}) {
    const double r = r_tau(ginibre(n, rho), tau);
    const double e = n * std::abs(r - (1.0 - rho * rho * (1.0 - 2.0 * tau) / (4.0 * n)));
    CHECK(e < prev);
    prev = e;
  }
  CHECK(prev <= 0.01);
}

TEST_CASE("equilibrium measure has unit mass") {
  const double rho = 3.0;
  const int n = 400;
  const BoundaryCondition bcs[] = {BoundaryCondition::free(),
                                   BoundaryCondition::interpolated(kInf, kInf),
                                   BoundaryCondition::hard_annulus(0.2, 0.7),
                                   BoundaryCondition::hard_disk(0.6)};
  for (const auto& bc : bcs) {
    CAPTURE(to_string(bc));
    CHECK(equilibrium_total_mass(ginibre(n, rho, bc)) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("hard walls carry the excluded mass") {
  const EnsembleSpec s = ginibre(400, 3.0, BoundaryCondition::hard_annulus(0.2, 0.7));
  const EquilibriumDensity e = equilibrium_density(s, 1.0);
  CHECK(e.inner_mass == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(e.outer_mass == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("effective potential") {
  const EnsembleSpec s = ginibre(64, 2.0, BoundaryCondition::hard_disk(0.5));
  CHECK(effective_potential(s, 0.999) == doctest::Approx(s.potential.g(0.999)));
  CHECK(std::isinf(effective_potential(s, 1.001)));
  const EnsembleSpec f = ginibre(64, 2.0);
  CHECK(effective_potential(f, 1.3) == doctest::Approx(f.potential.g(1.3)));
  // The obstacle lies below the potential and meets it on the droplet.
  CHECK(obstacle(f, 1.3) < f.potential.g(1.3));
  CHECK(obstacle(f, 1.0) == doctest::Approx(f.potential.g(1.0)).scale(1.0));
}

TEST_CASE("validate accepts the built-in families") {
  CHECK(validate(ginibre(64, 2.0)).passed());
  CHECK(validate(power_log(256, 4.0, 3.0)).passed());
  EnsembleSpec bad = ginibre(64, 2.0);
  bad.rho = 5.0;
  CHECK_FALSE(validate(bad).rho_ok);
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(RadialPotential::induced_ginibre(1, 4.0), DomainError);
  CHECK_THROWS_AS(RadialPotential::custom({}, 1.0), DomainError);
  EnsembleSpec s = ginibre(16, 1.0);
  s.bc = BoundaryCondition::hard_annulus(0.6, 0.4);
  CHECK_THROWS_AS(check_spec(s), DomainError);
  s.bc = BoundaryCondition::hard_disk(0.0);
  CHECK_THROWS_AS(check_spec(s), DomainError);
  s.bc = BoundaryCondition::interpolated(-1.0, 1.0);
  CHECK_THROWS_AS(check_spec(s), DomainError);
}

TEST_CASE("spec text round trips") {
  EnsembleSpec s = power_log(300, 2.5, 1.5);
  s.bc = BoundaryCondition::interpolated(kInf, 3.0);
  const EnsembleSpec t = parse_spec_text(spec_to_text(s));
  CHECK(spec_to_text(t) == spec_to_text(s));
  CHECK(spec_hash(t) == spec_hash(s));
  CHECK(spec_hash(t).size() == 16);
  CHECK(t.bc.c1 == kInf);
  CHECK_THROWS_AS(parse_spec_text("n=10\nrho=1\nfamily=induced-ginibre\nbogus=1\n"), ConfigError);
}

TEST_CASE("FNV-1a reference digests") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
