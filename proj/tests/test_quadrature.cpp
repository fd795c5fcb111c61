#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "acre/quadrature.hpp"
#include "acre/special.hpp"

TEST_CASE("adaptive rule integrates smooth functions") {
  const auto r = acre::integrate([](double x) { return std::exp(-x * x / 2.0); }, {-8.0, 8.0});
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(acre::kSqrt2Pi).epsilon(1e-13));
}

TEST_CASE("breakpoints resolve kinks") {
  const auto r = acre::integrate([](double x) { return std::abs(x - 0.3); }, {-1.0, 0.3, 1.0});
  CHECK(r.value == doctest::Approx(0.5 * 1.3 * 1.3 + 0.5 * 0.7 * 0.7).epsilon(1e-14));
}

TEST_CASE("integrable endpoint singularity") {
  const auto r = acre::integrate([](double x) { return 1.0 / std::sqrt(x); }, {0.0, 1.0},
                                 {.abs_tol = 0.0, .rel_tol = 1e-10, .max_intervals = 4000});
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("complex integrand") {
  const auto r = acre::integrate(
      [](double t) { return std::exp(std::complex<double>(0.0, t)); }, {0.0, acre::kPi});
  CHECK(r.value.real() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(r.value.imag() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("fixed rule is exact for polynomials of degree 2n-1") {
  const std::vector<double> pts{-1.0, 2.0};
  for (int order : {10, 16, 20}) {
    const int deg = 2 * order - 1;
    const auto v = acre::integrate_fixed([&](double x) { return std::pow(x, deg); }, pts, order, 1);
    const double exact = (std::pow(2.0, deg + 1) - 1.0 * std::pow(-1.0, deg + 1)) / (deg + 1);
    CAPTURE(order);
    CHECK(v == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("Gauss-Legendre weights sum to two") {
  for (int n : {10, 16, 20, 30, 40}) {
    const auto& rule = acre::gauss_legendre_rule(n);
    REQUIRE(rule.x.size() == static_cast<std::size_t>(n));
    double s = 0.0;
    for (double w : rule.w) s += w;
    CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("unsupported orders are rejected") {
  CHECK_THROWS_AS(acre::gauss_legendre_rule(7), std::invalid_argument);
}
