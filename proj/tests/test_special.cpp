#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "acre/special.hpp"

using acre::kInf;

namespace {

struct Ref {
  double x;
  double value;
};

// 40-digit reference values.
const Ref kErfcx[] = {
    {-5.0, 144009798674.66104041},      {-3.0, 16205.988853999586625},
    {-1.5, 18.653886256262733939},      {-0.7, 2.7387021025613167788},
    {-0.2, 1.2726020284831957299},      {0.0, 1.0},
    {1e-8, 0.99999998871620842904},     {0.01, 0.98881546104634251033},
    {0.05, 0.94599004355496147836},     {0.3, 0.73459933456765514992},
    {0.5, 0.61569034419292587487},      {0.9, 0.45653165132311703252},
    {1.2, 0.37853741692923973161},      {1.5, 0.32158541645431750235},
    {2.0, 0.25539567631050574387},      {3.5, 0.1552936556088942974},
    {5.0, 0.11070463773306862637},      {7.5, 0.074573693062876683005},
    {10.0, 0.056140992743822585858},    {14.0, 0.040197228650218459306},
    {20.0, 0.028174348741051319319},    {24.9, 0.022639987776049506286},
    {25.1, 0.022459875817581388236},    {30.0, 0.018795888861416751497},
    {45.0, 0.012534452900894467051},    {60.0, 0.0094018542751763885888},
    {100.0, 0.0056416137829894329036},  {250.0, 0.0022567402805576318888},
    {1e3, 0.0005641893014533876542},    {1e4, 0.000056418958072680841152},
};

struct Ref2 {
  double a;
  double b;
  double value;
};

const Ref2 kLogGauss[] = {
    {-2.0, 2.0, 0.87237062091228257823},
    {-0.025, 0.025, -2.9958364358804659461},
    {0.0, kInf, 0.22579135264472743236},
    {3.0, 4.0, -5.7125292533335523237},
    {10.0, 12.0, -52.312346617540936469},
    {40.0, 41.0, -803.68950348054911543},
    {-41.0, -40.0, -803.68950348054911543},
    {-kInf, 0.0, 0.22579135264472743236},
    {-1.0, 30.0, 0.74618475418122285225},
    {5.0, 5.001, -19.410254403773711317},
    {-60.0, 60.0, 0.91893853320467274178},
    {30.0, kInf, -453.40230542313852437},
};

}  // namespace

TEST_CASE("erfcx matches reference values") {
  for (const auto& r : kErfcx) {
    CAPTURE(r.x);
    CHECK(acre::erfcx(r.x) == doctest::Approx(r.value).epsilon(4e-15));
  }
}

TEST_CASE("erfcx agrees with std::erfc where that is accurate") {
  for (double x = -3.0; x <= 3.0; x += 0.125) {
    CAPTURE(x);
    CHECK(acre::erfcx(x) == doctest::Approx(std::exp(x * x) * std::erfc(x)).epsilon(1e-13));
  }
}

TEST_CASE("erfcx is decreasing and has the 1/(x sqrt(pi)) tail") {
  double prev = acre::erfcx(-4.0);
  for (double x = -3.9; x < 40.0; x += 0.1) {
    const double v = acre::erfcx(x);
    CHECK(v < prev);
    prev = v;
  }
  const double x = 1e6;
  CHECK(acre::erfcx(x) * x * acre::kSqrtPi == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::isinf(acre::erfcx(-30.0)));
}

TEST_CASE("log_gauss_interval matches reference values") {
  for (const auto& r : kLogGauss) {
    CAPTURE(r.a);
    CAPTURE(r.b);
    CHECK(acre::log_gauss_interval(r.a, r.b) == doctest::Approx(r.value).epsilon(1e-13));
  }
}

TEST_CASE("gauss_interval basics") {
  CHECK(acre::gauss_interval(-kInf, kInf) == doctest::Approx(acre::kSqrt2Pi).epsilon(1e-15));
  CHECK(acre::gauss_interval(1.0, 1.0) == 0.0);
  CHECK(acre::gauss_interval(-0.3, 0.7) ==
        doctest::Approx(acre::gauss_interval(-0.7, 0.3)).epsilon(1e-15));
  const double a = 0.4, b = 1.1, c = 2.5;
  CHECK(acre::gauss_interval(a, c) ==
        doctest::Approx(acre::gauss_interval(a, b) + acre::gauss_interval(b, c)).epsilon(1e-14));
}

TEST_CASE("normal_cdf symmetry") {
  CHECK(acre::normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-16));
  for (double x : {0.1, 1.0, 3.0, 9.0}) {
    CHECK(acre::normal_cdf(x) + acre::normal_cdf(-x) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("log_add_exp") {
  CHECK(acre::log_add_exp(0.0, 0.0) == doctest::Approx(std::log(2.0)));
  CHECK(acre::log_add_exp(1000.0, 1000.0) == doctest::Approx(1000.0 + std::log(2.0)));
  CHECK(acre::log_add_exp(-kInf, 3.0) == 3.0);
  CHECK(acre::log_add_exp(-kInf, -kInf) == -kInf);
}
