#pragma once

#include <limits>

namespace acre {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kSqrt2 = 1.414213562373095048801688724209698079;
inline constexpr double kSqrtPi = 1.772453850905516027298167483341145182;
inline constexpr double kSqrt2Pi = 2.506628274631000502415765284811045253;
inline constexpr double kSqrtHalfPi = 1.253314137315500251207882642405522627;

/// Scaled complementary error function exp(x^2) erfc(x).
double erfcx(double x);

/// Integral of exp(-t^2/2) over [a, b]; either end may be infinite.
double gauss_interval(double a, double b);

/// Logarithm of gauss_interval, accurate deep in the tails.
double log_gauss_interval(double a, double b);

/// Standard normal distribution function.
double normal_cdf(double x);

/// log(exp(a) + exp(b)) without overflow.
double log_add_exp(double a, double b);

}  // namespace acre
