#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace acre {

struct QuadOptions {
  double abs_tol = 0.0;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
};

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

/// Nodes and weights of an N-point Gauss-Legendre rule on [-1, 1].
struct RuleNodes {
  std::vector<double> x;
  std::vector<double> w;
};
const RuleNodes& gauss_legendre_rule(int n);

namespace detail {

template <class T>
struct Panel {
  double a;
  double b;
  T value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
auto kronrod15(F& f, double a, double b) {
  using K = boost::math::quadrature::gauss_kronrod<double, 15>;
  using G = boost::math::quadrature::gauss<double, 7>;
  using T = decltype(f(a));
  const auto& x = K::abscissa();
  const auto& wk = K::weights();
  const auto& wg = G::weights();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T f0 = f(c);
  T kr = f0 * wk[0];
  T ga = f0 * wg[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    T s = f(c - h * x[i]) + f(c + h * x[i]);
    kr += s * wk[i];
    if (i % 2 == 0) ga += s * wg[i / 2];
  }
  return Panel<T>{a, b, kr * h, std::abs((kr - ga) * h)};
}

}  // namespace detail

/// Global adaptive Gauss-Kronrod (7/15) over the finite breakpoints given.
/// Works for real and complex integrands.
template <class F>
auto integrate(F&& f, std::span<const double> points, const QuadOptions& opt = {}) {
  using T = decltype(f(points[0]));
  using P = detail::Panel<T>;
  std::priority_queue<P> heap;
  T total{};
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i] < points[i + 1])) continue;
    P p = detail::kronrod15(f, points[i], points[i + 1]);
    total += p.value;
    err += p.error;
    heap.push(p);
  }
  int count = static_cast<int>(heap.size());
  auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };
  while (!heap.empty() && err > target() && count < opt.max_intervals) {
    P p = heap.top();
    const double m = 0.5 * (p.a + p.b);
    if (!(p.a < m && m < p.b) ||
        (p.b - p.a) < 1e-15 * std::max(std::abs(p.a), std::abs(p.b))) {
      break;
    }
    heap.pop();
    P l = detail::kronrod15(f, p.a, m);
    P r = detail::kronrod15(f, m, p.b);
    total += (l.value + r.value) - p.value;
    err += (l.error + r.error) - p.error;
    heap.push(l);
    heap.push(r);
    ++count;
  }
  // Resum from scratch so that running-sum drift does not leak into results.
  QuadResult<T> res;
  std::vector<P> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const P& a, const P& b) { return a.a < b.a; });
  double e = 0.0;
  for (const P& p : all) {
    res.value += p.value;
    e += p.error;
  }
  res.error = e;
  res.intervals = count;
  res.converged = e <= std::max(opt.abs_tol, opt.rel_tol * std::abs(res.value));
  return res;
}

template <class F>
auto integrate(F&& f, std::initializer_list<double> points, const QuadOptions& opt = {}) {
  std::vector<double> p(points);
  return integrate(std::forward<F>(f), std::span<const double>(p), opt);
}

/// Fixed-order composite Gauss-Legendre rule: `panels` equal panels between
/// each pair of consecutive breakpoints.
template <class F>
auto integrate_fixed(F&& f, std::span<const double> points, int order, int panels) {
  const RuleNodes& r = gauss_legendre_rule(order);
  using T = decltype(f(points[0]));
  T total{};
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double a = points[i];
    const double b = points[i + 1];
    if (!(a < b)) continue;
    const double step = (b - a) / panels;
    for (int k = 0; k < panels; ++k) {
      const double c = a + (k + 0.5) * step;
      const double h = 0.5 * step;
      T s{};
      for (std::size_t q = 0; q < r.x.size(); ++q) s += r.w[q] * f(c + h * r.x[q]);
      total += s * h;
    }
  }
  return total;
}

}  // namespace acre
