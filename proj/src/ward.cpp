#include "acre/ward.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "acre/errors.hpp"
#include "acre/parallel.hpp"
#include "acre/quadrature.hpp"
#include "acre/special.hpp"

namespace acre {
namespace {

using cd = std::complex<double>;

constexpr double kPanel = 0.5;
constexpr double kMinR = 1e-10;

int panel_count(double len) { return std::max(1, static_cast<int>(std::ceil(len / kPanel - 1e-12))); }

// Nodes for the double integral over xi > eta of a(xi) a(eta) exp(-s (xi - eta)).
class Transverse {
 public:
  Transverse(const KernelForm& f, double lo, double hi, int order) : f_(f) {
    const RuleNodes& gl = gauss_legendre_rule(order);
    const int panels = panel_count(hi - lo);
    const double w = (hi - lo) / panels;
    for (int k = 0; k < panels; ++k) {
      const double a = lo + k * w;
      starts_.push_back(a);
      for (std::size_t i = 0; i < gl.x.size(); ++i) {
        const double xi = a + 0.5 * w * (1.0 + gl.x[i]);
        Node nd;
        nd.xi = xi;
        nd.w = 0.5 * w * gl.w[i];
        nd.log_mu = f.log_mu(xi);
        nd.panel = k;
        const double hw = 0.5 * (xi - a);
        for (std::size_t m = 0; m < gl.x.size(); ++m) {
          const double eta = a + hw * (1.0 + gl.x[m]);
          nd.inner.push_back({eta, hw * gl.w[m], f.log_mu(eta)});
        }
        nodes_.push_back(std::move(nd));
      }
    }
    starts_.push_back(hi);
  }

  // Integral over the full square of a(xi) a(eta) exp(-s |xi - eta|),
  // a(xi) = exp(-(p - xi)^2 / 2) mu(xi).
  double square(double p, double s) const {
    auto a = [&](double xi, double log_mu) {
      const double d = p - xi;
      return std::exp(-0.5 * d * d + log_mu);
    };
    double total = 0.0;
    double prefix = 0.0;  // weighted mass below the current panel start, decayed to it
    int panel = 0;
    double panel_acc = 0.0;  // mass inside the current panel, decayed to its end
    for (const Node& nd : nodes_) {
      if (nd.panel != panel) {
        const double next = starts_[nd.panel];
        prefix = prefix * std::exp(-s * (next - starts_[panel])) + panel_acc;
        panel_acc = 0.0;
        panel = nd.panel;
      }
      const double ai = nd.w * a(nd.xi, nd.log_mu);
      double inner = 0.0;
      for (const Inner& in : nd.inner) inner += in.w * a(in.eta, in.log_mu) * std::exp(-s * (nd.xi - in.eta));
      total += ai * (inner + prefix * std::exp(-s * (nd.xi - starts_[panel])));
      panel_acc += ai * std::exp(-s * (starts_[panel + 1] - nd.xi));
    }
    return 2.0 * total;
  }

 private:
  struct Inner {
    double eta;
    double w;
    double log_mu;
  };
  struct Node {
    double xi;
    double w;
    double log_mu;
    int panel;
    std::vector<Inner> inner;
  };
  const KernelForm& f_;
  std::vector<double> starts_;
  std::vector<Node> nodes_;
};

double exponential_transform(double x, double R, int order) {
  const RuleNodes& gl = gauss_legendre_rule(order);
  double total = 0.0;
  for (std::size_t i = 0; i < gl.x.size(); ++i) {
    const double M = 0.5 * (1.0 + gl.x[i]);
    const double wM = 0.5 * gl.w[i];
    for (std::size_t k = 0; k < gl.x.size(); ++k) {
      const double m = 0.5 * M * (1.0 + gl.x[k]);
      const double wm = 0.5 * M * gl.w[k];
      const double g = std::exp(2.0 * x * (M + m)) / (2.0 * M) +
                       std::exp(2.0 * x * M) * std::expm1(2.0 * x * m) / (2.0 * m);
      total += wM * wm * M * m * g;
    }
  }
  return 2.0 * total / R;
}

double base_transform(const KernelForm& f, double x, const WardOptions& opt) {
  if (!f.inside(x)) throw DomainError("Cauchy transform requested outside the support");
  const double R = R_limit(f.base, x);
  if (!(R > kMinR)) throw DomainError("Cauchy transform refused where R is below 1e-10");
  if (f.exponential) return exponential_transform(x, R, opt.order);

  std::vector<double> walls;
  for (double w : f.base.walls()) walls.push_back(w);
  const double left = std::max(x - opt.L, f.x_lo);
  const double right = std::min(x + opt.L, f.x_hi);
  const double p_lo = x + left;
  const double lo = std::isfinite(f.xi_lo) ? f.xi_lo : std::min(p_lo, f.xi_hi) - 14.0;
  const Transverse tr(f, lo, f.xi_hi, opt.order);
  const RuleNodes& gl = gauss_legendre_rule(opt.order);
  const double amp_x = f.log_amp2(x);

  auto piece = [&](double a, double b, double sign) {
    double s = 0.0;
    if (!(b > a)) return s;
    const int panels = panel_count(b - a);
    const double w = (b - a) / panels;
    for (int k = 0; k < panels; ++k) {
      const double c = a + (k + 0.5) * w;
      for (std::size_t i = 0; i < gl.x.size(); ++i) {
        const double xp = c + 0.5 * w * gl.x[i];
        const double d = x - xp;
        const double g = std::exp(amp_x + f.log_amp2(xp) - d * d) * tr.square(x + xp, std::abs(d));
        s += sign * 0.5 * w * gl.w[i] * g;
      }
    }
    return s;
  };
  auto side = [&](double a, double b, double sign) {
    std::vector<double> cuts{a};
    for (double w : walls) {
      if (w > a && w < b) cuts.push_back(w);
    }
    cuts.push_back(b);
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) s += piece(cuts[i], cuts[i + 1], sign);
    return s;
  };
  return (side(left, x, 1.0) + side(x, right, -1.0)) / R;
}

}  // namespace

std::complex<double> cauchy_transform(const LimitProfile& p, std::complex<double> z,
                                      const WardOptions& opt) {
  const KernelForm f = kernel_form(p);
  const double k = f.scale;
  return k * base_transform(f, k * z.real(), opt);
}

std::complex<double> cauchy_transform_polar(const LimitProfile& p, std::complex<double> z,
                                            double L, int angles) {
  const double R = R_limit(p, z.real());
  if (!(R > kMinR)) throw DomainError("Cauchy transform refused where R is below 1e-10");
  const std::vector<double> walls = p.walls();
  cd total = 0.0;
  for (int a = 0; a < angles; ++a) {
    const double th = 2.0 * kPi * (a + 0.5) / angles;
    const cd e = std::polar(1.0, th);
    std::vector<double> pts{0.0};
    for (double w : walls) {
      if (std::abs(e.real()) < 1e-14) continue;
      const double t = (w - z.real()) / e.real();
      if (t > 0.0 && t < L) pts.push_back(t);
    }
    pts.push_back(L);
    std::sort(pts.begin(), pts.end());
    auto g = [&](double t) { return std::norm(K_limit(p, z, z + t * e)); };
    QuadOptions opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-15;
    const double radial = integrate(g, std::span<const double>(pts), opt).value;
    total += radial * std::conj(e);
  }
  return -total * (2.0 * kPi / angles) / (kPi * R);
}

double ward_rhs(const LimitProfile& p, double x, double h, bool indicator_terms) {
  using V = LimitProfile::Variant;
  const KernelForm f = kernel_form(p);
  const double k2 = p.variant == V::GinibreHard ? 0.0 : f.scale * f.scale;
  const double R = R_limit(p, x);
  const double lp = std::log(R_limit(p, x + h));
  const double lm = std::log(R_limit(p, x - h));
  const double lap = 0.25 * (lp + lm - 2.0 * std::log(R)) / (h * h);
  double rhs = R - k2 - lap;
  if (indicator_terms && p.variant == V::Interpolated) {
    if (x < -0.25 * p.rho && std::isfinite(p.c1)) rhs += 1.0 - p.c1;
    if (x > 0.25 * p.rho && std::isfinite(p.c2)) rhs += 1.0 - p.c2;
  }
  return rhs;
}

WardReport ward_residual(const LimitProfile& p, const std::vector<double>& xs,
                         const std::vector<double>& ys, const WardOptions& opt) {
  if (!(opt.h > 0.0)) throw DomainError("Ward step must be positive");
  WardReport rep;
  rep.variant = p.name();
  rep.options = opt;
  const double h = opt.h;
  const auto [lo, hi] = p.support();
  const std::vector<double> walls = p.walls();
  std::vector<double> good;
  for (double x : xs) {
    bool ok = x - 3.0 * h >= lo && x + 3.0 * h <= hi;
    for (double w : walls) ok = ok && std::abs(x - w) >= 3.0 * h;
    if (ok) {
      good.push_back(x);
    } else {
      for (double y : ys) rep.excluded.emplace_back(x, y);
    }
  }
  std::vector<double> need;
  for (double x : good) {
    need.push_back(x - h);
    need.push_back(x);
    need.push_back(x + h);
  }
  std::sort(need.begin(), need.end());
  need.erase(std::unique(need.begin(), need.end()), need.end());
  const auto c = parallel_map<cd>(need.size(), [&](std::size_t i) {
    return cauchy_transform(p, {need[i], 0.0}, opt);
  });
  std::map<double, cd> table;
  for (std::size_t i = 0; i < need.size(); ++i) table[need[i]] = c[i];
  const auto rhs = parallel_map<double>(good.size(), [&](std::size_t i) {
    return ward_rhs(p, good[i], h, opt.indicator_terms);
  });
  for (std::size_t i = 0; i < good.size(); ++i) {
    const double x = good[i];
    for (double y : ys) {
      // C depends on Re z only, so the vertical neighbours share the centre value.
      const cd cxp = table.at(x + h);
      const cd cxm = table.at(x - h);
      const cd cyp = table.at(x);
      const cd cym = table.at(x);
      WardPoint pt;
      pt.x = x;
      pt.y = y;
      pt.dbar_c = 0.5 * ((cxp - cxm) / (2.0 * h) + cd(0.0, 1.0) * (cyp - cym) / (2.0 * h));
      pt.rhs = rhs[i];
      pt.residual = pt.dbar_c - pt.rhs;
      rep.max_residual = std::max(rep.max_residual, std::abs(pt.residual));
      rep.points.push_back(pt);
    }
  }
  return rep;
}

}  // namespace acre
