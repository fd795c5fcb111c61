// Acceptance criteria runner: `acceptance AC01` ... `acceptance AC13`, or no
// argument for all. Prints one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "acre/extremes.hpp"
#include "acre/finitekernel.hpp"
#include "acre/io.hpp"
#include "acre/limits.hpp"
#include "acre/quadrature.hpp"
#include "acre/radialnorms.hpp"
#include "acre/run.hpp"
#include "acre/sampler.hpp"
#include "acre/special.hpp"
#include "acre/ward.hpp"

using namespace acre;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [failed]");
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string list(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
  return s + "]";
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> v;
  const long k = std::lround((hi - lo) / step);
  for (long i = 0; i <= k; ++i) v.push_back(i == k ? hi : lo + i * step);
  return v;
}

EnsembleSpec ginibre(int n, double rho, BoundaryCondition bc = BoundaryCondition::free()) {
  EnsembleSpec s;
  s.n = n;
  s.rho = rho;
  s.potential = RadialPotential::induced_ginibre(n, rho);
  s.bc = bc;
  return s;
}

std::shared_ptr<const NormTable> table_of(const EnsembleSpec& s) {
  return std::make_shared<const NormTable>(norm_table(s));
}

bool near_wall(const LimitProfile& p, double x) {
  for (double w : p.walls()) {
    if (std::abs(x - w) <= 1e-9) return true;
  }
  return false;
}

double sup_error(const EnsembleSpec& s, const LimitProfile& p, const std::vector<double>& xs) {
  const KernelContext ctx = make_kernel_context(table_of(s));
  const auto fin = profile(ctx, xs);
  double e = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!near_wall(p, xs[i])) e = std::max(e, std::abs(fin[i] - R_limit(p, xs[i])));
  }
  return e;
}

std::vector<double> ladder_errors(int n0, double rho, const BoundaryCondition& bc, const LimitProfile& p,
                                  const std::vector<double>& xs) {
  std::vector<double> e;
  for (int n = n0; n <= 4096; n *= 4) e.push_back(sup_error(ginibre(n, rho, bc), p, xs));
  return e;
}

Outcome ac01() {
  Outcome o;
  double worst = 0.0;
  for (int n : {4, 64, 1024}) {
    EnsembleSpec s;
    s.n = n;
    s.rho = std::sqrt(static_cast<double>(n));
    s.potential = RadialPotential::custom({1.0}, 0.0);
    for (int j = 0; j <= 64; ++j) {
      // g(1) = 0 shifts the weight by e^{n}.
      const double exact = std::lgamma(j + 1.0) - (j + 1.0) * std::log(static_cast<double>(n)) + n;
      worst = std::max(worst, std::abs(log_weighted_norm(s, j) - exact) / std::abs(exact));
    }
  }
  o.require(worst <= 1e-10, "max relative error " + num(worst) + " <= 1e-10");
  return o;
}

Outcome ac02() {
  Outcome o;
  const auto e = ladder_errors(256, 4.0, BoundaryCondition::free(), LimitProfile::free(4.0), grid(-2, 2, 0.05));
  o.require(strictly_decreasing(e), "sup errors " + list(e) + " strictly decrease");
  o.require(e.back() <= 0.02, "final " + num(e.back()) + " <= 0.02");
  return o;
}

Outcome ac03() {
  Outcome o;
  const double rho = 4.0;
  const auto e = ladder_errors(256, rho, BoundaryCondition::interpolated(4, 4),
                               LimitProfile::interpolated(rho, 4, 4), grid(-2, 2, 0.05));
  o.require(strictly_decreasing(e), "sup errors " + list(e) + " strictly decrease");
  o.require(e.back() <= 0.02, "final " + num(e.back()) + " <= 0.02");
  double d1 = 0.0, d2 = 0.0;
  for (double x : grid(-3, 3, 0.01)) {
    d1 = std::max(d1, std::abs(R_limit(LimitProfile::interpolated(rho, 1, 1), x) - R_limit(LimitProfile::free(rho), x)));
    d2 = std::max(d2, std::abs(R_limit(LimitProfile::interpolated(rho, kInf, kInf), x) -
                               R_limit(LimitProfile::soft_hard(rho), x)));
  }
  o.require(d1 <= 1e-12, "c=(1,1) vs free " + num(d1));
  o.require(d2 <= 1e-12, "c=(inf,inf) vs soft/hard " + num(d2));
  return o;
}

Outcome ac04() {
  Outcome o;
  const double rho = 4.0;
  const auto e = ladder_errors(256, rho, BoundaryCondition::hard_annulus(1.0 / 16, 15.0 / 16),
                               LimitProfile::hard_annulus(rho, 1.0 / 16, 15.0 / 16), grid(-2, 2, 0.05));
  o.require(strictly_decreasing(e), "sup errors " + list(e) + " strictly decrease");
  o.require(e.back() <= 0.03, "final " + num(e.back()) + " <= 0.03");
  double d1 = 0.0, d2 = 0.0;
  for (double x : grid(-3, 3, 0.01)) {
    d1 = std::max(d1, std::abs(R_limit(LimitProfile::hard_annulus(rho, 0, 1), x) - R_limit(LimitProfile::soft_hard(rho), x)));
    if (std::abs(x) <= 2.0) {
      d2 = std::max(d2, std::abs(R_limit(LimitProfile::hard_annulus(rho, -1e3, 1e3), x) -
                                 R_limit(LimitProfile::free(rho), x)));
    }
  }
  o.require(d1 <= 1e-12, "(0,1) vs soft/hard " + num(d1));
  o.require(d2 <= 1e-8, "(-1e3,1e3) vs free " + num(d2));
  return o;
}

Outcome ac05() {
  Outcome o;
  double worst = 0.0;
  int count = 0;
  for (double rho : {1.0, 4.0}) {
    const std::vector<LimitProfile> ps = {
        LimitProfile::free(rho),
        LimitProfile::soft_hard(rho),
        LimitProfile::interpolated(rho, 4, 4),
        LimitProfile::interpolated(rho, 0.25, 3),
        LimitProfile::interpolated(rho, kInf, 2),
        LimitProfile::interpolated(rho, 0.5, kInf),
        LimitProfile::hard_annulus(rho, 1.0 / 16, 15.0 / 16),
        LimitProfile::hard_annulus(rho, 0.2, 0.6),
        LimitProfile::hard_annulus(rho, -1e3, 1e3),
        LimitProfile::hard_disk_outer(rho, 0.5),
        LimitProfile::hard_disk_outer(rho, 1.0)};
    for (const auto& p : ps) {
      worst = std::max(worst, std::abs(limit_mass(p) - rho / 2));
      ++count;
    }
    for (double tau : {0.5, 1.0}) {
      // The rescaled disk profile lives in spacing units; its mass is c(tau)/2.
      worst = std::max(worst, std::abs(limit_mass(LimitProfile::hard_disk_rescaled(rho, tau)) - c_of_tau(tau, rho) / 2));
      ++count;
    }
  }
  o.require(worst <= 1e-8, std::to_string(count) + " profiles, max mass error " + num(worst) + " <= 1e-8");
  return o;
}

Outcome ac06() {
  Outcome o;
  bool exact = true;
  for (double rho : {0.5, 8.0, 32.0, 128.0}) exact = exact && c_of_tau(1.0, rho) == rho;
  o.require(exact, "c(1) = rho exactly");
  const LimitProfile erfc_form = LimitProfile::ginibre_soft_hard();
  const LimitProfile exp_form = LimitProfile::ginibre_hard();
  std::vector<double> e1, e2;
  for (double rho : {8.0, 32.0, 128.0}) {
    double a = 0.0, b = 0.0;
    for (double x : grid(-3, 0, 0.01)) {
      a = std::max(a, std::abs(R_limit(LimitProfile::hard_disk_rescaled(rho, 1.0), x) - R_limit(erfc_form, x)));
      b = std::max(b, std::abs(R_limit(LimitProfile::hard_disk_rescaled(rho, 0.5), x) - R_limit(exp_form, x)));
    }
    e1.push_back(a);
    e2.push_back(b);
  }
  // Once the tau = 1 error reaches rounding level it can no longer decrease.
  bool dec1 = true;
  for (std::size_t i = 1; i < e1.size(); ++i) dec1 = dec1 && (e1[i] < e1[i - 1] || e1[i] <= 1e-12);
  o.require(dec1, "tau=1 errors " + list(e1) + " decrease");
  o.require(strictly_decreasing(e2), "tau=1/2 errors " + list(e2) + " decrease");
  o.require(std::abs(R_limit(exp_form, 0.0) - 0.5) <= 1e-15, "limit at 0 is 1/2");
  return o;
}

Outcome ac07() {
  Outcome o;
  std::vector<std::pair<double, double>> pts;
  for (double u : grid(-1, 1, 0.125)) {
    for (double v : grid(-1, 1, 0.125)) {
      if (std::abs(u - v) <= 2.0) pts.push_back({u, v});
    }
  }
  const double e1 = sine_limit_error(0.1, 0.0, 1.0, pts);
  const double e2 = sine_limit_error(0.05, 0.0, 1.0, pts);
  o.require(e2 <= 0.02, "deviation at rho=0.05 " + num(e2) + " <= 0.02");
  o.require(e2 < e1, "decreases from rho=0.1 (" + num(e1) + ")");
  double diag = 0.0;
  for (double u : grid(-1, 1, 0.25)) diag = std::max(diag, std::abs(sine_scaled_modulus(0.05, 0.0, 1.0, u, u) - 1.0 / kPi));
  o.require(diag <= 0.02, "diagonal within " + num(diag) + " of 1/pi");
  return o;
}

Outcome ac08() {
  Outcome o;
  const auto xs = grid(-2, 4, 0.1);
  std::vector<double> dmax, dmin, en;
  for (int n : {1000, 10000, 100000}) {
    const EnsembleSpec s = ginibre(n, 2.0, BoundaryCondition::interpolated(1, 1));
    const NormTable t = norm_table(s);
    const ScalingConstants sc = scaling_constants(s);
    const GapCurve g = gap_curve(t, sc, xs);
    dmax.push_back(g.sup_distance_max());
    dmin.push_back(g.sup_distance_min());
    en.push_back(std::abs(En(t, sc, 0.0) - 1.0));
  }
  o.require(strictly_decreasing(dmax), "max-law distances " + list(dmax) + " decrease");
  o.require(strictly_decreasing(dmin), "min-law distances " + list(dmin) + " decrease");
  o.require(dmax.back() <= 0.05 && dmin.back() <= 0.05, "distance at n=1e5 <= 0.05");
  o.require(strictly_decreasing(en), "|E_n(0) - 1| " + list(en) + " decreases");
  return o;
}

Outcome ac09() {
  Outcome o;
  const EnsembleSpec s = ginibre(2000, 4.0, BoundaryCondition::interpolated(kInf, kInf));
  const NormTable t = norm_table(s);
  const GapCurve g = gap_curve(t, scaling_constants(s), grid(-3, 0, 0.05));
  o.require(g.sup_distance_max() <= 0.05, "max-law distance " + num(g.sup_distance_max()) + " <= 0.05");
  o.require(g.sup_distance_min() <= 0.05, "min-law distance " + num(g.sup_distance_min()) + " <= 0.05");
  return o;
}

Outcome ac10() {
  Outcome o;
  {
    const EnsembleSpec s = ginibre(2000, 4.0);
    const auto t = table_of(s);
    const ScalingConstants sc = scaling_constants(s);
    const ModuliSampler sm(t, 2024);
    const int trials = 10000;
    const ExtremesSample es = ecdf_extremes(sm, sc, trials);
    const double d = ks_distance(es.omega, [&](double x) { return omega_cdf(*t, sc, x); });
    const double band = 1.63 / std::sqrt(static_cast<double>(trials));
    o.require(d <= band, "KS distance " + num(d) + " <= " + num(band));
  }
  {
    const EnsembleSpec s = ginibre(256, 4.0);
    const auto t = table_of(s);
    const KernelContext ctx = make_kernel_context(t);
    const ModuliSampler sm(t, 7);
    const int trials = 2000;
    std::vector<double> edges;
    for (double x : grid(-2.5, 2.5, 0.1)) edges.push_back(ctx.alpha + x / ctx.gamma);
    const Histogram h = histogram_profile(sm, trials, edges);
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      const std::vector<double> pts{edges[i], edges[i + 1]};
      const double mean =
          trials * integrate_fixed([&](double r) { return 2.0 * r * kernel_diagonal(ctx, r); }, pts, 10, 1);
      worst = std::max(worst, std::abs(h.counts[i] - mean) / std::sqrt(mean));
    }
    o.require(worst <= 4.0, "histogram max deviation " + num(worst) + " sigma <= 4");
  }
  return o;
}

Outcome ac11() {
  Outcome o;
  const LimitProfile p = LimitProfile::free(1.0);
  const auto xs = grid(-0.2, 0.2, 0.05);
  const std::vector<double> ys{0.0, 0.1};
  WardOptions a, b;
  a.h = 0.02;
  a.L = 8.0;
  b = a;
  b.h = 0.01;
  const double r1 = ward_residual(p, xs, ys, a).max_residual;
  const double r2 = ward_residual(p, xs, ys, b).max_residual;
  o.require(r1 <= 5e-3, "residual " + num(r1) + " <= 5e-3");
  o.require(r1 / r2 >= 3.0 && r1 / r2 <= 5.0, "halving h reduces by " + num(r1 / r2));
  const LimitProfile q = LimitProfile::interpolated(4.0, 4.0, 4.0);
  WardOptions off = a;
  off.indicator_terms = false;
  const auto qx = grid(-2, 2, 0.25);
  const double with = ward_residual(q, qx, {0.0}, a).max_residual;
  const double without = ward_residual(q, qx, {0.0}, off).max_residual;
  o.require(without >= 10.0 * with, "ablation " + num(without) + " vs " + num(with));
  return o;
}

Outcome ac12() {
  Outcome o;
  const double rho = 2.0, tau = 0.25;
  std::vector<double> expansion, norms;
  for (int n : {256, 1024, 4096}) {
    const EnsembleSpec s = ginibre(n, rho);
    expansion.push_back(n * std::abs(r_tau(s, tau) - (1.0 - rho * rho * (1.0 - 2.0 * tau) / (4.0 * n))));
    double worst = 0.0;
    for (int j = 0; j < n; j += n / 32) {
      worst = std::max(worst, std::abs(std::expm1(asymptotic_norm(s, j) - log_weighted_norm(s, j))));
    }
    norms.push_back(worst);
  }
  o.require(strictly_decreasing(expansion), "n |r_tau - expansion| " + list(expansion) + " decreases");
  o.require(strictly_decreasing(norms), "norm deviations " + list(norms) + " decrease");
  o.require(norms.back() <= 5e-2, "deviation at n=4096 " + num(norms.back()) + " <= 5e-2");
  return o;
}

Outcome ac13() {
  Outcome o;
  const fs::path root = fs::temp_directory_path() / "acre_acceptance_ac13";
  fs::remove_all(root);
  const std::vector<std::vector<std::string>> runs = {
      {"limits", "--variant", "interpolated", "--rho", "4", "--c1", "4", "--c2", "4", "--format", "csv,json,svg"},
      {"converge", "--n", "64", "--rho", "2", "--ladder", "64,128", "--format", "csv,json,svg"},
      {"extremes", "--n", "1000", "--rho", "2", "--ladder", "1000"},
      {"sample", "--n", "128", "--rho", "2", "--trials", "200", "--seed", "5", "--dump-moduli"},
      {"ward", "--variant", "free", "--rho", "1", "--grid", "-0.1:0.1:0.05", "--ygrid", "0:0:1"}};
  int files = 0;
  bool same = true;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    std::vector<std::string> arts[2];
    for (int rep = 0; rep < 2; ++rep) {
      RunConfig c = parse_cli(runs[k]);
      c.output_dir = (root / std::to_string(rep) / std::to_string(k)).string();
      c.threads = rep == 0 ? 1 : 0;
      const RunResult r = run(c);
      if (r.exit_code != kExitOk) {
        o.require(false, runs[k][0] + " exited with " + std::to_string(r.exit_code));
        return o;
      }
      for (const auto& a : r.artifacts) arts[rep].push_back(fs::path(a).filename().string());
    }
    same = same && arts[0] == arts[1];
    for (const auto& name : arts[0]) {
      const auto a = read_file((root / "0" / std::to_string(k) / name).string());
      const auto b = read_file((root / "1" / std::to_string(k) / name).string());
      same = same && a == b;
      ++files;
    }
  }
  o.require(same, std::to_string(files) + " artifacts byte-identical across runs");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<std::string, std::function<Outcome()>> criteria = {
      {"AC01", ac01}, {"AC02", ac02}, {"AC03", ac03}, {"AC04", ac04}, {"AC05", ac05},
      {"AC06", ac06}, {"AC07", ac07}, {"AC08", ac08}, {"AC09", ac09}, {"AC10", ac10},
      {"AC11", ac11}, {"AC12", ac12}, {"AC13", ac13}};
  std::vector<std::string> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(argv[i]);
  if (ids.empty()) {
    for (const auto& [id, f] : criteria) ids.push_back(id);
  }
  int failed = 0;
  for (const auto& id : ids) {
    const auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::printf("%s FAIL unknown criterion\n", id.c_str());
      ++failed;
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it->second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s (%.1f s) %s\n", id.c_str(), o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
