#include "acre/run.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acre/errors.hpp"
#include "acre/extremes.hpp"
#include "acre/finitekernel.hpp"
#include "acre/io.hpp"
#include "acre/limits.hpp"
#include "acre/parallel.hpp"
#include "acre/radialnorms.hpp"
#include "acre/sampler.hpp"
#include "acre/specfile.hpp"
#include "acre/special.hpp"
#include "acre/svg.hpp"
#include "acre/ward.hpp"

namespace acre {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr double kWallGap = 1e-9;

class Output {
 public:
  Output(const RunConfig& cfg, std::string spec_hash) : cfg_(cfg), hash_(std::move(spec_hash)) {
    dir_ = fs::absolute(cfg.output_dir).lexically_normal();
  }

  bool wants(const std::string& fmt) const {
    return std::find(cfg_.formats.begin(), cfg_.formats.end(), fmt) != cfg_.formats.end();
  }

  void csv(const std::string& name, CsvTable table, const std::map<std::string, std::string>& params) {
    if (!wants("csv")) return;
    table.add_comment(std::string("acre ") + ACRE_VERSION + " " + cfg_.subcommand + " spec_hash=" + hash_);
    std::string echo = "params:";
    for (const auto& [k, v] : params) echo += " " + k + "=" + v;
    table.add_comment(echo);
    write(name, table.str());
  }

  void json_file(const std::string& name, json j) {
    if (!wants("json")) return;
    j["tool_version"] = ACRE_VERSION;
    j["spec_hash"] = hash_;
    write(name, j.dump(2) + "\n");
  }

  void svg(const std::string& name, const std::vector<Series>& series, const SvgStyle& style) {
    if (!wants("svg")) return;
    write(name, emit_svg(series, style));
  }

  std::vector<std::string> artifacts;

 private:
  void write(const std::string& name, const std::string& content) {
    const std::string path = (dir_ / name).string();
    write_atomic(path, content);
    artifacts.push_back(path);
  }

  const RunConfig& cfg_;
  std::string hash_;
  fs::path dir_;
};

std::string fmt(double v) { return format_double(v); }

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::map<std::string, std::string> spec_pairs(const RunConfig& cfg) {
  std::map<std::string, std::string> kv;
  if (!cfg.spec_path.empty()) kv = parse_spec_pairs(read_file(cfg.spec_path));
  for (const auto& [k, v] : cfg.spec_keys) kv[k] = v;
  return kv;
}

EnsembleSpec spec_with_n(std::map<std::string, std::string> kv, int n) {
  kv["n"] = std::to_string(n);
  return spec_from_map(kv);
}

LimitProfile profile_from_config(const RunConfig& c) {
  const std::string& v = c.variant;
  if (v == "free") return LimitProfile::free(c.rho);
  if (v == "softhard") return LimitProfile::soft_hard(c.rho);
  if (v == "interpolated") return LimitProfile::interpolated(c.rho, c.c1, c.c2);
  if (v == "hard-annulus") return LimitProfile::hard_annulus(c.rho, c.tau1, c.tau2);
  if (v == "hard-disk-outer") return LimitProfile::hard_disk_outer(c.rho, c.tau);
  if (v == "hard-disk-rescaled") return LimitProfile::hard_disk_rescaled(c.rho, c.tau);
  if (v == "ginibre-softhard") return LimitProfile::ginibre_soft_hard();
  if (v == "ginibre-hard") return LimitProfile::ginibre_hard();
  throw ConfigError("unknown variant '" + v + "'");
}

LimitProfile profile_for_spec(const EnsembleSpec& spec) {
  const auto& bc = spec.bc;
  switch (bc.kind) {
    case BoundaryCondition::Kind::Free: return LimitProfile::free(spec.rho);
    case BoundaryCondition::Kind::Interpolated:
      if (bc.c1 == kInf && bc.c2 == kInf) return LimitProfile::soft_hard(spec.rho);
      return LimitProfile::interpolated(spec.rho, bc.c1, bc.c2);
    case BoundaryCondition::Kind::HardAnnulus:
      return LimitProfile::hard_annulus(spec.rho, bc.tau1, bc.tau2);
    case BoundaryCondition::Kind::HardDisk: return LimitProfile::hard_disk_rescaled(spec.rho, bc.tau);
  }
  throw ConfigError("unsupported boundary condition");
}

std::map<std::string, std::string> profile_params(const RunConfig& c) {
  return {{"variant", c.variant}, {"rho", fmt(c.rho)}, {"c1", fmt(c.c1)}, {"c2", fmt(c.c2)},
          {"tau1", fmt(c.tau1)}, {"tau2", fmt(c.tau2)}, {"tau", fmt(c.tau)}};
}

bool near_wall(const LimitProfile& p, double x) {
  for (double w : p.walls()) {
    if (std::abs(x - w) <= kWallGap) return true;
  }
  return false;
}

struct Comparison {
  std::vector<double> finite;
  std::vector<double> limit;
  double sup_error = 0.0;
};

Comparison compare_profile(const EnsembleSpec& spec, const std::vector<double>& xs) {
  auto table = std::make_shared<const NormTable>(norm_table_cached(spec));
  const KernelContext ctx = make_kernel_context(table);
  const LimitProfile p = profile_for_spec(spec);
  Comparison c;
  c.finite = profile(ctx, xs);
  c.limit = parallel_map<double>(xs.size(), [&](std::size_t i) { return R_limit(p, xs[i]); });
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (near_wall(p, xs[i])) continue;
    c.sup_error = std::max(c.sup_error, std::abs(c.finite[i] - c.limit[i]));
  }
  return c;
}

RunResult tolerance_failure(Output& out, const std::vector<std::string>& failures) {
  json j;
  j["failures"] = failures;
  out.json_file("failure.json", j);
  RunResult r;
  r.exit_code = kExitTolerance;
  r.message = failures.front();
  r.artifacts = out.artifacts;
  return r;
}

RunResult finish(Output& out, const std::vector<std::string>& failures) {
  if (!failures.empty()) return tolerance_failure(out, failures);
  RunResult r;
  r.message = "ok";
  r.artifacts = out.artifacts;
  return r;
}

RunResult cmd_limits(const RunConfig& c) {
  const LimitProfile p = profile_from_config(c);
  const auto xs = parse_grid(c.grid.empty() ? "-3:3:0.01" : c.grid);
  Output out(c, "none");
  const auto r = parallel_map<double>(xs.size(), [&](std::size_t i) { return R_limit(p, xs[i]); });
  auto params = profile_params(c);
  params["grid"] = c.grid.empty() ? "-3:3:0.01" : c.grid;
  CsvTable t({"x", "R"});
  for (std::size_t i = 0; i < xs.size(); ++i) t.add_row({xs[i], r[i]});
  out.csv("limits.csv", t, params);
  json j;
  j["variant"] = p.name();
  try {
    j["mass"] = limit_mass(p);
    j["expected_mass"] = p.variant == LimitProfile::Variant::HardDiskRescaled
                             ? 0.5 * c_of_tau(p.tau, p.rho)
                             : 0.5 * p.rho;
  } catch (const Unsupported&) {
    j["mass"] = nullptr;
  }
  out.json_file("limits.json", j);
  out.svg("limits.svg", {{p.name(), xs, r}}, {p.name(), "x", "R(x)"});
  std::vector<std::string> failures;
  if (std::isfinite(c.tol) && j["mass"].is_number() &&
      std::abs(j["mass"].get<double>() - j["expected_mass"].get<double>()) > c.tol) {
    failures.push_back("mass identity outside tolerance");
  }
  return finish(out, failures);
}

RunResult cmd_finite_n(const RunConfig& c) {
  const auto kv = spec_pairs(c);
  const EnsembleSpec spec = spec_from_map(kv);
  const std::string grid = c.grid.empty() ? "-2:2:0.05" : c.grid;
  const auto xs = parse_grid(grid);
  Output out(c, spec_hash(spec));
  const Comparison cmp = compare_profile(spec, xs);
  auto table = std::make_shared<const NormTable>(norm_table_cached(spec));
  const double mass = total_mass(make_kernel_context(table));
  CsvTable t({"x", "finite", "limit", "diff"});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    t.add_row({xs[i], cmp.finite[i], cmp.limit[i], cmp.finite[i] - cmp.limit[i]});
  }
  out.csv("finite_n.csv", t, {{"grid", grid}, {"n", std::to_string(spec.n)}});
  json j;
  j["n"] = spec.n;
  j["limit"] = profile_for_spec(spec).name();
  j["sup_error"] = cmp.sup_error;
  j["total_mass"] = mass;
  out.json_file("finite_n.json", j);
  out.svg("finite_n.svg",
          {{"n=" + std::to_string(spec.n), xs, cmp.finite}, {"limit", xs, cmp.limit}},
          {"finite-n profile", "x", "R_n(x)"});
  std::vector<std::string> failures;
  if (std::abs(mass - spec.n) > 1e-6 * spec.n) failures.push_back("total mass differs from n");
  if (std::isfinite(c.tol) && cmp.sup_error > c.tol) failures.push_back("sup error above tolerance");
  return finish(out, failures);
}

RunResult cmd_converge(const RunConfig& c) {
  const auto kv = spec_pairs(c);
  const std::vector<int> ladder = c.ladder.empty() ? std::vector<int>{256, 1024, 4096} : c.ladder;
  const std::string grid = c.grid.empty() ? "-2:2:0.05" : c.grid;
  const auto xs = parse_grid(grid);
  const EnsembleSpec first = spec_with_n(kv, ladder.front());
  Output out(c, spec_hash(first));
  std::vector<double> errors;
  std::vector<Series> series;
  std::vector<double> limit;
  for (int n : ladder) {
    const Comparison cmp = compare_profile(spec_with_n(kv, n), xs);
    errors.push_back(cmp.sup_error);
    series.push_back({"n=" + std::to_string(n), xs, cmp.finite});
    limit = cmp.limit;
  }
  series.push_back({"limit", xs, limit});
  CsvTable t({"n", "sup_error"});
  for (std::size_t i = 0; i < ladder.size(); ++i) t.add_row({static_cast<double>(ladder[i]), errors[i]});
  out.csv("converge.csv", t, {{"grid", grid}, {"ladder", join_ints(ladder)}});
  bool decreasing = true;
  for (std::size_t i = 1; i < errors.size(); ++i) decreasing = decreasing && errors[i] < errors[i - 1];
  json j;
  j["limit"] = profile_for_spec(first).name();
  j["ladder"] = ladder;
  j["sup_errors"] = errors;
  j["strictly_decreasing"] = decreasing;
  out.json_file("converge.json", j);
  out.svg("converge.svg", series, {"convergence to the limit", "x", "R(x)"});
  std::vector<std::string> failures;
  if (!decreasing) failures.push_back("sup errors are not strictly decreasing");
  if (std::isfinite(c.tol) && errors.back() > c.tol) failures.push_back("final sup error above tolerance");
  return finish(out, failures);
}

RunResult cmd_extremes(const RunConfig& c) {
  const auto kv = spec_pairs(c);
  const std::vector<int> ladder = c.ladder.empty() ? std::vector<int>{1000, 10000} : c.ladder;
  const EnsembleSpec first = spec_with_n(kv, ladder.front());
  Output out(c, spec_hash(first));
  const bool soft_hard = scaling_constants(first).regime == ScalingConstants::Regime::SoftHard;
  const std::string grid = !c.grid.empty() ? c.grid : soft_hard ? "-3:0:0.05" : "-2:4:0.1";
  const auto xs = parse_grid(grid);
  json summary = json::array();
  std::vector<Series> series;
  double last_sup = 0.0;
  for (std::size_t li = 0; li < ladder.size(); ++li) {
    const int n = ladder[li];
    const EnsembleSpec spec = spec_with_n(kv, n);
    const ScalingConstants sc = scaling_constants(spec);
    const NormTable table = norm_table_cached(spec);
    const GapCurve g = gap_curve(table, sc, xs);
    CsvTable tmax({"x", "exact_cdf", "reference_law", "gap"});
    CsvTable tmin({"x", "exact_cdf", "reference_law", "gap"});
    for (std::size_t i = 0; i < xs.size(); ++i) {
      tmax.add_row({xs[i], g.p_max[i], g.reference[i], g.p_max[i] - g.reference[i]});
      tmin.add_row({xs[i], g.p_min[i], g.reference[i], g.p_min[i] - g.reference[i]});
    }
    const std::map<std::string, std::string> params{{"grid", grid}, {"n", std::to_string(n)}};
    out.csv("extremes_max_n" + std::to_string(n) + ".csv", tmax, params);
    out.csv("extremes_min_n" + std::to_string(n) + ".csv", tmin, params);
    json e;
    e["n"] = n;
    e["sup_distance_max"] = g.sup_distance_max();
    e["sup_distance_min"] = g.sup_distance_min();
    if (!soft_hard) e["En_at_0"] = En(table, sc, 0.0);
    summary.push_back(e);
    series.push_back({"max n=" + std::to_string(n), xs, g.p_max});
    last_sup = std::max(g.sup_distance_max(), g.sup_distance_min());
    if (li + 1 == ladder.size()) series.push_back({soft_hard ? "exponential" : "Gumbel", xs, g.reference});
  }
  json j;
  j["regime"] = soft_hard ? "softhard" : "interpolated-finite";
  j["ladder"] = summary;
  out.json_file("extremes.json", j);
  out.svg("extremes.svg", series, {"extreme modulus laws", "x", "P"});
  std::vector<std::string> failures;
  if (std::isfinite(c.tol) && last_sup > c.tol) failures.push_back("sup distance above tolerance");
  return finish(out, failures);
}

RunResult cmd_sample(const RunConfig& c) {
  const auto kv = spec_pairs(c);
  const EnsembleSpec spec = spec_from_map(kv);
  if (c.trials < 1) throw ConfigError("trials must be positive");
  Output out(c, spec_hash(spec));
  auto table = std::make_shared<const NormTable>(norm_table_cached(spec));
  const ModuliSampler sampler(table, c.seed);
  struct Trial {
    double mx;
    double mn;
  };
  const auto trials = parallel_map<Trial>(c.trials, [&](std::size_t t) {
    const auto r = sampler.sample_moduli(t);
    return Trial{*std::max_element(r.begin(), r.end()), *std::min_element(r.begin(), r.end())};
  });
  const std::map<std::string, std::string> params{
      {"seed", std::to_string(c.seed)}, {"trials", std::to_string(c.trials)}};
  CsvTable t({"trial", "max_modulus", "min_modulus"});
  double sum_max = 0.0;
  double sum_min = 0.0;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    t.add_row({static_cast<double>(i), trials[i].mx, trials[i].mn});
    sum_max += trials[i].mx;
    sum_min += trials[i].mn;
  }
  out.csv("sample.csv", t, params);
  if (c.dump_moduli) {
    CsvTable m({"trial", "degree", "modulus"});
    for (int tr = 0; tr < c.trials; ++tr) {
      const auto r = sampler.sample_moduli(tr);
      for (std::size_t j = 0; j < r.size(); ++j) m.add_row({static_cast<double>(tr), static_cast<double>(j), r[j]});
    }
    out.csv("moduli.csv", m, params);
  }
  json j;
  j["n"] = spec.n;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["mean_max_modulus"] = sum_max / c.trials;
  j["mean_min_modulus"] = sum_min / c.trials;
  out.json_file("sample.json", j);
  return finish(out, {});
}

RunResult cmd_ward(const RunConfig& c) {
  const LimitProfile p = profile_from_config(c);
  const std::string grid = c.grid.empty() ? "-0.2:0.2:0.02" : c.grid;
  const std::string ygrid = c.ygrid.empty() ? "-0.2:0.2:0.02" : c.ygrid;
  Output out(c, "none");
  WardOptions opt;
  opt.h = c.h;
  opt.L = c.L;
  opt.indicator_terms = c.indicator_terms;
  const WardReport rep = ward_residual(p, parse_grid(grid), parse_grid(ygrid), opt);
  auto params = profile_params(c);
  params["grid"] = grid;
  params["ygrid"] = ygrid;
  params["h"] = fmt(c.h);
  params["L"] = fmt(c.L);
  params["indicator_terms"] = c.indicator_terms ? "1" : "0";
  CsvTable t({"x", "y", "re_residual", "im_residual"});
  for (const auto& pt : rep.points) t.add_row({pt.x, pt.y, pt.residual.real(), pt.residual.imag()});
  out.csv("ward.csv", t, params);
  json j;
  j["variant"] = rep.variant;
  j["max_residual"] = rep.max_residual;
  j["points"] = rep.points.size();
  j["excluded"] = rep.excluded.size();
  j["h"] = opt.h;
  j["L"] = opt.L;
  j["order"] = opt.order;
  out.json_file("ward.json", j);
  std::vector<std::string> failures;
  if (std::isfinite(c.tol) && rep.max_residual > c.tol) failures.push_back("Ward residual above tolerance");
  return finish(out, failures);
}

RunResult cmd_validate(const RunConfig& c) {
  const EnsembleSpec spec = spec_from_map(spec_pairs(c));
  Output out(c, spec_hash(spec));
  const ValidationReport r = validate(spec);
  json j;
  j["subharmonic_min"] = r.subharmonic_min;
  j["subharmonic_ok"] = r.subharmonic_ok;
  j["g_at_one"] = r.g_at_one;
  j["slope_error"] = r.slope_error;
  j["normalization_ok"] = r.normalization_ok;
  j["third_derivative_ratio"] = r.third_derivative_ratio;
  j["third_derivative_finite"] = r.third_derivative_finite;
  j["growth_ratio"] = r.growth_ratio;
  j["growth_ok"] = r.growth_ok;
  j["rgp_increasing"] = r.rgp_increasing;
  j["rho_estimated"] = r.rho_estimated;
  j["rho_declared"] = r.rho_declared;
  j["rho_ok"] = r.rho_ok;
  j["passed"] = r.passed();
  out.json_file("validate.json", j);
  std::vector<std::string> failures;
  if (!r.passed()) failures.push_back("potential fails the standing assumptions");
  return finish(out, failures);
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(parse_double(item));
  if (parts.size() != 3) throw ConfigError("grid must be lo:hi:step, got '" + text + "'");
  const double lo = parts[0], hi = parts[1], step = parts[2];
  if (!(step > 0.0) || !(hi >= lo)) throw ConfigError("grid needs hi >= lo and step > 0");
  const long long count = std::llround((hi - lo) / step);
  if (count > 10000000) throw ConfigError("grid is too large");
  std::vector<double> xs;
  for (long long k = 0; k <= count; ++k) xs.push_back(k == count ? hi : lo + static_cast<double>(k) * step);
  return xs;
}

RunConfig parse_cli(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"acre: almost-circular random normal matrix ensembles"};
  app.set_help_flag();
  app.require_subcommand(1);
  std::string formats = "csv,json";
  std::string ladder;
  std::map<std::string, std::string> keys;
  std::string rho, c1, c2, tau1, tau2, tau;
  bool no_indicators = false;

  app.add_option("--spec", cfg.spec_path, "spec file (key=value)");
  app.add_option("--out", cfg.output_dir, "output directory");
  app.add_option("--seed", cfg.seed, "master seed");
  app.add_option("--format", formats, "comma-separated list of csv, json, svg");
  app.add_option("--grid", cfg.grid, "x grid lo:hi:step");
  app.add_option("--ygrid", cfg.ygrid, "y grid lo:hi:step (ward)");
  app.add_option("--ladder", ladder, "comma-separated list of n");
  app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  app.add_option("--variant", cfg.variant, "limit profile variant");
  app.add_option("--n", keys["n"], "matrix size");
  app.add_option("--family", keys["family"], "induced-ginibre | power-log | custom");
  app.add_option("--lambda", keys["lambda"], "power-log exponent");
  app.add_option("--alpha", keys["alpha"], "custom coefficients");
  app.add_option("--beta", keys["beta"], "custom log weight");
  app.add_option("--bc", keys["bc.kind"], "free | interpolated | softhard | hard-annulus | hard-disk");
  app.add_option("--rho", rho, "non-Hermiticity parameter");
  app.add_option("--c1", c1, "inner confinement");
  app.add_option("--c2", c2, "outer confinement");
  app.add_option("--tau1", tau1, "inner wall");
  app.add_option("--tau2", tau2, "outer wall");
  app.add_option("--tau", tau, "disk wall");
  app.add_option("--trials", cfg.trials, "Monte Carlo trials");
  app.add_flag("--dump-moduli", cfg.dump_moduli, "write every sampled modulus");
  app.add_option("--h", cfg.h, "finite-difference step (ward)");
  app.add_option("--L", cfg.L, "Cauchy transform cutoff (ward)");
  app.add_flag("--no-indicators", no_indicators, "drop the indicator terms (ward)");
  app.add_option("--tol", cfg.tol, "tolerance for the subcommand's check");

  for (const char* name : {"limits", "finite-n", "converge", "extremes", "sample", "ward", "validate"}) {
    app.add_subcommand(name)->fallthrough();
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.indicator_terms = !no_indicators;
  cfg.formats.clear();
  {
    std::stringstream ss(formats);
    std::string f;
    while (std::getline(ss, f, ',')) {
      if (f != "csv" && f != "json" && f != "svg") throw ConfigError("unknown format '" + f + "'");
      cfg.formats.push_back(f);
    }
  }
  if (!ladder.empty()) {
    std::stringstream ss(ladder);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const double v = parse_double(item);
      if (!(v >= 1.0) || v != std::floor(v) || v > 1e8) throw ConfigError("bad ladder entry '" + item + "'");
      cfg.ladder.push_back(static_cast<int>(v));
    }
  }
  auto set = [&](const std::string& text, const std::string& key, double& field) {
    if (text.empty()) return;
    field = parse_double(text);
    keys[key] = text;
  };
  set(rho, "rho", cfg.rho);
  set(c1, "bc.c1", cfg.c1);
  set(c2, "bc.c2", cfg.c2);
  set(tau1, "bc.tau1", cfg.tau1);
  set(tau2, "bc.tau2", cfg.tau2);
  set(tau, "bc.tau", cfg.tau);
  for (const auto& [k, v] : keys) {
    if (!v.empty()) cfg.spec_keys[k] = v;
  }
  return cfg;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    set_worker_count(config.threads);
    const std::string& s = config.subcommand;
    if (s == "limits") return cmd_limits(config);
    if (s == "finite-n") return cmd_finite_n(config);
    if (s == "converge") return cmd_converge(config);
    if (s == "extremes") return cmd_extremes(config);
    if (s == "sample") return cmd_sample(config);
    if (s == "ward") return cmd_ward(config);
    if (s == "validate") return cmd_validate(config);
    throw ConfigError("unknown subcommand '" + s + "'");
  } catch (const ConfigError& e) {
    result.exit_code = kExitConfig;
    result.message = e.what();
  } catch (const DomainError& e) {
    result.exit_code = kExitConfig;
    result.message = e.what();
  } catch (const Unsupported& e) {
    result.exit_code = kExitConfig;
    result.message = e.what();
  } catch (const ConsistencyError& e) {
    result.exit_code = kExitNumerical;
    result.message = e.what();
  } catch (const SolverError& e) {
    result.exit_code = kExitNumerical;
    result.message = e.what();
  }
  return result;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || std::find(args.begin(), args.end(), "--help") != args.end() ||
      std::find(args.begin(), args.end(), "-h") != args.end()) {
    std::cout << "usage: acre <limits|finite-n|converge|extremes|sample|ward|validate> [options]\n"
                 "  --spec FILE --out DIR --seed N --format csv,json,svg --grid lo:hi:step\n"
                 "  --ygrid lo:hi:step --ladder n1,n2,... --threads N --variant NAME\n"
                 "  --n N --family F --lambda L --alpha a1,a2 --beta B --bc KIND\n"
                 "  --rho R --c1 C --c2 C --tau1 T --tau2 T --tau T\n"
                 "  --trials N --dump-moduli --h H --L L --no-indicators --tol TOL\n"
                 "exit codes: 0 ok, 2 config error, 3 tolerance failure, 4 numerical error\n";
    return args.empty() ? kExitConfig : kExitOk;
  }
  RunConfig cfg;
  try {
    cfg = parse_cli(args);
  } catch (const std::exception& e) {
    std::cerr << "acre: " << e.what() << "\n";
    return kExitConfig;
  }
  const RunResult r = run(cfg);
  for (const auto& a : r.artifacts) std::cout << a << "\n";
  if (r.exit_code != kExitOk) std::cerr << "acre: " << r.message << "\n";
  return r.exit_code;
}

}  // namespace acre
