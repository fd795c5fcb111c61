#include "acre/specfile.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

#include "acre/errors.hpp"
#include "acre/io.hpp"
#include "acre/special.hpp"

namespace acre {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(trim(item)));
  return out;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "family", "n", "rho", "lambda", "alpha", "beta", "bc.kind",
      "bc.c1", "bc.c2", "bc.tau1", "bc.tau2", "bc.tau"};
  return keys;
}

}  // namespace

EnsembleSpec spec_from_map(const std::map<std::string, std::string>& kv) {
  std::vector<std::string> unknown;
  for (const auto& [k, v] : kv) {
    if (!known_keys().count(k)) unknown.push_back(k);
  }
  if (!unknown.empty()) {
    std::string msg = "unknown spec keys:";
    for (const auto& k : unknown) msg += " " + k;
    throw ConfigError(msg);
  }
  auto get = [&](const std::string& key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  auto num = [&](const std::string& key, double fallback) {
    const std::string* v = get(key);
    return v ? parse_double(*v) : fallback;
  };

  EnsembleSpec spec;
  const std::string* nstr = get("n");
  if (!nstr) throw ConfigError("spec is missing 'n'");
  const double nv = parse_double(*nstr);
  if (!(nv >= 1.0) || nv != static_cast<double>(static_cast<long long>(nv)) || nv > 1e9) {
    throw ConfigError("n must be a positive integer");
  }
  spec.n = static_cast<int>(nv);
  const std::string family = get("family") ? *get("family") : "induced-ginibre";
  try {
    if (family == "induced-ginibre") {
      spec.rho = num("rho", NAN);
      if (!(spec.rho > 0.0)) throw ConfigError("induced-ginibre needs rho > 0");
      spec.potential = RadialPotential::induced_ginibre(spec.n, spec.rho);
    } else if (family == "power-log") {
      spec.rho = num("rho", NAN);
      if (!(spec.rho > 0.0)) throw ConfigError("power-log needs rho > 0");
      spec.potential = RadialPotential::power_log(spec.n, spec.rho, num("lambda", 1.0));
    } else if (family == "custom") {
      const std::string* a = get("alpha");
      if (!a) throw ConfigError("custom family needs 'alpha'");
      spec.potential = RadialPotential::custom(parse_list(*a), num("beta", 0.0));
      const double est = std::sqrt(spec.n / spec.potential.laplacian(1.0));
      spec.rho = num("rho", est);
    } else {
      throw ConfigError("unknown family '" + family + "'");
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (family != "power-log" && get("lambda")) throw ConfigError("'lambda' only applies to power-log");
  if (family != "custom" && (get("alpha") || get("beta"))) {
    throw ConfigError("'alpha'/'beta' only apply to the custom family");
  }

  const std::string kind = get("bc.kind") ? *get("bc.kind") : "free";
  if (kind == "free") {
    spec.bc = BoundaryCondition::free();
  } else if (kind == "interpolated") {
    spec.bc = BoundaryCondition::interpolated(num("bc.c1", 1.0), num("bc.c2", 1.0));
  } else if (kind == "softhard") {
    spec.bc = BoundaryCondition::interpolated(kInf, kInf);
  } else if (kind == "hard-annulus") {
    spec.bc = BoundaryCondition::hard_annulus(num("bc.tau1", 0.0), num("bc.tau2", 1.0));
  } else if (kind == "hard-disk") {
    spec.bc = BoundaryCondition::hard_disk(num("bc.tau", 1.0));
  } else {
    throw ConfigError("unknown bc.kind '" + kind + "'");
  }
  try {
    check_spec(spec);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

std::map<std::string, std::string> parse_spec_pairs(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (kv.count(key)) throw ConfigError("duplicate key '" + key + "'");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

EnsembleSpec parse_spec_text(const std::string& text) { return spec_from_map(parse_spec_pairs(text)); }

EnsembleSpec parse_spec_file(const std::string& path) { return parse_spec_text(read_file(path)); }

std::string spec_to_text(const EnsembleSpec& spec) {
  std::ostringstream os;
  const auto p = spec.potential.parameters();
  os << "family=" << to_string(spec.potential.family()) << "\n";
  os << "n=" << spec.n << "\n";
  os << "rho=" << format_double(spec.rho) << "\n";
  if (spec.potential.family() == Family::PowerLog) os << "lambda=" << format_double(p[1]) << "\n";
  if (spec.potential.family() == Family::Custom) {
    os << "alpha=";
    for (std::size_t i = 0; i + 1 < p.size(); ++i) os << (i ? "," : "") << format_double(p[i]);
    os << "\nbeta=" << format_double(p.back()) << "\n";
  }
  const auto& bc = spec.bc;
  switch (bc.kind) {
    case BoundaryCondition::Kind::Free: os << "bc.kind=free\n"; break;
    case BoundaryCondition::Kind::Interpolated:
      os << "bc.kind=interpolated\nbc.c1=" << format_double(bc.c1) << "\nbc.c2=" << format_double(bc.c2) << "\n";
      break;
    case BoundaryCondition::Kind::HardAnnulus:
      os << "bc.kind=hard-annulus\nbc.tau1=" << format_double(bc.tau1) << "\nbc.tau2=" << format_double(bc.tau2) << "\n";
      break;
    case BoundaryCondition::Kind::HardDisk:
      os << "bc.kind=hard-disk\nbc.tau=" << format_double(bc.tau) << "\n";
      break;
  }
  return os.str();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string spec_hash(const EnsembleSpec& spec) { return fnv1a_hex(spec_to_text(spec)); }

}  // namespace acre
