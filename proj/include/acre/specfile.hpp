#pragma once

#include <map>
#include <string>

#include "acre/potentials.hpp"

namespace acre {

/// Flat key=value spec format. Blank lines and lines starting with '#' are
/// ignored. Keys:
///   family   induced-ginibre | power-log | custom
///   n, rho
///   lambda   (power-log)
///   alpha    comma-separated coefficients of r^2, r^4, ... (custom)
///   beta     log weight (custom)
///   bc.kind  free | interpolated | softhard | hard-annulus | hard-disk
///   bc.c1, bc.c2 ("inf" allowed), bc.tau1, bc.tau2, bc.tau
EnsembleSpec parse_spec_text(const std::string& text);
EnsembleSpec parse_spec_file(const std::string& path);

/// Canonical text form; parse_spec_text(spec_to_text(s)) reproduces s.
std::string spec_to_text(const EnsembleSpec& spec);

/// 64-bit FNV-1a of the canonical text, as 16 hex digits.
std::string spec_hash(const EnsembleSpec& spec);
std::string fnv1a_hex(const std::string& data);

/// Splits spec text into key/value pairs without interpreting them.
std::map<std::string, std::string> parse_spec_pairs(const std::string& text);

/// Builds a spec from already-split key/value pairs.
EnsembleSpec spec_from_map(const std::map<std::string, std::string>& kv);

}  // namespace acre
