// SPDX-License-Identifier: MIT
//
// Machine-readable reports and the on-disk character-table cache.
//
// Reports are nlohmann ordered JSON: field order is fixed at construction,
// all exact values are serialized as "num/den" strings, and the same
// configuration always produces byte-identical output.  The cache stores
// enumerated character tables per (p, D, level, restriction) under a
// versioned magic header and refuses files from any other version.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pint/characters.hpp"
#include "pint/period.hpp"

namespace pint {

using ordered_json = nlohmann::ordered_json;

// Shared knobs for CLI runs; echoed verbatim into every report.
struct RunConfig {
  std::int64_t p = 3;
  int precision = 20;
  int max_refine = 8;
  std::int64_t cyclo_cap = 360;
  std::string cache_dir;         // empty: caching disabled
  std::string format = "json";   // "json" or "table"
};

// ConfigError unless p is an odd prime, the caps are positive, and the
// format is known.
void validate(const RunConfig& cfg);

// Engine knobs drawn from the run configuration.
EngineConfig engine_config(const RunConfig& cfg);

ordered_json config_json(const RunConfig& cfg);

// {"order": N, "coeffs": ["a0/b0", ...]} in the power basis of Q(zeta_N).
ordered_json value_json(const Cyclo& v);
// {"re": x, "im": y} floating approximation, advisory only.
ordered_json approx_json(const Cyclo& v);
// {"value", "approx", "certificate": {"m", "m_plus_one_equal"},
//  "support": [...] when recorded}.
ordered_json integral_json(const IntegralResult& r);

// Render a finished report in the requested format: pretty JSON, or a flat
// "key = value" table; both end with a newline and are deterministic.
std::string render(const ordered_json& report, const std::string& format);

// ---- character-table cache -------------------------------------------------

// Cache file path for one enumeration, inside `dir`.
std::string cache_path(const std::string& dir, const QuadExt& E, int level,
                       bool trivial_on_f);

// Serialize an enumeration; parent directory must exist.
void write_char_cache(const std::string& path, const QuadExt& E, int level,
                      bool trivial_on_f,
                      const std::vector<MultChar>& chars);

// Read a cache file back; std::nullopt when the file does not exist,
// CacheVersionMismatch when the header or shape is wrong for this reader
// or the keys do not match the requested enumeration.
std::optional<std::vector<MultChar>> read_char_cache(const std::string& path,
                                                     const QuadExt& E,
                                                     int level,
                                                     bool trivial_on_f);

// enumerate_characters through the cache: read when present, else compute
// and (when `dir` is nonempty) write.  The returned characters are
// identical to a fresh enumeration either way.
std::vector<MultChar> cached_enumeration(const QuadExt& E, int level,
                                         bool trivial_on_f,
                                         const std::string& dir);

}  // namespace pint
