// SPDX-License-Identifier: MIT
//
// Named verification suites behind the CLI: each suite sweeps a family of
// configurations, computes both sides of an exact identity (certified
// brute-force integral vs closed prediction), and reports every comparison.
// A suite passes only if every line passes; any exact mismatch is a
// verification failure, not an exception.

#pragma once

#include <string>
#include <vector>

#include "pint/report.hpp"

namespace pint {

// One tested configuration: what was run, both sides, and the verdict.
struct SuiteLine {
  std::string config;
  std::string computed;
  std::string predicted;
  bool ok = true;
};

struct SuiteResult {
  std::string name;
  RunConfig cfg;
  std::vector<SuiteLine> lines;
  int checked = 0;  // individual comparisons (lines may aggregate several)
  bool pass = true;
  double seconds = 0.0;

  ordered_json to_json() const;
  // One human line per comparison plus a verdict trailer.
  std::string to_text() const;
};

// Suites, by CLI target name:
//   sec24-diagonal: diagonal translate values against the residue
//       criterion, all (theta, chi) at conductors 2 and 4 for cfg.p;
//   cor-expansion: bilinearity of the period in the newform expansion,
//       20 seeded random configurations over p in {3, 5};
//   prop-single:   cross-term dichotomy (dead row/column, equal
//       magnitudes) over all translate pairs for cfg.p;
//   prop-newform:  averaged newform period against its closed forms,
//       with the two-root phase factor evaluated directly;
//   lemma-support: Whittaker restriction support scan at cfg.p, plus the
//       torus support of the two-root integral where that case exists;
//   sylvester:     the worked example at auxiliary prime cfg.p.
// ConfigError for any other target.
SuiteResult verify_suite(const std::string& target, const RunConfig& cfg);

}  // namespace pint
