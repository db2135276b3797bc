// SPDX-License-Identifier: MIT
//
// pint: exact local period integrals from the command line.
//
//   pint verify <target> [flags]   run a named verification suite
//   pint compute [flags]           one certified pairing for a chosen
//                                  character and test-vector configuration
//
// Every report is deterministic for a fixed configuration.  Exit codes:
//   0  success
//   1  unusable arguments or configuration
//   2  an exact-arithmetic budget was exhausted (refinement depth, root
//      order, 64-bit modulus, working precision)
//   3  a verification mismatch, or an unexpected internal failure

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pint/report.hpp"
#include "pint/sylvester.hpp"
#include "pint/verify.hpp"

namespace {

using namespace pint;

struct ComputeSpec {
  std::string theta = "enum:4:0";
  std::string chi = "trivial";
  std::string vec = "minimal";
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t at = 0;
  while (true) {
    const std::size_t next = s.find(sep, at);
    out.push_back(s.substr(at, next - at));
    if (next == std::string::npos) return out;
    at = next + 1;
  }
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("expected an integer for " + what + ", got '" + s +
                      "'");
  }
}

Rat parse_rat(const std::string& s, const std::string& what) {
  const auto parts = split(s, '/');
  if (parts.size() == 1) return Rat(parse_int(parts[0], what));
  if (parts.size() == 2)
    return Rat(parse_int(parts[0], what), parse_int(parts[1], what));
  throw ConfigError("expected a rational a or a/b for " + what + ", got '" +
                    s + "'");
}

// theta: "enum:<level>:<index>" over the exact-conductor enumeration, or
// "table:theta3" for the depth-four inducing character at p = 3.
MultChar parse_theta(const std::string& spec, const QuadExt& E,
                     const RunConfig& cfg) {
  const auto parts = split(spec, ':');
  if (parts[0] == "table") {
    if (parts.size() != 2 || parts[1] != "theta3")
      throw ConfigError("unknown theta table '" + spec + "'");
    if (E.p != 3)
      throw ConfigError("table:theta3 lives at p = 3, got p = " +
                        std::to_string(E.p));
    return sylvester_theta(E, cfg.precision).twist.theta;
  }
  if (parts[0] != "enum" || parts.size() != 3)
    throw ConfigError("theta spec must be enum:<level>:<index> or "
                      "table:theta3, got '" +
                      spec + "'");
  const int level = static_cast<int>(parse_int(parts[1], "theta level"));
  const std::int64_t index = parse_int(parts[2], "theta index");
  std::vector<MultChar> pool;
  for (const MultChar& ch :
       cached_enumeration(E, level, /*trivial_on_f=*/true, cfg.cache_dir))
    if (ch.conductor() == level) pool.push_back(ch);
  if (index < 0 || index >= static_cast<std::int64_t>(pool.size()))
    throw ConfigError("theta index " + std::to_string(index) +
                      " out of range: " + std::to_string(pool.size()) +
                      " characters of exact conductor " +
                      std::to_string(level));
  return pool[static_cast<std::size_t>(index)];
}

// chi: "enum:<level>:<index>" over the full level enumeration, "trivial",
// or "table:chi3-4" / "table:chi3-7" for the depth-four tables at p = 3.
MultChar parse_chi(const std::string& spec, const QuadExt& E,
                   const RunConfig& cfg) {
  const auto parts = split(spec, ':');
  if (spec == "trivial") {
    for (const MultChar& ch :
         cached_enumeration(E, 1, /*trivial_on_f=*/true, cfg.cache_dir))
      if (ch.is_trivial()) return ch;
    throw InternalError("trivial character missing from enumeration");
  }
  if (parts[0] == "table") {
    if (E.p != 3)
      throw ConfigError("chi tables live at p = 3, got p = " +
                        std::to_string(E.p));
    if (parts.size() == 2 && parts[1] == "chi3-4")
      return chi3_table(E, 4, cfg.precision);
    if (parts.size() == 2 && parts[1] == "chi3-7")
      return chi3_table(E, 7, cfg.precision);
    throw ConfigError("unknown chi table '" + spec + "'");
  }
  if (parts[0] != "enum" || parts.size() != 3)
    throw ConfigError("chi spec must be enum:<level>:<index>, trivial, or "
                      "table:chi3-{4,7}, got '" +
                      spec + "'");
  const int level = static_cast<int>(parse_int(parts[1], "chi level"));
  const std::int64_t index = parse_int(parts[2], "chi index");
  const std::vector<MultChar> pool =
      cached_enumeration(E, level, /*trivial_on_f=*/true, cfg.cache_dir);
  if (index < 0 || index >= static_cast<std::int64_t>(pool.size()))
    throw ConfigError("chi index " + std::to_string(index) +
                      " out of range: " + std::to_string(pool.size()) +
                      " characters at level " + std::to_string(level));
  return pool[static_cast<std::size_t>(index)];
}

int run_verify(const std::string& target, const RunConfig& cfg) {
  const SuiteResult res = verify_suite(target, cfg);
  if (cfg.format == "json")
    std::cout << render(res.to_json(), "json");
  else
    std::cout << res.to_text();
  std::fprintf(stderr, "suite %s: %s in %.2fs\n", res.name.c_str(),
               res.pass ? "PASS" : "FAIL", res.seconds);
  return res.pass ? 0 : 3;
}

int run_compute(const ComputeSpec& spec, const RunConfig& cfg) {
  validate(cfg);
  const QuadExt E = QuadExt::make(cfg.p, Rat(-cfg.p), cfg.precision);
  const MultChar theta = parse_theta(spec.theta, E, cfg);
  const Supercuspidal sc = classify(theta, cfg.precision);
  const MultChar chi = parse_chi(spec.chi, E, cfg);

  ordered_json out;
  out["config"] = config_json(cfg);
  out["theta"] = ordered_json{{"spec", spec.theta},
                              {"conductor", theta.conductor()}};
  out["chi"] =
      ordered_json{{"spec", spec.chi}, {"conductor", chi.conductor()}};
  out["representation"] = ordered_json{{"conductor", sc.c_pi},
                                       {"level", sc.n_level}};
  out["vector"] = spec.vec;

  const EngineConfig ec = engine_config(cfg);
  bool ok = true;
  if (spec.vec == "minimal") {
    out["result"] = integral_json(period_norm(sc, chi, base_vector(sc), {},
                                              ec));
  } else if (spec.vec == "newform") {
    const AveragedResult av = averaged_vector_period(sc, chi, {}, ec);
    out["result"] = integral_json(av.direct);
    out["n_terms"] = av.n_terms;
    out["branch"] = av.branch;
    if (av.closed_form) {
      out["closed_form"] = value_json(*av.closed_form);
      ok = av.direct.certified && *av.closed_form == av.direct.value;
      out["closed_form_matches"] = ok;
    }
    if (!av.hypothesis_note.empty()) out["note"] = av.hypothesis_note;
  } else if (spec.vec.rfind("translate:", 0) == 0) {
    Rat v(1), u(0);
    for (const std::string& kv : split(spec.vec.substr(10), ',')) {
      const auto pair = split(kv, '=');
      if (pair.size() != 2)
        throw ConfigError("translate spec expects v=<rat>,u=<rat>, got '" +
                          spec.vec + "'");
      if (pair[0] == "v")
        v = parse_rat(pair[1], "translate v");
      else if (pair[0] == "u")
        u = parse_rat(pair[1], "translate u");
      else
        throw ConfigError("unknown translate key '" + pair[0] + "'");
    }
    const Mat2 g = Mat2::test_matrix(PAdic::from_rat(cfg.p, v, cfg.precision),
                                     PAdic::from_rat(cfg.p, u, cfg.precision),
                                     cfg.precision);
    out["result"] =
        integral_json(period_norm(sc, chi, translated_vector(sc, g), {}, ec));
  } else {
    throw ConfigError(
        "vector spec must be minimal, newform, or translate:v=..,u=.., "
        "got '" +
        spec.vec + "'");
  }
  std::cout << render(out, cfg.format);
  return ok ? 0 : 3;
}

int exit_code_for(const PintError& e) {
  if (dynamic_cast<const ConfigError*>(&e) ||
      dynamic_cast<const BadResidue*>(&e) ||
      dynamic_cast<const DomainError*>(&e) ||
      dynamic_cast<const IncompatibleCentralCharacter*>(&e))
    return 1;
  if (dynamic_cast<const OrderBudgetExceeded*>(&e) ||
      dynamic_cast<const UnstableSum*>(&e) ||
      dynamic_cast<const OverflowError*>(&e) ||
      dynamic_cast<const PrecisionLoss*>(&e))
    return 2;
  return 3;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--p", cfg.p, "odd prime (suite family, or table prime)")
      ->capture_default_str();
  cmd->add_option("--precision", cfg.precision,
                  "absolute working precision in p-adic digits")
      ->capture_default_str();
  cmd->add_option("--max-refine", cfg.max_refine,
                  "extra certification depths before giving up")
      ->capture_default_str();
  cmd->add_option("--cyclo-cap", cfg.cyclo_cap,
                  "largest root-of-unity order assembled exactly")
      ->capture_default_str();
  cmd->add_option("--cache-dir", cfg.cache_dir,
                  "directory for character-table caches (empty: no cache)")
      ->envname("PINT_CACHE_DIR");
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Waldspurger-type period pairings for dihedral supercuspidal "
      "coefficients over p-adic fields"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string target;
  ComputeSpec spec;

  CLI::App* ver =
      app.add_subcommand("verify", "run a named verification suite");
  ver->add_option("target", target,
                  "sec24-diagonal | cor-expansion | prop-single | "
                  "prop-newform | lemma-support | sylvester")
      ->required();
  add_common(ver, cfg);

  CLI::App* comp =
      app.add_subcommand("compute", "compute one certified pairing");
  add_common(comp, cfg);
  comp->add_option("--theta-spec", spec.theta,
                   "enum:<level>:<index> | table:theta3")
      ->capture_default_str();
  comp->add_option("--chi-spec", spec.chi,
                   "enum:<level>:<index> | trivial | table:chi3-4 | "
                   "table:chi3-7")
      ->capture_default_str();
  comp->add_option("--vector-spec", spec.vec,
                   "minimal | newform | translate:v=<rat>,u=<rat>")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (ver->parsed()) return run_verify(target, cfg);
    return run_compute(spec, cfg);
  } catch (const PintError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
