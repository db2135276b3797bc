// SPDX-License-Identifier: MIT

#include "pint/report.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "pint/errors.hpp"

namespace pint {

namespace {

constexpr const char* kCacheMagic = "pint-char-cache";
constexpr int kCacheVersion = 1;

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::string angle_str(const Angle& a) {
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

Angle parse_angle(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos)
    throw CacheVersionMismatch("malformed angle in cache: " + s);
  return Angle::make(std::stoll(s.substr(0, slash)),
                     std::stoll(s.substr(slash + 1)));
}

void flatten(const ordered_json& j, const std::string& prefix,
             std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, val] : j.items())
      flatten(val, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& val : j)
      flatten(val, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out += prefix;
    out += " = ";
    out += j.is_string() ? j.get<std::string>() : j.dump();
    out += "\n";
  }
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (!is_odd_prime(cfg.p))
    throw ConfigError("p must be an odd prime, got " + std::to_string(cfg.p));
  if (cfg.precision <= 0) throw ConfigError("precision must be positive");
  if (cfg.max_refine <= 0) throw ConfigError("max-refine must be positive");
  if (cfg.cyclo_cap <= 0) throw ConfigError("cyclo-cap must be positive");
  if (cfg.format != "json" && cfg.format != "table")
    throw ConfigError("format must be json or table, got " + cfg.format);
}

EngineConfig engine_config(const RunConfig& cfg) {
  EngineConfig ec;
  ec.max_refine = cfg.max_refine;
  ec.cyclo_cap = cfg.cyclo_cap;
  return ec;
}

ordered_json config_json(const RunConfig& cfg) {
  return ordered_json{{"p", cfg.p},
                      {"precision", cfg.precision},
                      {"max_refine", cfg.max_refine},
                      {"cyclo_cap", cfg.cyclo_cap},
                      {"cache_dir", cfg.cache_dir},
                      {"format", cfg.format}};
}

ordered_json value_json(const Cyclo& v) {
  ordered_json coeffs = ordered_json::array();
  for (const Rat& c : v.coeffs()) coeffs.push_back(c.str());
  return ordered_json{{"order", v.order()}, {"coeffs", coeffs}};
}

ordered_json approx_json(const Cyclo& v) {
  const std::complex<double> z = v.approx();
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json integral_json(const IntegralResult& r) {
  ordered_json j{{"value", value_json(r.value)},
                 {"approx", approx_json(r.value)},
                 {"certificate",
                  {{"m", r.m}, {"m_plus_one_equal", r.certified}}}};
  if (!r.support.empty()) {
    ordered_json sup = ordered_json::array();
    for (const SupportPoint& s : r.support)
      sup.push_back(ordered_json{{"coset", s.sqrt_d_coset ? "sqrtD" : "unit"},
                                 {"y", s.y.str()}});
    j["support"] = sup;
  }
  return j;
}

std::string render(const ordered_json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format == "table") {
    std::string out;
    flatten(report, "", out);
    return out;
  }
  throw ConfigError("format must be json or table, got " + format);
}

std::string cache_path(const std::string& dir, const QuadExt& E, int level,
                       bool trivial_on_f) {
  auto sgn = [](std::int64_t v) {
    return v < 0 ? "m" + std::to_string(-v) : std::to_string(v);
  };
  const std::string name = "chars-p" + std::to_string(E.p) + "-D" +
                           sgn(E.d_rat.num) + "over" + sgn(E.d_rat.den) +
                           "-L" + std::to_string(level) + "-F" +
                           (trivial_on_f ? "1" : "0") + ".pintcache";
  return (std::filesystem::path(dir) / name).string();
}

void write_char_cache(const std::string& path, const QuadExt& E, int level,
                      bool trivial_on_f,
                      const std::vector<MultChar>& chars) {
  std::ostringstream out;
  out << kCacheMagic << "\n";
  out << "version " << kCacheVersion << "\n";
  out << "p " << E.p << "\n";
  out << "D " << E.d_rat.str() << "\n";
  out << "level " << level << "\n";
  out << "trivial_on_f " << (trivial_on_f ? 1 : 0) << "\n";
  out << "count " << chars.size() << "\n";
  for (const MultChar& ch : chars) {
    out << "char " << angle_str(ch.at_uniformizer());
    const int classes = ch.classes()->size();
    for (int i = 0; i < classes; ++i)
      out << " " << angle_str(ch.eval_class(i));
    out << "\n";
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot write cache file " + path);
  f << out.str();
}

std::optional<std::vector<MultChar>> read_char_cache(const std::string& path,
                                                     const QuadExt& E,
                                                     int level,
                                                     bool trivial_on_f) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;

  std::string magic;
  if (!std::getline(f, magic) || magic != kCacheMagic)
    throw CacheVersionMismatch("not a character cache: " + path);
  std::string key;
  int version = 0;
  if (!(f >> key >> version) || key != "version" || version != kCacheVersion)
    throw CacheVersionMismatch("cache " + path + " has version " +
                               std::to_string(version) + ", expected " +
                               std::to_string(kCacheVersion));

  std::int64_t p = 0;
  std::string d_str;
  int lvl = 0, flag = 0;
  std::size_t count = 0;
  if (!(f >> key >> p) || key != "p" || !(f >> key >> d_str) || key != "D" ||
      !(f >> key >> lvl) || key != "level" || !(f >> key >> flag) ||
      key != "trivial_on_f" || !(f >> key >> count) || key != "count")
    throw CacheVersionMismatch("malformed cache header in " + path);
  const auto slash = d_str.find('/');
  const Rat d_rat = slash == std::string::npos
                        ? Rat(std::stoll(d_str))
                        : Rat(std::stoll(d_str.substr(0, slash)),
                              std::stoll(d_str.substr(slash + 1)));
  if (p != E.p || d_rat != E.d_rat || lvl != level ||
      (flag != 0) != trivial_on_f)
    throw CacheVersionMismatch("cache " + path +
                               " was written for a different enumeration");

  auto cls = std::make_shared<UnitClasses>(E, level);
  const int classes = cls->size();
  std::vector<MultChar> chars;
  chars.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string tok;
    if (!(f >> key) || key != "char")
      throw CacheVersionMismatch("truncated cache " + path);
    if (!(f >> tok)) throw CacheVersionMismatch("truncated cache " + path);
    const Angle unif = parse_angle(tok);
    std::vector<Angle> table;
    table.reserve(static_cast<std::size_t>(classes));
    for (int c = 0; c < classes; ++c) {
      if (!(f >> tok)) throw CacheVersionMismatch("truncated cache " + path);
      table.push_back(parse_angle(tok));
    }
    chars.emplace_back(cls, std::move(table), unif);
  }
  return chars;
}

std::vector<MultChar> cached_enumeration(const QuadExt& E, int level,
                                         bool trivial_on_f,
                                         const std::string& dir) {
  if (dir.empty()) return enumerate_characters(E, level, trivial_on_f);
  const std::string path = cache_path(dir, E, level, trivial_on_f);
  if (auto cached = read_char_cache(path, E, level, trivial_on_f))
    return std::move(*cached);
  std::vector<MultChar> fresh = enumerate_characters(E, level, trivial_on_f);
  std::filesystem::create_directories(dir);
  write_char_cache(path, E, level, trivial_on_f, fresh);
  return fresh;
}

}  // namespace pint
