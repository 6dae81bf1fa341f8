#include "fracineq/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "fracineq/error.hpp"
#include "fracineq/reports.hpp"

namespace fracineq {

namespace {

using json = nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw InvalidArgument(fmt::format("config: {} must be an object", where));
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw InvalidArgument(fmt::format("config: unknown key '{}' in {}", key, where));
  }
}

double number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw InvalidArgument(fmt::format("config: {} needs '{}'", where, key));
  if (!obj[key].is_number()) throw InvalidArgument(fmt::format("config: {}.{} must be a number", where, key));
  return obj[key].get<double>();
}

double number_or(const json& obj, const std::string& key, double fallback, const std::string& where) {
  return obj.contains(key) ? number(obj, key, where) : fallback;
}

std::array<double, 2> center(const json& obj, const std::string& where) {
  if (!obj.contains("center")) return {0.0, 0.0};
  const auto& c = obj["center"];
  if (c.is_number()) return {c.get<double>(), 0.0};
  if (!c.is_array() || c.empty() || c.size() > 2) {
    throw InvalidArgument(fmt::format("config: {}.center must be a number or [x0, x1]", where));
  }
  return {c[0].get<double>(), c.size() > 1 ? c[1].get<double>() : 0.0};
}

GeneratorSpec parse_generator(const json& g, const std::string& where) {
  if (!g.is_object() || !g.contains("type") || !g["type"].is_string()) {
    throw InvalidArgument(fmt::format("config: {} needs a string 'type'", where));
  }
  const auto type = g["type"].get<std::string>();
  GeneratorSpec out;
  if (type == "fourier_mode") {
    check_keys(g, {"type", "k", "weight"}, where);
    const auto& k = g.at("k");
    if (k.is_number_integer()) {
      out = GeneratorSpec::fourier_mode(k.get<long>());
    } else if (k.is_array() && !k.empty() && k.size() <= 2) {
      out = GeneratorSpec::fourier_mode(k[0].get<long>(), k.size() > 1 ? k[1].get<long>() : 0);
    } else {
      throw InvalidArgument(fmt::format("config: {}.k must be an integer or [k0, k1]", where));
    }
  } else if (type == "gaussian") {
    check_keys(g, {"type", "sigma", "center", "weight"}, where);
    out = GeneratorSpec::gaussian(number(g, "sigma", where), center(g, where));
  } else if (type == "smooth_bump") {
    check_keys(g, {"type", "radius", "center", "weight"}, where);
    out = GeneratorSpec::smooth_bump(number(g, "radius", where), center(g, where));
  } else if (type == "random_band_limited") {
    check_keys(g, {"type", "seed", "max_band", "weight"}, where);
    out = GeneratorSpec::random_band_limited(g.at("seed").get<std::uint64_t>(), g.at("max_band").get<int>());
  } else if (type == "sum") {
    check_keys(g, {"type", "terms", "weight"}, where);
    if (!g.contains("terms") || !g["terms"].is_array() || g["terms"].empty()) {
      throw InvalidArgument(fmt::format("config: {}.terms must be a nonempty array", where));
    }
    for (std::size_t i = 0; i < g["terms"].size(); ++i) {
      out = out + parse_generator(g["terms"][i], fmt::format("{}.terms[{}]", where, i));
    }
  } else {
    throw InvalidArgument(fmt::format("config: {} has unknown generator type '{}'", where, type));
  }
  if (g.contains("weight")) out = out.scaled(number(g, "weight", where));
  return out;
}

ExponentSpec parse_exponent(const json& p, const std::string& where) {
  if (p.is_number()) return ConstantExponent{p.get<double>()};
  if (!p.is_object() || !p.contains("type")) {
    throw InvalidArgument(fmt::format("config: {} must be a number or an exponent object", where));
  }
  const auto type = p["type"].get<std::string>();
  if (type == "constant") {
    check_keys(p, {"type", "p"}, where);
    return ConstantExponent{number(p, "p", where)};
  }
  if (type == "sinusoid") {
    check_keys(p, {"type", "mean", "amplitude", "mode"}, where);
    return SinusoidExponent{number(p, "mean", where), number(p, "amplitude", where),
                            static_cast<int>(number_or(p, "mode", 1, where))};
  }
  if (type == "two_phase") {
    check_keys(p, {"type", "left", "right"}, where);
    return TwoPhaseExponent{number(p, "left", where), number(p, "right", where)};
  }
  if (type == "smooth_bump") {
    check_keys(p, {"type", "base", "peak", "width"}, where);
    return BumpExponent{number(p, "base", where), number(p, "peak", where), number(p, "width", where)};
  }
  if (type == "table") {
    check_keys(p, {"type", "values", "p_infty"}, where);
    TableExponent t;
    t.values = p.at("values").get<std::vector<double>>();
    if (p.contains("p_infty")) t.p_infty = number(p, "p_infty", where);
    return t;
  }
  throw InvalidArgument(fmt::format("config: {} has unknown exponent type '{}'", where, type));
}

YoungSpec parse_young(const json& a, const std::string& where) {
  if (!a.is_object() || !a.contains("type")) throw InvalidArgument(fmt::format("config: {} needs 'type'", where));
  YoungSpec y;
  y.kind = a["type"].get<std::string>();
  if (y.kind == "power") {
    check_keys(a, {"type", "p"}, where);
    y.p = number(a, "p", where);
  } else if (y.kind == "capped_power") {
    check_keys(a, {"type", "p", "q", "knee"}, where);
    y.p = number(a, "p", where);
    y.q = number(a, "q", where);
    y.knee = number(a, "knee", where);
  } else if (y.kind == "exp_type") {
    check_keys(a, {"type"}, where);
  } else if (y.kind == "table") {
    check_keys(a, {"type", "knots", "densities"}, where);
    y.knots = a.at("knots").get<std::vector<double>>();
    y.densities = a.at("densities").get<std::vector<double>>();
  } else {
    throw InvalidArgument(fmt::format("config: {} has unknown Young function type '{}'", where, y.kind));
  }
  (void)y.build();
  return y;
}

SmoothProfile parse_profile(const json& v, const std::string& where) {
  if (v.is_string()) {
    const auto name = v.get<std::string>();
    if (name == "heat") return SmoothProfile::heat();
    if (name == "littlewood_paley") return SmoothProfile::littlewood_paley();
    throw InvalidArgument(fmt::format("config: {} has unknown profile '{}'", where, name));
  }
  check_keys(v, {"type", "order"}, where);
  if (v.value("type", "") != "heat_derivative") {
    throw InvalidArgument(fmt::format("config: {} profile object must have type heat_derivative", where));
  }
  return SmoothProfile::heat_derivative(number(v, "order", where));
}

CaseSpec parse_case_json(const json& c, const DomainSpec& domain, std::size_t index) {
  const std::string where = fmt::format("cases[{}]", index);
  check_keys(c, {"id", "theorem", "s", "s1", "beta", "p", "frak_p", "young", "profile"}, where);
  CaseSpec spec;
  if (!c.contains("theorem") || !c["theorem"].is_string()) {
    throw InvalidArgument(fmt::format("config: {} needs a string 'theorem'", where));
  }
  spec.theorem = theorem_from_tag(c["theorem"].get<std::string>());
  spec.case_id = c.contains("id") ? c["id"].get<std::string>() : fmt::format("case{}", index);
  spec.s = number_or(c, "s", kNaN, where);
  spec.s1 = number_or(c, "s1", 0.0, where);
  spec.beta = number_or(c, "beta", kNaN, where);
  spec.frak_p = number_or(c, "frak_p", kNaN, where);
  if (c.contains("p")) {
    spec.exponent = parse_exponent(c["p"], where + ".p");
    if (const auto* k = std::get_if<ConstantExponent>(&*spec.exponent)) spec.p = k->p;
  }
  if (c.contains("young")) spec.young = parse_young(c["young"], where + ".young");
  if (c.contains("profile")) spec.profile = parse_profile(c["profile"], where + ".profile");
  spec.validate(domain);
  return spec;
}

}  // namespace

CaseSpec parse_case(const std::string& json_object_text, const DomainSpec& domain) {
  return parse_case_json(json::parse(json_object_text), domain, 0);
}

RunConfig RunConfig::parse(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(fmt::format("config: malformed JSON: {}", e.what()));
  }
  try {
    check_keys(root, {"domain", "family", "cases", "output", "refinement", "jobs", "allow_inconclusive"}, "config");
    RunConfig cfg;
    if (root.contains("domain")) {
      const auto& d = root["domain"];
      check_keys(d, {"dimension", "period", "points"}, "domain");
      cfg.domain = DomainSpec(static_cast<int>(number_or(d, "dimension", 1, "domain")),
                              number_or(d, "period", 16.0, "domain"),
                              static_cast<std::size_t>(number_or(d, "points", 128, "domain")));
    }
    const json family = root.value("family", json::object({{"kind", "standard"}}));
    check_keys(family, {"kind", "seed", "size", "max_band", "generators"}, "family");
    const auto kind = family.value("kind", std::string("standard"));
    const auto seed = family.value("seed", std::uint64_t{20240601});
    if (kind == "standard") {
      if (family.contains("size") && family["size"].get<int>() != 20) {
        throw InvalidArgument("config: the standard family has exactly 20 members");
      }
      if (cfg.domain.dimension() != 1 || cfg.domain.period() != 16.0) {
        throw InvalidArgument("config: the standard family lives on the 1-D cube of side 16");
      }
      cfg.family = FunctionFamily::standard(seed, cfg.domain.points());
    } else if (kind == "random_band_limited") {
      const auto size = family.value("size", 20);
      const auto band = family.value("max_band", 8);
      if (size < 1) throw InvalidArgument("config: family.size must be positive");
      std::vector<GeneratorSpec> g;
      for (int i = 0; i < size; ++i) g.push_back(GeneratorSpec::random_band_limited(seed + static_cast<std::uint64_t>(i), band));
      cfg.family = FunctionFamily(cfg.domain, std::move(g), seed);
    } else if (kind == "custom") {
      if (!family.contains("generators") || !family["generators"].is_array() || family["generators"].empty()) {
        throw InvalidArgument("config: custom family needs a nonempty 'generators' array");
      }
      std::vector<GeneratorSpec> g;
      for (std::size_t i = 0; i < family["generators"].size(); ++i) {
        g.push_back(parse_generator(family["generators"][i], fmt::format("family.generators[{}]", i)));
      }
      cfg.family = FunctionFamily(cfg.domain, std::move(g), seed);
    } else {
      throw InvalidArgument(fmt::format("config: unknown family kind '{}'", kind));
    }
    // Sampling now rejects generators the grid cannot represent, at load time.
    for (const auto& g : cfg.family.generators()) (void)sample(cfg.domain, g);
    if (root.contains("cases")) {
      if (!root["cases"].is_array()) throw InvalidArgument("config: cases must be an array");
      std::set<std::string> ids;
      for (std::size_t i = 0; i < root["cases"].size(); ++i) {
        cfg.cases.push_back(parse_case_json(root["cases"][i], cfg.domain, i));
        if (!ids.insert(cfg.cases.back().case_id).second) {
          throw InvalidArgument(fmt::format("config: duplicate case id '{}'", cfg.cases.back().case_id));
        }
      }
    }
    if (root.contains("output")) {
      const auto& o = root["output"];
      check_keys(o, {"format", "directory", "basename"}, "output");
      const auto fmt_name = o.value("format", std::string("csv"));
      if (fmt_name == "csv") {
        cfg.format = OutputFormat::csv;
      } else if (fmt_name == "json") {
        cfg.format = OutputFormat::json;
      } else if (fmt_name == "both") {
        cfg.format = OutputFormat::both;
      } else {
        throw InvalidArgument(fmt::format("config: unknown output format '{}'", fmt_name));
      }
      cfg.directory = o.value("directory", std::string("."));
      cfg.basename = o.value("basename", std::string("report"));
    }
    cfg.refinement = root.value("refinement", true);
    const int jobs = root.value("jobs", 1);
    if (jobs < 1) throw InvalidArgument("config: jobs must be at least 1");
    cfg.jobs = static_cast<unsigned>(jobs);
    cfg.allow_inconclusive = root.value("allow_inconclusive", false);
    return cfg;
  } catch (const json::exception& e) {
    throw InvalidArgument(fmt::format("config: {}", e.what()));
  }
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument(fmt::format("config: cannot read {}", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

void RunConfig::apply_environment() {
  if (const char* dir = std::getenv("FRACINEQ_OUTPUT_DIR"); dir && *dir) directory = dir;
  if (const char* jobs_env = std::getenv("FRACINEQ_JOBS"); jobs_env && *jobs_env) {
    const int j = std::atoi(jobs_env);
    if (j < 1) throw InvalidArgument(fmt::format("FRACINEQ_JOBS = '{}' is not a positive integer", jobs_env));
    jobs = static_cast<unsigned>(j);
  }
}

RunResult execute(const RunConfig& config) {
  RunResult result;
  result.reports = run_cases(config.cases, config.family, VerifyOptions{config.refinement}, config.jobs);
  for (const auto& r : result.reports) {
    const bool ok = r.pass || (config.allow_inconclusive && r.inconclusive && r.error.empty());
    if (!ok) result.exit_code = 1;
  }
  std::filesystem::create_directories(config.directory);
  auto write = [&](const std::string& ext, const std::string& text) {
    const auto path = config.directory / (config.basename + ext);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument(fmt::format("cannot write {}", path.string()));
    out << text;
    result.files.push_back(path);
  };
  if (config.format != OutputFormat::json) write(".csv", reports_to_csv(result.reports));
  if (config.format != OutputFormat::csv) write(".json", reports_to_json(result.reports));
  return result;
}

}  // namespace fracineq
