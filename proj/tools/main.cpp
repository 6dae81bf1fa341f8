#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fracineq/acceptance.hpp"
#include "fracineq/config.hpp"
#include "fracineq/error.hpp"
#include "fracineq/generators.hpp"
#include "fracineq/relations.hpp"
#include "fracineq/reports.hpp"

namespace fs = std::filesystem;
namespace rel = fracineq::relations;

namespace {

struct Row {
  std::string name;
  double value;
  std::string relation;
};

std::map<std::string, double> parse_params(const std::vector<std::string>& args) {
  std::map<std::string, double> out;
  for (const auto& a : args) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw fracineq::InvalidArgument(fmt::format("expected key=value, got '{}'", a));
    std::size_t used = 0;
    const std::string text = a.substr(eq + 1);
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) {
      throw fracineq::InvalidArgument(fmt::format("'{}' is not a number", a));
    }
    out[a.substr(0, eq)] = v;
  }
  return out;
}

double take(std::map<std::string, double>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw fracineq::InvalidArgument(fmt::format("missing parameter {}=...", key));
  const double v = it->second;
  params.erase(it);
  return v;
}

std::vector<Row> explain_rows(const std::string& relation, std::map<std::string, double> params) {
  std::vector<Row> rows;
  if (relation == "sobolev") {
    const double n = take(params, "n"), s = take(params, "s"), p = take(params, "p");
    rows.push_back({"q", rel::sobolev_conjugate(n, s, p), "sobolev-conjugate: 1/q = 1/p - s/n"});
  } else if (relation == "hedberg") {
    const double s = take(params, "s"), s1 = take(params, "s1"), beta = take(params, "beta");
    rows.push_back({"theta", rel::hedberg_theta(s, s1, beta), "hedberg-theta: theta = (s - s1)/(beta + s)"});
  } else if (relation == "lorentz") {
    const double n = take(params, "n"), s = take(params, "s");
    rows.push_back({"r", rel::lorentz_exponent(n, s), "lorentz-exponent: r = n/(n - s)"});
  } else if (relation == "young-oneil") {
    const double n = take(params, "n"), s = take(params, "s"), p = take(params, "p");
    rows.push_back({"r", rel::lorentz_exponent(n, s), "lorentz-exponent: r = n/(n - s)"});
    rows.push_back({"q", rel::young_oneil_exponent(n, s, p), "young-oneil: 1 + 1/q = 1/r + 1/p"});
  } else if (relation == "hls") {
    const double n = take(params, "n"), s = take(params, "s");
    const double pm = take(params, "p_minus"), pp = take(params, "p_plus");
    rows.push_back({"q_minus", rel::q_pointwise(pm, s, n), "variable-hls: 1/q(x) = 1/p(x) - s/n"});
    rows.push_back({"q_plus", rel::q_pointwise(pp, s, n), "variable-hls: 1/q(x) = 1/p(x) - s/n"});
  } else if (relation == "sobolev-like") {
    const double n = take(params, "n"), s = take(params, "s"), s1 = take(params, "s1"), beta = take(params, "beta");
    const double pm = take(params, "p_minus"), pp = take(params, "p_plus");
    if (!(s > 0.0 && s * pp < n)) throw fracineq::GateError("theorem2", "0 < s < n/p^+");
    const double theta = rel::hedberg_theta(s, s1, beta);
    rows.push_back({"theta", theta, "hedberg-theta: theta = (s - s1)/(beta + s)"});
    rows.push_back({"q_minus", pm / (1.0 - theta), "target exponent: q(x) = p(x)/(1 - theta)"});
    rows.push_back({"q_plus", pp / (1.0 - theta), "target exponent: q(x) = p(x)/(1 - theta)"});
  } else if (relation == "mixed") {
    const double n = take(params, "n"), frak_p = take(params, "frak_p"), s = take(params, "s");
    const double pm = take(params, "p_minus"), pp = take(params, "p_plus");
    if (!(s * pp < n)) throw fracineq::GateError("mixed", "0 < s < n/p^+");
    rows.push_back({"sigma_minus", rel::sigma_exponent(n, s, frak_p, pm), "mixed-sigma: sigma(x) = n p(x)/(n - s frak_p)"});
    rows.push_back({"sigma_plus", rel::sigma_exponent(n, s, frak_p, pp), "mixed-sigma: sigma(x) = n p(x)/(n - s frak_p)"});
    rows.push_back({"theta", rel::mixed_theta(n, s, frak_p), "mixed-theta: theta = s frak_p / n"});
    rows.push_back({"beta", rel::mixed_beta(n, s, frak_p), "mixed-beta: beta = n/frak_p - s"});
    rows.push_back({"r", rel::sobolev_conjugate(n, s, frak_p), "sobolev-conjugate: 1/r = 1/frak_p - s/n"});
  } else {
    throw fracineq::InvalidArgument(fmt::format(
        "unknown relation '{}' (sobolev, hedberg, lorentz, young-oneil, hls, sobolev-like, mixed)", relation));
  }
  if (!params.empty()) {
    throw fracineq::InvalidArgument(fmt::format("unused parameter '{}' for {}", params.begin()->first, relation));
  }
  return rows;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fracineq::InvalidArgument(fmt::format("cannot write {}", path.string()));
  out << text;
}

int cmd_run(const std::string& config_path) {
  auto cfg = fracineq::RunConfig::load(config_path);
  cfg.apply_environment();
  const auto result = fracineq::execute(cfg);
  for (const auto& r : result.reports) {
    const char* status = r.pass ? "pass" : (r.inconclusive ? "inconclusive" : "FAIL");
    fmt::print("{:<28} {:<12} theta={} c_fit={} refinement_ratio={} {}{}\n", r.case_id, r.theorem,
               fracineq::format_number(r.params.theta), fracineq::format_number(r.c_fit), fracineq::format_number(r.refinement_ratio), status,
               r.error.empty() ? "" : " error: " + r.error);
  }
  for (const auto& f : result.files) fmt::print("wrote {}\n", f.string());
  return result.exit_code;
}

int cmd_selftest(const fs::path& out_dir) {
  const auto run = fracineq::run_acceptance();
  for (const auto& c : run.criteria) {
    fmt::print("[{}] criterion {:>2} {}: {}\n", c.pass ? "PASS" : "FAIL", c.id, c.name, c.detail);
  }
  fs::create_directories(out_dir);
  write_text(out_dir / "acceptance.csv", fracineq::criteria_to_csv(run.criteria));
  write_text(out_dir / "standard_reports.csv", fracineq::reports_to_csv(run.standard_reports));
  write_text(out_dir / "standard_reports.json", fracineq::reports_to_json(run.standard_reports));
  const auto passed = std::count_if(run.criteria.begin(), run.criteria.end(), [](const auto& c) { return c.pass; });
  fmt::print("{}/{} criteria passed; reports in {}\n", passed, run.criteria.size(), out_dir.string());
  return run.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification harness for fractional Sobolev-type inequalities"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run the cases declared in a JSON config");
  run->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);

  std::string relation;
  std::vector<std::string> params;
  auto* explain = app.add_subcommand("explain", "Print the exponent arithmetic of a relation");
  explain->add_option("relation", relation, "sobolev | hedberg | lorentz | young-oneil | hls | sobolev-like | mixed")
      ->required();
  explain->add_option("params", params, "key=value pairs, e.g. n=4 s=1 p=2");

  app.add_subcommand("list-generators", "List the function generators usable in configs");

  std::string out_dir = "selftest";
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite and write its reports");
  selftest->add_option("--out", out_dir, "Output directory")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(config_path);
    if (*explain) {
      const auto rows = explain_rows(relation, parse_params(params));
      fmt::print("{:<12} {:<24} {}\n", "quantity", "value", "relation");
      for (const auto& r : rows) fmt::print("{:<12} {:<24} {}\n", r.name, fracineq::format_number(r.value), r.relation);
      return 0;
    }
    if (app.got_subcommand("list-generators")) {
      for (const auto& line : fracineq::generator_catalog()) fmt::print("{}\n", line);
      return 0;
    }
    if (*selftest) return cmd_selftest(out_dir);
  } catch (const fracineq::GateError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  }
  return 0;
}
