#include "fracineq/reports.hpp"

#include <cmath>

#include <fmt/format.h>

namespace fracineq {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string reports_to_csv(const std::vector<InequalityReport>& reports) {
  std::string out =
      "case_id,theorem,n,s,s1,beta,theta,p_desc,frak_p,lhs_max,rhs_at_max,c_fit,refinement_ratio,skipped,pass\n";
  for (const auto& r : reports) {
    const auto& p = r.params;
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", csv_cell(r.case_id), csv_cell(r.theorem), p.n,
                       format_number(p.s), format_number(p.s1), format_number(p.beta), format_number(p.theta),
                       csv_cell(p.p_desc), format_number(p.frak_p), format_number(r.lhs_max),
                       format_number(r.rhs_at_max), format_number(r.c_fit), format_number(r.refinement_ratio),
                       r.skipped, r.pass ? "true" : "false");
  }
  return out;
}

namespace {

std::string json_number(double v) { return std::isfinite(v) ? fmt::format("{:.17g}", v) : "null"; }

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out += fmt::format("\\u{:04x}", static_cast<int>(c));
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

}  // namespace

std::string reports_to_json(const std::vector<InequalityReport>& reports) {
  if (reports.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    const auto& p = r.params;
    out += "  {\n";
    out += fmt::format("    \"case_id\": {},\n", json_string(r.case_id));
    out += fmt::format("    \"theorem\": {},\n", json_string(r.theorem));
    out += fmt::format("    \"n\": {},\n", p.n);
    out += fmt::format("    \"s\": {},\n", json_number(p.s));
    out += fmt::format("    \"s1\": {},\n", json_number(p.s1));
    out += fmt::format("    \"beta\": {},\n", json_number(p.beta));
    out += fmt::format("    \"theta\": {},\n", json_number(p.theta));
    out += fmt::format("    \"p_desc\": {},\n", json_string(p.p_desc));
    out += fmt::format("    \"frak_p\": {},\n", json_number(p.frak_p));
    out += fmt::format("    \"q_desc\": {},\n", json_string(p.q_desc));
    out += fmt::format("    \"a_desc\": {},\n", json_string(p.a_desc));
    out += fmt::format("    \"lhs_max\": {},\n", json_number(r.lhs_max));
    out += fmt::format("    \"rhs_at_max\": {},\n", json_number(r.rhs_at_max));
    out += fmt::format("    \"c_fit\": {},\n", json_number(r.c_fit));
    out += fmt::format("    \"c_fit_refined\": {},\n", json_number(r.c_fit_refined));
    out += fmt::format("    \"refinement_ratio\": {},\n", json_number(r.refinement_ratio));
    out += fmt::format("    \"skipped\": {},\n", r.skipped);
    out += fmt::format("    \"inconclusive\": {},\n", r.inconclusive ? "true" : "false");
    out += fmt::format("    \"pass\": {},\n", r.pass ? "true" : "false");
    out += fmt::format("    \"error\": {},\n", json_string(r.error));
    out += "    \"extras\": {";
    for (std::size_t k = 0; k < r.extras.size(); ++k) {
      out += fmt::format("{}{}: {}", k ? ", " : "", json_string(r.extras[k].first), json_number(r.extras[k].second));
    }
    out += "}\n";
    out += i + 1 < reports.size() ? "  },\n" : "  }\n";
  }
  return out + "]\n";
}

}  // namespace fracineq
