#pragma once

#include <string>
#include <vector>

#include "fracineq/harness.hpp"

namespace fracineq {

/// Numbers with 17 significant digits; NaN as "nan", infinities as "inf"/"-inf".
std::string format_number(double v);

/// CSV with header
/// case_id,theorem,n,s,s1,beta,theta,p_desc,frak_p,lhs_max,rhs_at_max,c_fit,refinement_ratio,skipped,pass
std::string reports_to_csv(const std::vector<InequalityReport>& reports);

/// JSON array with the CSV fields plus c_fit_refined, inconclusive, q_desc,
/// a_desc, error and an "extras" object. NaN and infinities become null.
std::string reports_to_json(const std::vector<InequalityReport>& reports);

/// Quotes a CSV cell when it holds a comma, quote or newline.
std::string csv_cell(const std::string& text);

}  // namespace fracineq
