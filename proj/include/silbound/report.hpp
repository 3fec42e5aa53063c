// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "silbound/bounds.hpp"
#include "silbound/oracle.hpp"
#include "silbound/selection.hpp"
#include "silbound/silhouette.hpp"

// Machine-readable forms of the result types. JSON numbers keep full
// precision; CSV numbers use 6 decimals.

namespace silbound {

/// {"kappa","ub","min_ub","max_ub","bounds":[…],"lambda_star":[…]}
nlohmann::json to_json(const BoundReport& report);

/// {"a":[…|null],"b":[…],"s":[…],"asw"}
nlohmann::json to_json(const SilhouetteReport& report);

/// {"best_labels":[…],"best_asw","ties","evaluated"}
nlohmann::json to_json(const OptimalResult& result);

/// {"outcome","best_k","best_asw","ub","tau","worst_case_rel_err","stopped_early",
///  "evaluated_ks":[…],"labels":[…],"trace":[{"k","asw","worst_case_rel_err"}…]}
nlohmann::json to_json(const SelectionResult& result);

std::string outcome_name(Outcome outcome);

/// point,bound,lambda_star (points 1-based).
std::string bounds_csv(const BoundReport& report);

/// point,a,b,s with an empty a for singletons.
std::string silhouette_csv(const SilhouetteReport& report);

/// Fixed 6-decimal rendering used by every CSV writer.
std::string format_fixed(double value);

}  // namespace silbound
