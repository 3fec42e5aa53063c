// SPDX-License-Identifier: Apache-2.0
#include "silbound/report.hpp"

#include <cmath>
#include <cstdio>

namespace silbound {

namespace {

// NaN and infinities are not JSON; they are emitted as null.
nlohmann::json number_or_null(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

}  // namespace

std::string format_fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

std::string outcome_name(Outcome outcome) {
  return outcome == Outcome::Selected ? "Selected" : "NotClusterable";
}

nlohmann::json to_json(const BoundReport& report) {
  return {
      {"kappa", report.kappa},
      {"ub", report.ub},
      {"min_ub", report.min_ub},
      {"max_ub", report.max_ub},
      {"bounds", report.bounds},
      {"lambda_star", report.lambda_star},
  };
}

nlohmann::json to_json(const SilhouetteReport& report) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& value : report.a) {
    if (value) {
      a.push_back(*value);
    } else {
      a.push_back(nullptr);
    }
  }
  return {{"a", std::move(a)}, {"b", report.b}, {"s", report.s}, {"asw", report.asw}};
}

nlohmann::json to_json(const OptimalResult& result) {
  return {
      {"best_labels", result.best.labels()},
      {"best_asw", result.best_asw},
      {"ties", result.ties},
      {"evaluated", result.evaluated},
  };
}

nlohmann::json to_json(const SelectionResult& result) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& row : result.trace) {
    trace.push_back({{"k", row.k}, {"asw", row.asw}, {"worst_case_rel_err", row.worst_case_rel_err}});
  }
  const bool selected = result.outcome == Outcome::Selected && result.best.has_value();
  return {
      {"outcome", outcome_name(result.outcome)},
      {"best_k", selected ? nlohmann::json(result.best_k) : nlohmann::json(nullptr)},
      {"best_asw", selected ? number_or_null(result.best_asw) : nlohmann::json(nullptr)},
      {"ub", result.ub},
      {"tau", result.tau},
      {"worst_case_rel_err", number_or_null(result.worst_case_rel_err)},
      {"stopped_early", result.stopped_early},
      {"evaluated_ks", result.evaluated_ks},
      {"labels", selected ? nlohmann::json(result.best->labels()) : nlohmann::json::array()},
      {"trace", std::move(trace)},
  };
}

std::string bounds_csv(const BoundReport& report) {
  std::string out = "point,bound,lambda_star\n";
  for (std::size_t i = 0; i < report.bounds.size(); ++i) {
    out += std::to_string(i + 1) + "," + format_fixed(report.bounds[i]) + "," +
           std::to_string(report.lambda_star[i]) + "\n";
  }
  return out;
}

std::string silhouette_csv(const SilhouetteReport& report) {
  std::string out = "point,a,b,s\n";
  for (std::size_t i = 0; i < report.s.size(); ++i) {
    out += std::to_string(i + 1) + "," + (report.a[i] ? format_fixed(*report.a[i]) : std::string()) + "," +
           format_fixed(report.b[i]) + "," + format_fixed(report.s[i]) + "\n";
  }
  return out;
}

}  // namespace silbound
