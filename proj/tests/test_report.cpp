// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "silbound/csv.hpp"
#include "silbound/error.hpp"
#include "silbound/report.hpp"
#include "support.hpp"

using namespace silbound;
using silbound::testing::random_matrix;
using silbound::testing::toy_matrix;

namespace {

std::filesystem::path scratch_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "silbound_test_report";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("bound report json and csv") {
  const auto report = bound_report(toy_matrix(), 1);
  const auto json = to_json(report);
  CHECK(json["kappa"] == 1);
  CHECK(json["ub"].get<double>() == report.ub);
  CHECK(json["bounds"].size() == 5);
  CHECK(json["lambda_star"][1] == 3);
  CHECK(json.contains("min_ub"));
  CHECK(json.contains("max_ub"));

  const auto csv = bounds_csv(report);
  CHECK(csv.rfind("point,bound,lambda_star\n1,0.81", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

TEST_CASE("silhouette json emits null cohesion for singletons") {
  const auto report = silhouette_report(toy_matrix(), Clustering({1, 2, 1, 3, 3}));
  const auto json = to_json(report);
  CHECK(json["a"][1].is_null());
  CHECK(json["a"][0].is_number());
  CHECK(json["s"][1] == 0.0);
  CHECK(std::fabs(json["asw"].get<double>() - 0.5173) < 1e-3);
  const auto dumped = json.dump();
  CHECK(dumped.find("nan") == std::string::npos);
  CHECK(silhouette_csv(report).find("\n2,,") != std::string::npos);
}

TEST_CASE("selection json") {
  SelectionResult rejected;
  rejected.outcome = Outcome::NotClusterable;
  rejected.ub = 0.3;
  rejected.tau = 0.5;
  rejected.worst_case_rel_err = std::nan("");
  const auto json = to_json(rejected);
  CHECK(json["outcome"] == "NotClusterable");
  CHECK(json["best_k"].is_null());
  CHECK(json["worst_case_rel_err"].is_null());
  CHECK(json["labels"].empty());
  for (const char* key : {"best_asw", "ub", "stopped_early", "evaluated_ks", "tau", "trace"}) CHECK(json.contains(key));
}

TEST_CASE("matrix csv round trip is exact") {
  std::mt19937_64 rng(109);
  const auto d = random_matrix(17, rng);
  const auto path = scratch_path("matrix.csv");
  write_matrix_csv(path, d);
  const auto back = read_matrix_csv(path);
  CHECK(std::equal(d.values().begin(), d.values().end(), back.values().begin(), back.values().end()));
}

TEST_CASE("points and labels csv round trip") {
  const auto points = silbound::testing::toy_points();
  const auto path = scratch_path("points.csv");
  write_points_csv(path, points);
  const auto back = read_points_csv(path, false);
  CHECK(std::equal(points.values().begin(), points.values().end(), back.values().begin(), back.values().end()));

  const std::vector<int> labels{2, 1, 2, 3, 3};
  const auto label_path = scratch_path("labels.csv");
  write_labels_csv(label_path, labels);
  CHECK(read_labels_csv(label_path) == labels);

  std::ofstream(scratch_path("labels_header.csv")) << "cluster\n1\n2\n";
  CHECK(read_labels_csv(scratch_path("labels_header.csv")) == std::vector<int>{1, 2});
}

TEST_CASE("csv readers report problems") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([] { read_matrix_csv("/nonexistent/matrix.csv"); }) == ErrorCode::IoError);
  std::ofstream(scratch_path("rect.csv")) << "0,1,2\n1,0,3\n";
  CHECK(code([] { read_matrix_csv(scratch_path("rect.csv")); }) == ErrorCode::NotSquare);
  std::ofstream(scratch_path("asym.csv")) << "0,1\n2,0\n";
  CHECK(code([] { read_matrix_csv(scratch_path("asym.csv")); }) == ErrorCode::Asymmetric);
  std::ofstream(scratch_path("bad_labels.csv")) << "1\n1.5\n";
  CHECK(code([] { read_labels_csv(scratch_path("bad_labels.csv")); }) == ErrorCode::ParseError);
  CHECK_FALSE(is_validation_error(ErrorCode::IoError));
  CHECK(is_validation_error(ErrorCode::ParseError));
  CHECK(error_name(ErrorCode::KappaOutOfRange) == "KappaOutOfRange");
}
