// SPDX-License-Identifier: Apache-2.0
//
// silbound: silhouette ceilings, exact optima and bound-gated K selection
// from the command line.
//
// Exit codes: 0 ok, 1 I/O failure, 2 invalid input or flags, 3 not clusterable.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "silbound/baselines.hpp"
#include "silbound/bounds.hpp"
#include "silbound/csv.hpp"
#include "silbound/error.hpp"
#include "silbound/oracle.hpp"
#include "silbound/report.hpp"
#include "silbound/selection.hpp"

namespace {

using namespace silbound;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNotClusterable = 3;

struct Options {
  std::string input;
  std::string input_kind = "points";
  bool header = false;
  std::optional<std::string> metric;
  std::size_t kappa = 1;
  double epsilon = 0.05;
  double tau = 0.0;
  std::optional<std::size_t> k;
  std::optional<std::string> k_range;
  std::optional<std::size_t> k_max;  // defaults to min(10, n)
  std::string algorithm = "kmedoids";
  std::optional<std::string> linkage;
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "json";
  bool no_stop_sweep = false;
  std::string labels;
  std::string tag;
  std::string labels_output;
};

[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorCode::InvalidArgument, message); }

// Dataset as loaded: the matrix always, the points only for point input.
struct Dataset {
  std::optional<PointSet> points;
  DissimilarityMatrix delta;
};

Dataset load(const Options& opt) {
  if (opt.input.empty()) invalid("--input is required");
  if (opt.input_kind == "matrix") {
    if (opt.metric) invalid("--metric only applies to --input-kind points");
    return {std::nullopt, read_matrix_csv(opt.input)};
  }
  PointSet points = read_points_csv(opt.input, opt.header);
  DissimilarityMatrix delta = build_matrix(points, parse_metric(opt.metric.value_or("euclidean")));
  return {std::move(points), std::move(delta)};
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) invalid("--k-range expects A:B, got '" + text + "'");
  auto number = [&](std::string_view part) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      invalid("--k-range expects A:B, got '" + text + "'");
    }
    return value;
  };
  const std::string_view view(text);
  const std::size_t lo = number(view.substr(0, colon));
  const std::size_t hi = number(view.substr(colon + 1));
  if (lo < 2 || hi < lo) invalid("--k-range needs 2 <= A <= B, got '" + text + "'");
  return {lo, hi};
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + opt.output + "' for writing");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + opt.output + "'");
}

std::string json_text(const nlohmann::json& json) { return json.dump(2) + "\n"; }

// Algorithm names: kmeans, kmedoids, hac-single, hac-weighted, hac (uses
// --linkage), exhaustive.
ClusteringAlgorithm make_algorithm(const std::string& name, const Options& opt, const Dataset& data) {
  if (name == "kmeans") {
    if (!data.points) invalid("kmeans needs --input-kind points");
    const PointSet* points = &*data.points;
    const std::uint64_t seed = opt.seed;
    return [points, seed](std::size_t k) { return kmeans(*points, {k, 300, 10, seed}).clustering; };
  }
  const DissimilarityMatrix* delta = &data.delta;
  if (name == "kmedoids") {
    const std::uint64_t seed = opt.seed;
    return [delta, seed](std::size_t k) { return kmedoids_asw(*delta, k, seed).clustering; };
  }
  if (name == "exhaustive") {
    if (delta->size() > kMaxOraclePoints) {
      throw Error(ErrorCode::TooLarge, "exhaustive search is capped at n = " + std::to_string(kMaxOraclePoints));
    }
    return [delta](std::size_t k) { return optimal_asw(*delta, PartitionConstraints::exactly(k)).best; };
  }
  Linkage linkage;
  if (name == "hac-single") {
    linkage = Linkage::Single;
  } else if (name == "hac-weighted") {
    linkage = Linkage::Weighted;
  } else if (name == "hac") {
    linkage = parse_linkage(opt.linkage.value_or("single"));
  } else {
    invalid("unknown algorithm '" + name + "'");
  }
  auto dendrogram = std::make_shared<Dendrogram>(hac(*delta, linkage));
  return [dendrogram](std::size_t k) { return cut_dendrogram(*dendrogram, k); };
}

void check_algorithm_name(const std::string& name) {
  static const std::vector<std::string> known{"kmeans", "kmedoids", "exhaustive", "hac", "hac-single", "hac-weighted"};
  if (std::find(known.begin(), known.end(), name) == known.end()) invalid("unknown algorithm '" + name + "'");
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  if (parts.empty()) invalid("--algorithm is empty");
  for (const auto& name : parts) check_algorithm_name(name);
  return parts;
}

void check_format(const Options& opt) {
  if (opt.format != "json" && opt.format != "csv") invalid("--format must be json or csv");
}

int cmd_bound(const Options& opt) {
  check_format(opt);
  const Dataset data = load(opt);
  const BoundReport report = bound_report(data.delta, opt.kappa);
  std::printf("UB=%s minUB=%s maxUB=%s kappa=%zu\n", format_fixed(report.ub).c_str(),
              format_fixed(report.min_ub).c_str(), format_fixed(report.max_ub).c_str(), report.kappa);
  if (!opt.output.empty()) emit(opt, opt.format == "csv" ? bounds_csv(report) : json_text(to_json(report)));
  return kExitOk;
}

int cmd_silhouette(const Options& opt) {
  check_format(opt);
  if (opt.labels.empty()) invalid("silhouette needs --labels");
  const Dataset data = load(opt);
  const std::vector<int> labels = read_labels_csv(opt.labels);
  if (labels.size() != data.delta.size()) {
    throw Error(ErrorCode::SizeMismatch, "labels file has " + std::to_string(labels.size()) + " entries for " +
                                             std::to_string(data.delta.size()) + " points");
  }
  const SilhouetteReport report = silhouette_report(data.delta, Clustering(labels));
  emit(opt, opt.format == "csv" ? silhouette_csv(report) : json_text(to_json(report)));
  return kExitOk;
}

int cmd_optimal(const Options& opt) {
  check_format(opt);
  const Dataset data = load(opt);
  if (data.delta.size() > kMaxOraclePoints) {
    throw Error(ErrorCode::TooLarge, "exhaustive search is capped at n = " + std::to_string(kMaxOraclePoints));
  }
  PartitionConstraints constraints{2, 0, opt.kappa};
  if (opt.k) constraints = {*opt.k, *opt.k, opt.kappa};
  const OptimalResult result = optimal_asw(data.delta, constraints);
  if (opt.format == "csv") {
    std::string text = "point,label\n";
    for (std::size_t i = 0; i < result.best.size(); ++i) {
      text += std::to_string(i + 1) + "," + std::to_string(result.best.label(i)) + "\n";
    }
    emit(opt, text);
  } else {
    emit(opt, json_text(to_json(result)));
  }
  if (!opt.labels_output.empty()) write_labels_csv(opt.labels_output, result.best.labels());
  return kExitOk;
}

int cmd_sweep(const Options& opt) {
  check_format(opt);
  const auto names = split_commas(opt.algorithm);
  if (opt.k_range && opt.k_max) invalid("--k-range and --k-max are mutually exclusive");
  if (opt.k_range) parse_range(*opt.k_range);
  const Dataset data = load(opt);
  const std::size_t k_max = opt.k_max.value_or(std::min<std::size_t>(10, data.delta.size()));
  const auto [lo, hi] = parse_range(opt.k_range.value_or("2:" + std::to_string(k_max)));
  if (hi > data.delta.size()) invalid("--k-range exceeds the number of points");
  const double ub = bound_report(data.delta, opt.kappa).ub;

  nlohmann::json rows = nlohmann::json::array();
  std::string csv = "algorithm,k,asw,worst_case_rel_err\n";
  for (const auto& name : names) {
    const auto algorithm = make_algorithm(name, opt, data);
    for (const KEvaluation& row : sweep(data.delta, algorithm, ub, lo, hi)) {
      rows.push_back({{"algorithm", name}, {"k", row.k}, {"asw", row.asw}, {"worst_case_rel_err", row.worst_case_rel_err}});
      csv += name + "," + std::to_string(row.k) + "," + format_fixed(row.asw) + "," +
             format_fixed(row.worst_case_rel_err) + "\n";
    }
  }
  if (opt.format == "csv") {
    emit(opt, csv);
  } else {
    emit(opt, json_text({{"ub", ub}, {"kappa", opt.kappa}, {"rows", std::move(rows)}}));
  }
  return kExitOk;
}

int cmd_select(const Options& opt) {
  check_format(opt);
  if (opt.format == "csv") invalid("select writes json only");
  if (opt.k_max && *opt.k_max < 2) invalid("--k-max must be at least 2");
  check_algorithm_name(opt.algorithm);
  const Dataset data = load(opt);
  const std::size_t k_max = opt.k_max.value_or(std::min<std::size_t>(10, data.delta.size()));
  if (k_max > data.delta.size()) invalid("--k-max exceeds the number of points");
  const auto algorithm = make_algorithm(opt.algorithm, opt, data);
  EarlyStopConfig config{opt.epsilon, opt.tau, k_max, std::nullopt};
  if (opt.kappa != 1) config.kappa = opt.kappa;
  // The no-stop mode evaluates every K so the per-K certificates can be tabulated.
  if (opt.no_stop_sweep) config.epsilon = 0.0;
  const SelectionResult result = select(data.delta, algorithm, config);
  nlohmann::json json = to_json(result);
  json["epsilon"] = opt.epsilon;
  json["no_stop_sweep"] = opt.no_stop_sweep;
  emit(opt, json_text(json));
  if (result.outcome == Outcome::NotClusterable) return kExitNotClusterable;
  if (!opt.labels_output.empty()) write_labels_csv(opt.labels_output, result.best->labels());
  return kExitOk;
}

int cmd_gen(const Options& opt) {
  if (opt.tag.empty()) invalid("gen needs --tag");
  if (opt.output.empty()) invalid("gen needs --output");
  const BlobSpec spec = BlobSpec::parse(opt.tag);
  const BlobData data = make_blobs(spec, opt.seed);
  write_points_csv(opt.output, data.points);
  if (!opt.labels_output.empty()) write_labels_csv(opt.labels_output, data.labels);
  std::printf("%s seed=%llu\n", spec.tag().c_str(), static_cast<unsigned long long>(opt.seed));
  return kExitOk;
}

void add_input(CLI::App* cmd, Options& opt) {
  cmd->add_option("--input", opt.input, "CSV of points or of a dissimilarity matrix")->required();
  cmd->add_option("--input-kind", opt.input_kind, "points or matrix")->check(CLI::IsMember({"points", "matrix"}));
  cmd->add_flag("--header", opt.header, "point CSV starts with a header row");
  cmd->add_option("--metric", opt.metric, "euclidean, cosine, correlation or jaccard")
      ->check(CLI::IsMember({"euclidean", "cosine", "correlation", "jaccard"}));
}

void add_output(CLI::App* cmd, Options& opt) {
  cmd->add_option("--output", opt.output, "output file (stdout when omitted)");
  cmd->add_option("--format", opt.format, "json or csv");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Silhouette upper bounds and bound-certified clustering selection"};
  app.require_subcommand(1);

  CLI::App* bound = app.add_subcommand("bound", "per-point ceilings and the dataset ceiling UB");
  add_input(bound, opt);
  add_output(bound, opt);
  bound->add_option("--kappa", opt.kappa, "minimum cluster size");

  CLI::App* silhouette = app.add_subcommand("silhouette", "silhouette widths of a given labelling");
  add_input(silhouette, opt);
  add_output(silhouette, opt);
  silhouette->add_option("--labels", opt.labels, "CSV with one integer label per point")->required();

  CLI::App* optimal = app.add_subcommand("optimal", "exact ASW optimum by enumeration (n <= 15)");
  add_input(optimal, opt);
  add_output(optimal, opt);
  optimal->add_option("--k", opt.k, "restrict to exactly K clusters");
  optimal->add_option("--kappa", opt.kappa, "minimum cluster size");
  optimal->add_option("--labels-output", opt.labels_output, "write the optimal labels here");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "ASW per K for one or more algorithms");
  add_input(sweep_cmd, opt);
  add_output(sweep_cmd, opt);
  sweep_cmd->add_option("--algorithm", opt.algorithm, "comma-separated algorithm names");
  sweep_cmd->add_option("--k-range", opt.k_range, "A:B");
  sweep_cmd->add_option("--k-max", opt.k_max, "shorthand for --k-range 2:K");
  sweep_cmd->add_option("--kappa", opt.kappa, "minimum cluster size for the ceiling");
  sweep_cmd->add_option("--linkage", opt.linkage, "single or weighted (for --algorithm hac)");
  sweep_cmd->add_option("--seed", opt.seed, "RNG seed");

  CLI::App* select_cmd = app.add_subcommand("select", "choose K with the clusterability gate and early stop");
  add_input(select_cmd, opt);
  add_output(select_cmd, opt);
  select_cmd->add_option("--algorithm", opt.algorithm, "kmeans, kmedoids, hac-single, hac-weighted, hac, exhaustive");
  select_cmd->add_option("--epsilon", opt.epsilon, "relative error tolerance")->check(CLI::Range(0.0, 1.0));
  select_cmd->add_option("--tau", opt.tau, "clusterability threshold")->check(CLI::Range(0.0, 1.0));
  select_cmd->add_option("--k-max", opt.k_max, "largest K to try");
  select_cmd->add_option("--kappa", opt.kappa, "minimum cluster size for the gate");
  select_cmd->add_option("--linkage", opt.linkage, "single or weighted (for --algorithm hac)");
  select_cmd->add_option("--seed", opt.seed, "RNG seed");
  select_cmd->add_flag("--no-stop-sweep", opt.no_stop_sweep, "evaluate every K and report each certificate");
  select_cmd->add_option("--labels-output", opt.labels_output, "write the selected labels here");

  CLI::App* gen = app.add_subcommand("gen", "Gaussian blob data from a tag n-m-centers-std");
  gen->add_option("--tag", opt.tag, "e.g. 400-64-5-6")->required();
  gen->add_option("--seed", opt.seed, "RNG seed");
  gen->add_option("--output", opt.output, "points CSV")->required();
  gen->add_option("--labels-output", opt.labels_output, "generating labels CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    for (char& c : message) {
      if (c == '\n') c = ' ';
    }
    std::fprintf(stderr, "error: InvalidArgument: %s\n", message.c_str());
    return kExitInvalid;
  }

  try {
    if (bound->parsed()) return cmd_bound(opt);
    if (silhouette->parsed()) return cmd_silhouette(opt);
    if (optimal->parsed()) return cmd_optimal(opt);
    if (sweep_cmd->parsed()) return cmd_sweep(opt);
    if (select_cmd->parsed()) return cmd_select(opt);
    return cmd_gen(opt);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return is_validation_error(e.code()) ? kExitInvalid : kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: InternalError: %s\n", e.what());
    return kExitIo;
  }
}
