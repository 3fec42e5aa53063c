// SPDX-License-Identifier: Apache-2.0
#include <charconv>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "silbound/baselines.hpp"
#include "silbound/error.hpp"

namespace silbound {

namespace {

std::vector<std::string_view> split_dashes(std::string_view tag) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t dash = tag.find('-', start);
    parts.push_back(tag.substr(start, dash == std::string_view::npos ? std::string_view::npos : dash - start));
    if (dash == std::string_view::npos) break;
    start = dash + 1;
  }
  return parts;
}

template <typename T>
T parse_field(std::string_view text, std::string_view tag) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::ParseError, "malformed blob tag '" + std::string(tag) +
                                           "', expected n_samples-n_features-centers-cluster_std");
  }
  return value;
}

void check_spec(const BlobSpec& spec) {
  if (spec.n_samples == 0 || spec.n_features == 0 || spec.centers == 0 || !(spec.cluster_std > 0.0) ||
      !std::isfinite(spec.cluster_std)) {
    throw Error(ErrorCode::InvalidArgument, "blob parameters must all be positive");
  }
  if (spec.centers > spec.n_samples) {
    throw Error(ErrorCode::InvalidArgument, "more centres than samples");
  }
}

}  // namespace

BlobSpec BlobSpec::parse(std::string_view tag) {
  const auto parts = split_dashes(tag);
  if (parts.size() != 4) {
    throw Error(ErrorCode::ParseError, "malformed blob tag '" + std::string(tag) +
                                           "', expected n_samples-n_features-centers-cluster_std");
  }
  BlobSpec spec;
  spec.n_samples = parse_field<std::size_t>(parts[0], tag);
  spec.n_features = parse_field<std::size_t>(parts[1], tag);
  spec.centers = parse_field<std::size_t>(parts[2], tag);
  spec.cluster_std = parse_field<double>(parts[3], tag);
  check_spec(spec);
  return spec;
}

std::string BlobSpec::tag() const {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, cluster_std);
  return std::to_string(n_samples) + "-" + std::to_string(n_features) + "-" + std::to_string(centers) + "-" +
         std::string(buffer, ptr);
}

BlobData make_blobs(const BlobSpec& spec, std::uint64_t seed) {
  check_spec(spec);
  const std::size_t m = spec.n_features;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-0.5 * kBlobBoxSide, 0.5 * kBlobBoxSide);
  std::normal_distribution<double> noise(0.0, spec.cluster_std);

  std::vector<double> centers(spec.centers * m);
  for (double& c : centers) c = box(rng);

  std::vector<double> values;
  values.reserve(spec.n_samples * m);
  std::vector<int> labels;
  labels.reserve(spec.n_samples);
  const std::size_t base = spec.n_samples / spec.centers;
  const std::size_t extra = spec.n_samples % spec.centers;
  for (std::size_t c = 0; c < spec.centers; ++c) {
    const std::size_t count = base + (c < extra ? 1 : 0);
    for (std::size_t s = 0; s < count; ++s) {
      for (std::size_t d = 0; d < m; ++d) values.push_back(centers[c * m + d] + noise(rng));
      labels.push_back(static_cast<int>(c) + 1);
    }
  }
  return BlobData{PointSet(std::move(values), spec.n_samples, m), std::move(labels), std::move(centers)};
}

}  // namespace silbound
