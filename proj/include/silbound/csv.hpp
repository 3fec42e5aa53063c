// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "silbound/matrix.hpp"

namespace silbound {

/// Comma-separated numeric rows. Blank lines are skipped; every value must
/// parse completely as a finite number ('.' decimal separator) and every row
/// must have the same number of columns. Errors name the 1-based line:
/// ParseError for malformed or ragged rows, NonFiniteInput for nan/inf.
std::vector<std::vector<double>> parse_numeric_csv(std::istream& in, bool has_header);

PointSet read_points_csv(const std::filesystem::path& path, bool has_header);

/// n×n matrix without a header, checked by validate_matrix().
DissimilarityMatrix read_matrix_csv(const std::filesystem::path& path);

/// One integer label per line (an optional non-numeric first line is
/// treated as a header).
std::vector<int> read_labels_csv(const std::filesystem::path& path);

void write_points_csv(const std::filesystem::path& path, const PointSet& points);
void write_matrix_csv(const std::filesystem::path& path, const DissimilarityMatrix& delta);
void write_labels_csv(const std::filesystem::path& path, std::span<const int> labels);

}  // namespace silbound
