// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "peerrank/grade_matrix.hpp"

namespace peerrank {

// Grade-matrix CSV: m data rows of m comma-separated decimals, row = gradee,
// column = grader. An optional header row is auto-detected (any non-numeric
// cell in the first row). Values outside [0,1] are rejected at load. The
// companion mask CSV holds 0/1 cells of identical shape.

/// Parses grade rows from a stream; `source` names the input in diagnostics.
std::vector<std::vector<double>> parse_matrix_csv(std::istream& in,
                                                  const std::string& source);

/// Parses 0/1 mask rows from a stream.
std::vector<std::vector<std::uint8_t>> parse_mask_csv(
    std::istream& in, const std::string& source);

std::vector<std::vector<double>> load_matrix_csv(const std::string& path);
std::vector<std::vector<std::uint8_t>> load_mask_csv(const std::string& path);

/// Loads and validates a grade matrix, with an optional mask file.
GradeMatrix load_grade_matrix(
    const std::string& matrix_path,
    const std::optional<std::string>& mask_path = std::nullopt);

}  // namespace peerrank
