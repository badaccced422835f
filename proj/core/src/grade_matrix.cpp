// SPDX-License-Identifier: Apache-2.0

#include "peerrank/grade_matrix.hpp"

#include <cmath>
#include <sstream>

namespace peerrank {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw ValidationError(message);
}

bool in_unit_interval(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

}  // namespace

GradeMatrix::GradeMatrix(std::vector<double> entries, std::size_t m)
    : m_(m), entries_(std::move(entries)) {
  check_invariants();
}

GradeMatrix::GradeMatrix(std::vector<double> entries,
                         std::vector<std::uint8_t> mask, std::size_t m)
    : m_(m), entries_(std::move(entries)), mask_(std::move(mask)) {
  if (!mask_.empty() && mask_.size() != m_ * m_) {
    fail("mask shape does not match matrix shape");
  }
  bool all_present = true;
  for (std::uint8_t bit : mask_) {
    if (bit == 0) {
      all_present = false;
      break;
    }
  }
  if (all_present) mask_.clear();
  check_invariants();
  // Canonical storage: absent entries hold 0.
  for (std::size_t k = 0; k < mask_.size(); ++k) {
    if (mask_[k] == 0) entries_[k] = 0.0;
  }
}

void GradeMatrix::check_invariants() const {
  if (m_ == 0) fail("grade matrix must have at least one agent");
  if (entries_.size() != m_ * m_) {
    std::ostringstream os;
    os << "grade matrix must be square: got " << entries_.size()
       << " entries for " << m_ << " agents";
    fail(os.str());
  }
  for (std::size_t i = 0; i < m_; ++i) {
    std::size_t graders = 0;
    for (std::size_t j = 0; j < m_; ++j) {
      if (!present(i, j)) continue;
      ++graders;
      const double v = entries_[i * m_ + j];
      if (!in_unit_interval(v)) {
        std::ostringstream os;
        os << "entry out of range [0,1] at row " << (i + 1) << ", column "
           << (j + 1) << " (value " << v << ")";
        fail(os.str());
      }
    }
    if (graders == 0) {
      std::ostringstream os;
      os << "agent " << (i + 1) << " has no graders";
      fail(os.str());
    }
  }
}

std::size_t GradeMatrix::grader_count(std::size_t i) const {
  if (mask_.empty()) return m_;
  std::size_t count = 0;
  for (std::size_t j = 0; j < m_; ++j) {
    if (mask_[i * m_ + j] != 0) ++count;
  }
  return count;
}

GradeVector::GradeVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) fail("grade vector must not be empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!in_unit_interval(values_[i])) {
      std::ostringstream os;
      os << "grade out of range [0,1] at component " << (i + 1) << " (value "
         << values_[i] << ")";
      fail(os.str());
    }
  }
}

void validate(const PeerRankParams& params) {
  if (!(params.alpha > 0.0 && params.alpha < 1.0)) {
    fail("alpha must satisfy 0 < alpha < 1");
  }
  if (!(params.beta >= 0.0)) fail("beta must be >= 0");
  if (!(params.alpha + params.beta <= 1.0)) fail("alpha + beta must be <= 1");
  if (!(params.epsilon > 0.0)) fail("epsilon must be > 0");
  if (params.max_iters == 0) fail("max_iters must be >= 1");
  if (!(params.zero_weight_delta >= 0.0)) {
    fail("zero_weight_delta must be >= 0");
  }
}

GradeMatrix validate_matrix(
    const std::vector<std::vector<double>>& raw,
    const std::optional<std::vector<std::vector<std::uint8_t>>>& mask) {
  const std::size_t m = raw.size();
  if (m == 0) fail("grade matrix must have at least one agent");
  std::vector<double> entries;
  entries.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (raw[i].size() != m) {
      std::ostringstream os;
      os << "matrix is not square: row " << (i + 1) << " has "
         << raw[i].size() << " columns, expected " << m;
      fail(os.str());
    }
    entries.insert(entries.end(), raw[i].begin(), raw[i].end());
  }
  if (!mask) return GradeMatrix(std::move(entries), m);

  if (mask->size() != m) fail("mask shape does not match matrix shape");
  std::vector<std::uint8_t> bits;
  bits.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if ((*mask)[i].size() != m) fail("mask shape does not match matrix shape");
    bits.insert(bits.end(), (*mask)[i].begin(), (*mask)[i].end());
  }
  return GradeMatrix(std::move(entries), std::move(bits), m);
}

GradeVector initial_grades(const GradeMatrix& a) {
  const std::size_t m = a.size();
  std::vector<double> means(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (!a.present(i, j)) continue;
      sum += a.entry(i, j);
      ++count;
    }
    means[i] = sum / static_cast<double>(count);
  }
  return GradeVector(std::move(means));
}

GradeVector average_rule(const GradeMatrix& a) { return initial_grades(a); }

}  // namespace peerrank
