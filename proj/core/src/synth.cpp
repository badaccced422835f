// SPDX-License-Identifier: Apache-2.0

#include "peerrank/synth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace peerrank {

namespace {

int clamp_int(long v, int lo, int hi) {
  return static_cast<int>(std::clamp(v, static_cast<long>(lo),
                                     static_cast<long>(hi)));
}

void check_mark(int mark) {
  if (mark < 0 || mark > 100) {
    std::ostringstream os;
    os << "true mark " << mark << " outside [0,100]";
    throw ValidationError(os.str());
  }
}

void check_model(const MarkingModel& model) {
  if (model.questions < 1) throw ValidationError("questions must be >= 1");
  if (const auto* n = std::get_if<NormalNoiseModel>(&model.kind)) {
    if (!(n->c_prop >= 0.0) || !(n->eps_sd >= 0.0)) {
      throw ValidationError("noise model constants must be >= 0");
    }
  } else if (const auto* u = std::get_if<UniformNoiseModel>(&model.kind)) {
    if (!(u->c_prop >= 0.0)) {
      throw ValidationError("noise model constants must be >= 0");
    }
  }
}

}  // namespace

std::vector<int> sample_true_marks(const MarkDistribution& dist, std::size_t m,
                                   Rng& rng) {
  if (m == 0) throw ValidationError("mark count must be >= 1");
  std::vector<int> marks(m);

  if (const auto* b = std::get_if<BinomialMarks>(&dist)) {
    if (!(b->p >= 0.0 && b->p <= 1.0)) {
      throw ValidationError("binomial p must lie in [0,1]");
    }
    if (b->trials < 0 || b->trials > 100) {
      throw ValidationError("binomial trials must lie in [0,100]");
    }
    for (auto& mark : marks) mark = rng.binomial(b->trials, b->p);
    return marks;
  }
  if (const auto* n = std::get_if<NormalMarks>(&dist)) {
    if (!(n->sd >= 0.0)) throw ValidationError("normal sd must be >= 0");
    for (auto& mark : marks) {
      mark = clamp_int(std::lround(rng.normal(n->mean, n->sd)), 0, 100);
    }
    return marks;
  }
  const auto& u = std::get<UniformMarks>(dist);
  if (!(0 <= u.lo && u.lo <= u.hi && u.hi <= 100)) {
    throw ValidationError("uniform bounds must satisfy 0 <= lo <= hi <= 100");
  }
  for (auto& mark : marks) {
    mark = static_cast<int>(rng.uniform_int(u.lo, u.hi));
  }
  return marks;
}

int peer_grade(int true_mark, double grader_grade, const MarkingModel& model,
               Rng& rng) {
  check_mark(true_mark);
  check_model(model);
  if (!(grader_grade >= 0.0 && grader_grade <= 1.0)) {
    throw ValidationError("grader grade must lie in [0,1]");
  }
  const int q = model.questions;
  // Questions the gradee is expected to answer correctly.
  const int expected =
      static_cast<int>(std::lround(q * (true_mark / 100.0)));

  if (std::holds_alternative<BinomialSumModel>(model.kind)) {
    return rng.binomial(expected, grader_grade) +
           rng.binomial(q - expected, 1.0 - grader_grade);
  }
  if (const auto* n = std::get_if<NormalNoiseModel>(&model.kind)) {
    const double sd = n->c_prop * (1.0 - grader_grade) + n->eps_sd;
    if (sd <= 0.0) return expected;
    return clamp_int(std::lround(expected + rng.normal(0.0, sd)), 0, q);
  }
  const auto& u = std::get<UniformNoiseModel>(model.kind);
  const long width = std::lround(u.c_prop * (1.0 - grader_grade));
  const long drawn = rng.uniform_int(expected - width, expected + width);
  return clamp_int(drawn, 0, q);
}

int apply_bias(int grade, double r, int max_grade) {
  if (!(r > 0.0)) throw ValidationError("bias factor r must be > 0");
  if (grade < 0 || grade > max_grade) {
    throw ValidationError("grade outside [0,max_grade]");
  }
  return clamp_int(std::lround(r * grade), 0, max_grade);
}

GradeMatrix build_grade_matrix(const std::vector<int>& true_marks,
                               const MarkingModel& model, double bias_r,
                               Rng& rng) {
  check_model(model);
  if (!(bias_r > 0.0)) throw ValidationError("bias factor r must be > 0");
  const std::size_t m = true_marks.size();
  if (m == 0) throw ValidationError("grade matrix must have at least one agent");
  for (int mark : true_marks) check_mark(mark);

  const double q = static_cast<double>(model.questions);
  std::vector<double> entries(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const int raw =
          peer_grade(true_marks[i], true_marks[j] / 100.0, model, rng);
      entries[i * m + j] =
          apply_bias(raw, bias_r, model.questions) / q;
    }
  }
  return GradeMatrix(std::move(entries), m);
}

}  // namespace peerrank
