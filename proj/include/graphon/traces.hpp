#pragma once

#include <cstddef>
#include <vector>

#include "graphon/errors.hpp"
#include "graphon/matrix.hpp"
#include "graphon/step_graphon.hpp"

namespace graphon {

// Row groups X_1..X_k and column groups Y_1..Y_l, each a partition of [K].
struct BlockGrouping {
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<std::size_t>> cols;

  static BlockGrouping singletons(std::size_t k);
};

// Throws ValidationError unless both sides partition 0..k-1 into non-empty
// groups.
void validate_grouping(const BlockGrouping& g, std::size_t k_rows, std::size_t k_cols);

// Replaces every X_i x Y_j block by its mean.
template <class T>
Matrix<T> block_average(const Matrix<T>& m, const BlockGrouping& g) {
  validate_grouping(g, m.rows(), m.cols());
  Matrix<T> n(m.rows(), m.cols());
  for (const auto& xs : g.rows)
    for (const auto& ys : g.cols) {
      T sum(0);
      for (std::size_t x : xs)
        for (std::size_t y : ys) sum += m(x, y);
      const T mean = sum / T(static_cast<long>(xs.size() * ys.size()));
      for (std::size_t x : xs)
        for (std::size_t y : ys) n(x, y) = mean;
    }
  return n;
}

// Rows i and j both replaced by their average.
template <class T>
Matrix<T> row_pair_average(const Matrix<T>& m, std::size_t i, std::size_t j) {
  if (i >= m.rows() || j >= m.rows()) throw ValidationError("row index out of range");
  Matrix<T> n = m;
  for (std::size_t y = 0; y < m.cols(); ++y) n(i, y) = n(j, y) = (m(i, y) + m(j, y)) / T(2);
  return n;
}

// Tr M M^T M M^T, the sum of squared entries of M M^T.
template <class T>
T trace_c4(const Matrix<T>& m) {
  const Matrix<T> g = m * m.transpose();
  T sum(0);
  for (const T& v : g.data()) sum += v * v;
  return sum;
}

struct Gamma4GapResult {
  double cut = 0.0;
  double gap = 0.0;    // d(Gamma_4, W) - d(Gamma_4, W0)
  double bound = 0.0;  // cut^4 / 8
  bool triggered = false;  // cut >= eps
  bool holds = true;
};

// The implication cut(W - W0) >= eps  =>  gap >= cut^4/8 - 1e-9, evaluated
// with the exact cut norm. W must refine W0, both with equal-sized parts,
// and W0 must be the block average of W over its parts; ValidationError
// otherwise.
Gamma4GapResult gamma4_gap_check(const StepGraphon& w, const StepGraphon& w0, double eps);

}  // namespace graphon
