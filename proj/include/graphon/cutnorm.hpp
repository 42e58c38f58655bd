#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "graphon/interval.hpp"
#include "graphon/step_graphon.hpp"

namespace graphon {

// Sorted, duplicate-free list of cell indices.
using CellSet = std::vector<std::size_t>;

// Cells whose union is exactly `set`; throws ValidationError if `set` is not
// a union of cells of the partition.
CellSet cells_of(const IntervalPartition& partition, const IntervalUnion& set);

// d_W(A, B) = integral of W over A x B for unions of cells.
template <class T>
T block_density(const BasicStepFunction<T>& w, const CellSet& a, const CellSet& b) {
  T sum(0);
  for (std::size_t i : a) {
    if (i >= w.parts()) throw ValidationError("cell index out of range");
    for (std::size_t j : b) {
      if (j >= w.parts()) throw ValidationError("cell index out of range");
      sum += w.cell(i, j) * w.measure(i) * w.measure(j);
    }
  }
  return sum;
}

double block_density(const StepFunction& w, const IntervalUnion& a, const IntervalUnion& b);

struct CutWitness {
  CellSet s;
  CellSet t;
  // d_W(S, T); its absolute value is the reported norm.
  double value = 0.0;
};

struct CutNormResult {
  double value = 0.0;
  CutWitness witness;
  // False when the search was randomized; value is then only a lower bound.
  bool exact = true;
  // Distinct row and column profiles after merging identical cells.
  std::size_t row_classes = 0;
  std::size_t column_classes = 0;
};

struct CutNormOptions {
  // Exact enumeration over 2^m subsets of the smaller side, m <= this.
  std::size_t max_exact_classes = 24;
  std::size_t random_restarts = 256;
  std::uint64_t seed = 1;
};

// ||W||_box over cell-aligned sets, which attain the supremum for step
// functions. Cells with identical row (column) profiles are merged first.
CutNormResult cut_norm(const StepFunction& w, const CutNormOptions& options = {});

struct RegularityReport {
  IntervalPartition partition;
  bool certified = false;
  // cut norm of W minus its block average over `partition`
  double cut = 0.0;
  bool cut_exact = true;
  // Certified upper bound on the cut norm: the exact value, or the L1 norm
  // of the difference when the search was randomized.
  double cut_upper = 0.0;
  std::size_t iterations = 0;
  std::string message;
};

// Refines `base` until the block average of W over the partition is within
// eps of W in cut norm, certified by cut_upper. Every cell boundary of `base` must be a cell boundary
// of W. Each round splits every part into maximal runs of W-cells with equal
// membership in the witness sets S and T.
RegularityReport weak_regular_partition(const StepGraphon& w, double eps,
                                        const IntervalPartition& base,
                                        std::size_t max_iterations = 32);

// Block average of W over a coarser partition, expressed on that partition.
StepGraphon block_average_graphon(const StepGraphon& w, const IntervalPartition& coarse);

}  // namespace graphon
