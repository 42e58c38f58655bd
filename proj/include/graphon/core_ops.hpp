#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "graphon/graphon.hpp"
#include "graphon/interval.hpp"
#include "graphon/step_graphon.hpp"

namespace graphon {

struct Limits {
  // dyadic_average refuses depths above this (2^depth parts per side).
  unsigned max_dyadic_depth = 11;
};

// Checked evaluation: throws DomainError unless x, y are in [0, 1).
double eval(const Graphon& g, double x, double y);

template <class T>
const T& eval(const BasicStepFunction<T>& g, double x, double y) {
  return g(x, y);
}

// deg(x) = integral of W(x, y) dy.
double degree(const Graphon& g, double x, std::size_t resolution);

// Relative degree deg^A(x) = integral over A of W(x, y) dy / |A|. Subsets of
// measure below 1e-12 are rejected with DomainError.
double degree(const Graphon& g, double x, const IntervalUnion& subset, std::size_t resolution);

template <class T>
T degree(const BasicStepFunction<T>& g, double x) {
  const std::size_t i = g.partition().locate(x);
  T sum(0);
  for (std::size_t j = 0; j < g.parts(); ++j) sum += g.cell(i, j) * g.measure(j);
  return sum;
}

void check_subset_measure(const IntervalUnion& subset);

template <class T>
T degree(const BasicStepFunction<T>& g, double x, const IntervalUnion& subset) {
  check_subset_measure(subset);
  const std::size_t i = g.partition().locate(x);
  T sum(0);
  T total(0);
  for (const Interval& piece : subset.pieces()) {
    const T lo = from_double<T>(piece.lo);
    const T hi = from_double<T>(piece.hi);
    total += hi - lo;
    for (std::size_t j = 0; j < g.parts(); ++j) {
      const T a = std::max(lo, g.partition().lo(j));
      const T b = std::min(hi, g.partition().hi(j));
      if (a < b) sum += g.cell(i, j) * (b - a);
    }
  }
  return sum / total;
}

// Exact integral of a step function over [x0, x1) x [y0, y1).
template <class T>
T rect_integral(const BasicStepFunction<T>& f, const T& x0, const T& x1, const T& y0,
                const T& y1) {
  const auto& p = f.partition();
  T sum(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const T ox = std::min(x1, p.hi(i)) - std::max(x0, p.lo(i));
    if (!(ox > T(0))) continue;
    for (std::size_t j = 0; j < p.size(); ++j) {
      const T oy = std::min(y1, p.hi(j)) - std::max(y0, p.lo(j));
      if (oy > T(0)) sum += f.cell(i, j) * ox * oy;
    }
  }
  return sum;
}

void check_dyadic_depth(unsigned depth, const Limits& limits);

// W^d: the 2^d-part equipartition step graphon whose (s, t) block is the mean
// of g over I^d(s) x I^d(t). Generic evaluators are integrated with
// g.rect_integral at the given resolution.
StepGraphon dyadic_average(const Graphon& g, unsigned depth, std::size_t resolution,
                           const Limits& limits = {});

template <class T>
BasicStepGraphon<T> dyadic_average(const BasicStepGraphon<T>& g, unsigned depth,
                                   const Limits& limits = {}) {
  check_dyadic_depth(depth, limits);
  const auto grid = BasicIntervalPartition<T>::dyadic(depth);
  const std::size_t n = grid.size();
  const auto& p = g.partition();
  // overlaps[s] lists (cell, |I^d(s) ∩ cell|) pairs.
  std::vector<std::vector<std::pair<std::size_t, T>>> overlaps(n);
  std::size_t first = 0;
  for (std::size_t s = 0; s < n; ++s) {
    while (!(grid.lo(s) < p.hi(first))) ++first;
    for (std::size_t c = first; c < p.size() && p.lo(c) < grid.hi(s); ++c) {
      const T len = std::min(grid.hi(s), p.hi(c)) - std::max(grid.lo(s), p.lo(c));
      if (len > T(0)) overlaps[s].emplace_back(c, len);
    }
  }
  const T scale = T(static_cast<long>(n)) * T(static_cast<long>(n));
  Matrix<T> m(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s; t < n; ++t) {
      T sum(0);
      for (const auto& [ci, li] : overlaps[s])
        for (const auto& [cj, lj] : overlaps[t]) sum += g.cell(ci, cj) * li * lj;
      m(s, t) = sum * scale;
      m(t, s) = m(s, t);
    }
  return BasicStepGraphon<T>(grid, std::move(m));
}

// Exact L1 distance of two step functions on their common refinement.
template <class T>
T l1_distance(const BasicStepFunction<T>& a, const BasicStepFunction<T>& b) {
  const auto common = common_refinement(a.partition(), b.partition());
  const auto pa = parent_map(common, a.partition());
  const auto pb = parent_map(common, b.partition());
  T sum(0);
  for (std::size_t i = 0; i < common.size(); ++i)
    for (std::size_t j = 0; j < common.size(); ++j)
      sum += abs_value(T(a.cell(pa[i], pa[j]) - b.cell(pb[i], pb[j]))) * common.measure(i) *
             common.measure(j);
  return sum;
}

struct L1Distance {
  double value = 0.0;
  // 0 when computed exactly on a common refinement.
  std::size_t resolution = 0;
  double error_bound = 0.0;
};

// Exact for two step evaluators; otherwise the midpoint rule on an n x n grid
// with the summed midpoint error bounds of both inputs.
L1Distance l1_distance(const Graphon& a, const Graphon& b, std::size_t resolution);

// n x n samples at cell centers. Row i, column j holds g((i+1/2)/n, (j+1/2)/n);
// row 0 is the top of the picture, matching the usual graphon drawings.
struct Grid {
  std::size_t n = 0;
  std::vector<double> cells;

  double at(std::size_t i, std::size_t j) const { return cells[i * n + j]; }
};

Grid render_grid(const Graphon& g, std::size_t n);

// Plain PGM (P2), maxval 255, pixel = round(255 * value). Value 0 is black
// and 1 is white, i.e. the shading is inverted relative to the usual graphon
// pictures where 1 is drawn black.
void write_pgm(const Grid& grid, std::ostream& out);

}  // namespace graphon
