#include "graphon/core_ops.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace graphon {

double eval(const Graphon& g, double x, double y) {
  check_unit_coordinate(x);
  check_unit_coordinate(y);
  return g.value(x, y);
}

double degree(const Graphon& g, double x, std::size_t resolution) {
  check_unit_coordinate(x);
  return g.row_integral(x, 0.0, 1.0, resolution);
}

void check_subset_measure(const IntervalUnion& subset) {
  if (subset.measure() < 1e-12) throw DomainError("relative degree over a null subset");
}

double degree(const Graphon& g, double x, const IntervalUnion& subset, std::size_t resolution) {
  check_unit_coordinate(x);
  check_subset_measure(subset);
  double sum = 0.0;
  for (const Interval& piece : subset.pieces())
    sum += g.row_integral(x, piece.lo, piece.hi, resolution);
  return sum / subset.measure();
}

bool representable_in_double(const ExactStepFunction& g) {
  const auto exact = [](const Rational& v) { return exact_from_double(to_double(v)) == v; };
  for (const Rational& b : g.partition().bounds())
    if (!exact(b)) return false;
  for (const Rational& v : g.values().data())
    if (!exact(v)) return false;
  return true;
}

void check_dyadic_depth(unsigned depth, const Limits& limits) {
  if (depth > limits.max_dyadic_depth)
    throw ResourceError("dyadic depth " + std::to_string(depth) + " exceeds the limit " +
                        std::to_string(limits.max_dyadic_depth));
}

StepGraphon dyadic_average(const Graphon& g, unsigned depth, std::size_t resolution,
                           const Limits& limits) {
  if (const StepGraphon* s = g.step()) return dyadic_average(*s, depth, limits);
  check_dyadic_depth(depth, limits);
  const std::size_t n = std::size_t{1} << depth;
  const double w = 1.0 / static_cast<double>(n);
  Matrix<double> m(n, n);
  const long blocks = static_cast<long>(n * n);
#pragma omp parallel for schedule(dynamic)
  for (long b = 0; b < blocks; ++b) {
    const std::size_t s = static_cast<std::size_t>(b) / n;
    const std::size_t t = static_cast<std::size_t>(b) % n;
    if (t < s) continue;
    const double sx = static_cast<double>(s) * w;
    const double tx = static_cast<double>(t) * w;
    const double mean = g.rect_integral(sx, sx + w, tx, tx + w, resolution) / (w * w);
    m(s, t) = std::clamp(mean, 0.0, 1.0);
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < s; ++t) m(s, t) = m(t, s);
  return StepGraphon(IntervalPartition::dyadic(depth), std::move(m));
}

L1Distance l1_distance(const Graphon& a, const Graphon& b, std::size_t resolution) {
  if (a.step() != nullptr && b.step() != nullptr)
    return L1Distance{l1_distance<double>(*a.step(), *b.step()), 0, 0.0};
  if (resolution == 0) throw ValidationError("quadrature resolution must be positive");
  const std::size_t n = resolution;
  const double h = 1.0 / static_cast<double>(n);
  std::vector<double> rows(n, 0.0);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    const double x = (static_cast<double>(i) + 0.5) * h;
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double y = (static_cast<double>(j) + 0.5) * h;
      sum += std::abs(a.value(x, y) - b.value(x, y));
    }
    rows[static_cast<std::size_t>(i)] = sum;
  }
  double total = 0.0;
  for (double r : rows) total += r;
  return L1Distance{total * h * h, n, a.midpoint_error_bound(n) + b.midpoint_error_bound(n)};
}

Grid render_grid(const Graphon& g, std::size_t n) {
  if (n == 0) throw ValidationError("grid side must be at least 1");
  Grid grid{n, std::vector<double>(n * n)};
  const double h = 1.0 / static_cast<double>(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(n); ++i)
    for (std::size_t j = 0; j < n; ++j)
      grid.cells[static_cast<std::size_t>(i) * n + j] =
          g.value((static_cast<double>(i) + 0.5) * h, (static_cast<double>(j) + 0.5) * h);
  return grid;
}

void write_pgm(const Grid& grid, std::ostream& out) {
  out << "P2\n" << grid.n << ' ' << grid.n << "\n255\n";
  for (std::size_t i = 0; i < grid.n; ++i) {
    for (std::size_t j = 0; j < grid.n; ++j) {
      if (j > 0) out << ' ';
      out << std::lround(255.0 * std::clamp(grid.at(i, j), 0.0, 1.0));
    }
    out << '\n';
  }
}

}  // namespace graphon
