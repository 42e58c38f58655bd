#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "graphon/errors.hpp"
#include "graphon/graph.hpp"
#include "graphon/graphon.hpp"
#include "graphon/step_graphon.hpp"

namespace graphon {

// Exact densities enumerate k^|H| cell assignments and refuse more than this.
constexpr double kDensityAssignmentBudget = 1e8;

void check_assignment_budget(std::size_t cells, std::size_t vertices);

namespace detail {

// Sum over cell assignments of prod(measures) * prod(pair factors), where the
// factor of a pair is f(edge?, value). Assignments whose partial product is
// zero are pruned.
template <class T, class Factor>
T assignment_sum(const SimpleGraph& h, const BasicStepFunction<T>& w, Factor factor) {
  const std::size_t n = h.order();
  check_assignment_budget(w.parts(), n);
  std::vector<std::size_t> cell(n, 0);
  T total(0);
  const auto recurse = [&](auto&& self, std::size_t depth, const T& acc) -> void {
    if (depth == n) {
      total += acc;
      return;
    }
    for (std::size_t c = 0; c < w.parts(); ++c) {
      cell[depth] = c;
      T next = acc * w.measure(c);
      for (std::size_t u = 0; u < depth && next != T(0); ++u)
        next *= factor(h.adjacent(u, depth), w.cell(cell[u], c));
      if (next != T(0)) self(self, depth + 1, next);
    }
  };
  recurse(recurse, 0, T(1));
  return total;
}

}  // namespace detail

// t(H, W): integral of the product of W over the edges of H. Works for signed
// step functions too.
template <class T>
T hom_density(const SimpleGraph& h, const BasicStepFunction<T>& w) {
  if (h.order() == 0) throw ValidationError("pattern graph must be non-empty");
  return detail::assignment_sum(h, w, [](bool edge, const T& v) { return edge ? v : T(1); });
}

// Probability that the W-random graph on |H| vertices is isomorphic to H.
template <class T>
T induced_density(const SimpleGraph& h, const BasicStepGraphon<T>& w) {
  if (h.order() == 0) throw ValidationError("pattern graph must be non-empty");
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= h.order(); ++i) factorial *= i;
  const std::size_t aut = automorphism_count(h);
  const T labeled = detail::assignment_sum(
      h, w, [](bool edge, const T& v) { return edge ? v : T(T(1) - v); });
  return labeled * T(static_cast<long>(factorial / aut));
}

// Integral of W(x,y)W(x',y)W(x,y')W(x',y'); non-negative also for asymmetric W.
template <class T>
T gamma4_density(const BasicStepFunction<T>& w) {
  const std::size_t k = w.parts();
  // co(i, j) = sum_y W(x_i, y) W(x_j, y) over parts y.
  Matrix<T> co(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      T sum(0);
      for (std::size_t y = 0; y < k; ++y) sum += w.measure(y) * w.cell(i, y) * w.cell(j, y);
      co(i, j) = sum;
    }
  T tr(0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) tr += w.measure(i) * w.measure(j) * co(i, j) * co(i, j);
  return tr;
}

// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Seed of the i-th independent stream derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// W-random graph on n vertices; deterministic given the seed.
SimpleGraph sample_w_random(const Graphon& w, std::size_t n, std::uint64_t seed);

double edge_density(const SimpleGraph& g);

struct SampledDensity {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

// Fraction of W-random graphs on |H| vertices isomorphic to H. Samples are
// split into a fixed number of streams so the result does not depend on the
// thread count.
SampledDensity sample_induced_density(const SimpleGraph& h, const Graphon& w,
                                      std::size_t samples, std::uint64_t seed);

}  // namespace graphon
