#include "graphon/traces.hpp"

#include <cmath>

#include "graphon/cutnorm.hpp"
#include "graphon/densities.hpp"

namespace graphon {

BlockGrouping BlockGrouping::singletons(std::size_t k) {
  BlockGrouping g;
  for (std::size_t i = 0; i < k; ++i) {
    g.rows.push_back({i});
    g.cols.push_back({i});
  }
  return g;
}

namespace {

void validate_side(const std::vector<std::vector<std::size_t>>& groups, std::size_t k) {
  std::vector<bool> seen(k, false);
  for (const auto& group : groups) {
    if (group.empty()) throw ValidationError("empty group");
    for (std::size_t i : group) {
      if (i >= k) throw ValidationError("group index out of range");
      if (seen[i]) throw ValidationError("index " + std::to_string(i) + " in two groups");
      seen[i] = true;
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    if (!seen[i]) throw ValidationError("index " + std::to_string(i) + " not covered");
}

bool equal_parts(const IntervalPartition& p) {
  const double m = 1.0 / static_cast<double>(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (std::abs(p.measure(i) - m) > 1e-12) return false;
  return true;
}

}  // namespace

void validate_grouping(const BlockGrouping& g, std::size_t k_rows, std::size_t k_cols) {
  validate_side(g.rows, k_rows);
  validate_side(g.cols, k_cols);
}

Gamma4GapResult gamma4_gap_check(const StepGraphon& w, const StepGraphon& w0, double eps) {
  if (!w.partition().refines(w0.partition()))
    throw ValidationError("W does not refine W0");
  if (!equal_parts(w.partition()) || !equal_parts(w0.partition()))
    throw ValidationError("all parts must have the same size");
  const StepGraphon avg = block_average_graphon(w, w0.partition());
  for (std::size_t i = 0; i < avg.values().data().size(); ++i)
    if (std::abs(avg.values().data()[i] - w0.values().data()[i]) > 1e-12)
      throw ValidationError("W0 is not the block average of W over its parts");
  Gamma4GapResult r;
  r.cut = cut_norm(difference<double>(w, w0)).value;
  r.gap = gamma4_density<double>(w) - gamma4_density<double>(w0);
  r.bound = std::pow(r.cut, 4) / 8.0;
  r.triggered = r.cut >= eps;
  r.holds = !r.triggered || r.gap >= r.bound - 1e-9;
  return r;
}

}  // namespace graphon
