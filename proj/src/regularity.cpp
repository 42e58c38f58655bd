#include <algorithm>
#include <cmath>

#include "graphon/cutnorm.hpp"
#include "graphon/errors.hpp"

namespace graphon {

StepGraphon block_average_graphon(const StepGraphon& w, const IntervalPartition& coarse) {
  const auto parent = parent_map(w.partition(), coarse);
  const std::size_t k = coarse.size();
  Matrix<double> sum(k, k);
  for (std::size_t i = 0; i < w.parts(); ++i)
    for (std::size_t j = 0; j < w.parts(); ++j)
      sum(parent[i], parent[j]) += w.cell(i, j) * w.measure(i) * w.measure(j);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      sum(p, q) = std::clamp(sum(p, q) / (coarse.measure(p) * coarse.measure(q)), 0.0, 1.0);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < p; ++q) sum(p, q) = sum(q, p);
  return StepGraphon(coarse, std::move(sum));
}

RegularityReport weak_regular_partition(const StepGraphon& w, double eps,
                                        const IntervalPartition& base,
                                        std::size_t max_iterations) {
  if (!(eps > 0.0 && eps <= 1.0)) throw ValidationError("eps must lie in (0, 1]");
  if (!w.partition().refines(base))
    throw ValidationError("base partition is not aligned with the cells of W");
  RegularityReport report;
  report.partition = base;
  for (std::size_t iter = 0;; ++iter) {
    const StepGraphon avg = block_average_graphon(w, report.partition);
    const StepFunction diff = difference<double>(w, lift(avg, w.partition()));
    const CutNormResult cut = cut_norm(diff);
    report.cut = cut.value;
    report.cut_exact = cut.exact;
    report.iterations = iter;
    double l1 = 0.0;
    for (std::size_t i = 0; i < diff.parts(); ++i)
      for (std::size_t j = 0; j < diff.parts(); ++j)
        l1 += diff.measure(i) * diff.measure(j) * std::abs(diff.cell(i, j));
    report.cut_upper = cut.exact ? cut.value : std::min(1.0, l1);
    if (report.cut_upper <= eps) {
      report.certified = true;
      report.message = cut.exact ? "certified" : "certified by the L1 upper bound";
      return report;
    }
    if (iter == max_iterations) {
      report.message = "iteration cap reached without certification";
      return report;
    }
    // Split every part into maximal runs of equal (part, in S, in T) labels.
    const auto parent = parent_map(w.partition(), report.partition);
    std::vector<bool> in_s(w.parts(), false);
    std::vector<bool> in_t(w.parts(), false);
    for (std::size_t i : cut.witness.s) in_s[i] = true;
    for (std::size_t i : cut.witness.t) in_t[i] = true;
    std::vector<double> bounds{0.0};
    for (std::size_t i = 1; i < w.parts(); ++i)
      if (parent[i] != parent[i - 1] || in_s[i] != in_s[i - 1] || in_t[i] != in_t[i - 1])
        bounds.push_back(w.partition().lo(i));
    bounds.push_back(1.0);
    IntervalPartition next(std::move(bounds));
    if (next == report.partition) {
      report.message = "witness sets did not split any part";
      return report;
    }
    report.partition = std::move(next);
  }
}

}  // namespace graphon
