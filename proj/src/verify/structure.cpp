#include "graphon/verify/structure.hpp"

#include <cmath>
#include <string>

#include "graphon/core_ops.hpp"

namespace graphon {

namespace {

// Deterministic, well spread sample positions in (0, 1).
double sample_position(std::size_t i) {
  const double golden = 0.6180339887498949;
  return std::fmod(0.5 + golden * static_cast<double>(i), 1.0);
}

std::string res_tag(std::size_t n) { return "n=" + std::to_string(n); }

}  // namespace

double expected_degree(Part p) {
  if (p == Part::R) return 77.0 / 252.0;
  return (90.0 + part_weight(p)) / 252.0;
}

std::vector<CheckReport> verify_structure(const UniversalGraphon& w0, std::size_t n,
                                          const StructureOptions& options) {
  std::vector<CheckReport> out;
  const PartLayout& layout = w0.layout();

  // Sizes: from the exact offsets of consecutive parts.
  for (std::size_t i = 0; i < layout.order().size(); ++i) {
    const Part p = layout.order()[i];
    const Rational lo = layout.exact_offset(p);
    const Rational hi =
        i + 1 < layout.order().size() ? layout.exact_offset(layout.order()[i + 1]) : Rational(1);
    out.push_back(make_check("size." + std::string(part_name(p)), to_double(hi - lo),
                             p == Part::Q ? 5.0 / 14.0 : 1.0 / 14.0, 0.0));
  }

  const double tol = options.degree_tolerance;
  std::vector<Interval> balanced;
  for (Part p : kBalancedParts) balanced.push_back({layout.offset(p), layout.offset(p) + layout.size(p)});
  balanced.push_back({layout.offset(Part::Q), layout.offset(Part::Q) + layout.size(Part::Q)});
  const IntervalUnion balance_set(balanced);

  for (Part p : kAllParts) {
    if (p == Part::Q) continue;
    const std::string name(part_name(p));
    double worst = expected_degree(p);
    double worst_balance = 5.0 / 13.0;
    for (std::size_t i = 0; i < options.samples_per_part; ++i) {
      const double x = w0.at(p, sample_position(i));
      const double deg = degree(w0, x, n);
      if (std::abs(deg - expected_degree(p)) > std::abs(worst - expected_degree(p))) worst = deg;
      if (p == Part::R) continue;
      const double rel = degree(w0, x, balance_set, n);
      if (std::abs(rel - 5.0 / 13.0) > std::abs(worst_balance - 5.0 / 13.0)) worst_balance = rel;
    }
    out.push_back(make_check("degree." + name, worst, expected_degree(p), tol, CheckKind::equal,
                             res_tag(n)));
    if (p != Part::R)
      out.push_back(make_check("balance." + name, worst_balance, 5.0 / 13.0, tol,
                               CheckKind::equal, res_tag(n)));
  }

  // Q: every vertex has the same degree 5/14 + 8/252 + sum_X |X| int xi_X.
  double xi_total = 0.0;
  for (Part p : kBalancedParts) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      s += w0.xi(p, (static_cast<double>(i) + 0.5) / static_cast<double>(n));
    xi_total += s / static_cast<double>(n) / 14.0;
  }
  const double q_formula = 5.0 / 14.0 + 8.0 / 252.0 + xi_total;
  double q_min = 1.0;
  double q_worst = q_formula;
  for (std::size_t i = 0; i < options.samples_per_part; ++i) {
    const double deg = degree(w0, w0.at(Part::Q, sample_position(i)), n);
    q_min = std::min(q_min, deg);
    if (std::abs(deg - q_formula) > std::abs(q_worst - q_formula)) q_worst = deg;
  }
  out.push_back(make_check("degree.Q.lower", q_min, 98.0 / 252.0, tol, CheckKind::at_least, res_tag(n)));
  out.push_back(make_check("degree.Q.formula", q_worst, q_formula, tol, CheckKind::equal, res_tag(n)));
  return out;
}

CheckReport verify_checker_mass(const UniversalGraphon& w0, std::size_t n) {
  double sum = 0.0;
  const double h = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = w0.at(Part::A, (static_cast<double>(i) + 0.5) * h);
    for (std::size_t j = 0; j < n; ++j) sum += w0.value(x, w0.at(Part::A, (static_cast<double>(j) + 0.5) * h));
  }
  const double measured = sum * h * h;
  // Unaligned grids can misclassify a strip along every interval boundary.
  const bool aligned = (n & (n - 1)) == 0;
  const double grid = aligned ? 4.0 * h * h : 2.0 * (w0.depth() + 2.0) * h;
  const double tol = w0.tiles().deviation(Part::A, Part::A) + grid + 1e-9;
  return make_check("checker_mass.AxA", measured, 1.0 / 3.0, tol, CheckKind::equal, res_tag(n));
}

}  // namespace graphon
