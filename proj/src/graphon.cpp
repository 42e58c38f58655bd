#include "graphon/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace graphon {

namespace {

std::size_t sample_count(double length, std::size_t resolution) {
  const double n = std::ceil(length * static_cast<double>(resolution) - 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(n));
}

// Integral over [a, b) of max(0, min(y1, ...) - max(y0, 1 - x)) dx, the
// length of {y in [y0, y1) : x + y >= 1}. The integrand is piecewise linear
// with kinks at x = 1 - y1 and x = 1 - y0.
double half_strip_area(double a, double b, double y0, double y1) {
  auto len = [&](double x) { return std::max(0.0, y1 - std::max(y0, 1.0 - x)); };
  double knots[4] = {a, std::clamp(1.0 - y1, a, b), std::clamp(1.0 - y0, a, b), b};
  std::sort(knots, knots + 4);
  double area = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double l = knots[i];
    const double r = knots[i + 1];
    if (r > l) area += 0.5 * (len(l) + len(r)) * (r - l);
  }
  return area;
}

}  // namespace

double Graphon::row_integral(double x, double y0, double y1, std::size_t resolution) const {
  if (y1 <= y0) return 0.0;
  const std::size_t m = sample_count(y1 - y0, resolution);
  const double h = (y1 - y0) / static_cast<double>(m);
  double sum = 0.0;
  for (std::size_t j = 0; j < m; ++j) sum += value(x, y0 + (static_cast<double>(j) + 0.5) * h);
  return sum * h;
}

double Graphon::rect_integral(double x0, double x1, double y0, double y1,
                              std::size_t resolution) const {
  if (x1 <= x0 || y1 <= y0) return 0.0;
  const std::size_t m = sample_count(x1 - x0, resolution);
  const double h = (x1 - x0) / static_cast<double>(m);
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    sum += row_integral(x0 + (static_cast<double>(i) + 0.5) * h, y0, y1, resolution);
  return sum * h;
}

ConstantGraphon::ConstantGraphon(double p)
    : p_(p), step_(StepGraphon::constant(p)) {}

std::string ConstantGraphon::name() const {
  std::ostringstream out;
  out.precision(12);
  out << "const:" << p_;
  return out.str();
}

double HalfGraphon::row_integral(double x, double y0, double y1, std::size_t) const {
  return std::max(0.0, y1 - std::max(y0, 1.0 - x));
}

double HalfGraphon::rect_integral(double x0, double x1, double y0, double y1,
                                  std::size_t) const {
  if (x1 <= x0 || y1 <= y0) return 0.0;
  return half_strip_area(x0, x1, y0, y1);
}

double StepEvaluator::row_integral(double x, double y0, double y1, std::size_t) const {
  const auto& p = g_.partition();
  const std::size_t i = p.locate(x);
  double sum = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double overlap = std::min(y1, p.hi(j)) - std::max(y0, p.lo(j));
    if (overlap > 0.0) sum += g_.cell(i, j) * overlap;
  }
  return sum;
}

double StepEvaluator::rect_integral(double x0, double x1, double y0, double y1,
                                    std::size_t) const {
  const auto& p = g_.partition();
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double ox = std::min(x1, p.hi(i)) - std::max(x0, p.lo(i));
    if (ox <= 0.0) continue;
    for (std::size_t j = 0; j < p.size(); ++j) {
      const double oy = std::min(y1, p.hi(j)) - std::max(y0, p.lo(j));
      if (oy > 0.0) sum += g_.cell(i, j) * ox * oy;
    }
  }
  return sum;
}

double StepEvaluator::midpoint_error_bound(std::size_t n) const {
  // A bound that is not a multiple of 1/n misclassifies one strip of cells
  // of width 1/n in each direction.
  const double dn = static_cast<double>(n);
  std::size_t misaligned = 0;
  const auto& b = g_.partition().bounds();
  for (std::size_t i = 1; i + 1 < b.size(); ++i) {
    const double scaled = b[i] * dn;
    if (scaled != std::floor(scaled)) ++misaligned;
  }
  return 2.0 * static_cast<double>(misaligned) / dn;
}

std::string StepEvaluator::name() const {
  return "step:" + std::to_string(g_.parts()) + "-part";
}

GraphonPtr make_constant(double p) { return std::make_shared<ConstantGraphon>(p); }
GraphonPtr make_half() { return std::make_shared<HalfGraphon>(); }
GraphonPtr make_step(StepGraphon g) { return std::make_shared<StepEvaluator>(std::move(g)); }

}  // namespace graphon
