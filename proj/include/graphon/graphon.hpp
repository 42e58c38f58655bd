#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>

#include "graphon/step_graphon.hpp"

namespace graphon {

// Point-evaluable symmetric function [0,1)^2 -> [0,1].
//
// Integrals default to the midpoint rule with `resolution` samples per unit
// length; subclasses with closed forms override them. The resolution is always
// supplied by the caller.
class Graphon {
 public:
  virtual ~Graphon() = default;

  // Unchecked value at (x, y), both in [0, 1).
  virtual double value(double x, double y) const = 0;

  // Integral of W(x, .) over [y0, y1).
  virtual double row_integral(double x, double y0, double y1, std::size_t resolution) const;

  // Integral of W over [x0, x1) x [y0, y1).
  virtual double rect_integral(double x0, double x1, double y0, double y1,
                               std::size_t resolution) const;

  // Upper bound on the L1 distance between W and its midpoint samples on an
  // n x n grid (the step graphon taking W's value at each cell center).
  // The default is the trivial bound.
  virtual double midpoint_error_bound(std::size_t /*n*/) const { return 1.0; }

  // L1 bound on the deviation from the ideal (untruncated) object.
  virtual double truncation_error_bound() const { return 0.0; }

  // Exact step representation, when this evaluator has one.
  virtual const StepGraphon* step() const { return nullptr; }

  virtual std::string name() const = 0;
};

using GraphonPtr = std::shared_ptr<const Graphon>;

class ConstantGraphon final : public Graphon {
 public:
  explicit ConstantGraphon(double p);

  double value(double, double) const override { return p_; }
  double row_integral(double, double y0, double y1, std::size_t) const override {
    return p_ * (y1 - y0);
  }
  double rect_integral(double x0, double x1, double y0, double y1,
                       std::size_t) const override {
    return p_ * (x1 - x0) * (y1 - y0);
  }
  double midpoint_error_bound(std::size_t) const override { return 0.0; }
  const StepGraphon* step() const override { return &step_; }
  std::string name() const override;

  double p() const { return p_; }

 private:
  double p_;
  StepGraphon step_;
};

// 1 if x + y >= 1, else 0.
class HalfGraphon final : public Graphon {
 public:
  double value(double x, double y) const override { return x + y >= 1.0 ? 1.0 : 0.0; }
  double row_integral(double x, double y0, double y1, std::size_t) const override;
  double rect_integral(double x0, double x1, double y0, double y1,
                       std::size_t) const override;
  // Only the n cells on the anti-diagonal are misclassified, each by half its
  // area.
  double midpoint_error_bound(std::size_t n) const override { return 0.5 / static_cast<double>(n); }
  std::string name() const override { return "half"; }
};

class StepEvaluator final : public Graphon {
 public:
  explicit StepEvaluator(StepGraphon g) : g_(std::move(g)) {}

  double value(double x, double y) const override { return g_(x, y); }
  double row_integral(double x, double y0, double y1, std::size_t) const override;
  double rect_integral(double x0, double x1, double y0, double y1,
                       std::size_t) const override;
  double midpoint_error_bound(std::size_t n) const override;
  const StepGraphon* step() const override { return &g_; }
  std::string name() const override;

 private:
  StepGraphon g_;
};

// Wraps an arbitrary symmetric function. Mostly useful in tests.
class FunctionGraphon final : public Graphon {
 public:
  FunctionGraphon(std::function<double(double, double)> f, std::string name)
      : f_(std::move(f)), name_(std::move(name)) {}

  double value(double x, double y) const override { return f_(x, y); }
  std::string name() const override { return name_; }

 private:
  std::function<double(double, double)> f_;
  std::string name_;
};

GraphonPtr make_constant(double p);
GraphonPtr make_half();
GraphonPtr make_step(StepGraphon g);

}  // namespace graphon
