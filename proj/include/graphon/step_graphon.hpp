#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "graphon/interval.hpp"
#include "graphon/matrix.hpp"
#include "graphon/rational.hpp"

namespace graphon {

// A function [0,1)^2 -> [-1,1] that is constant on the products of the parts
// of an interval partition. Not necessarily symmetric.
template <class T>
class BasicStepFunction {
 public:
  using Scalar = T;

  BasicStepFunction() : values_(1, 1, T(0)) {}

  BasicStepFunction(BasicIntervalPartition<T> partition, Matrix<T> values)
      : partition_(std::move(partition)), values_(std::move(values)) {
    if (values_.rows() != partition_.size() || values_.cols() != partition_.size())
      throw ValidationError("value matrix is " + std::to_string(values_.rows()) + "x" +
                            std::to_string(values_.cols()) + " but the partition has " +
                            std::to_string(partition_.size()) + " parts");
    for (const T& v : values_.data())
      if (v < T(-1) || v > T(1)) throw ValidationError("step function value outside [-1, 1]");
  }

  const BasicIntervalPartition<T>& partition() const { return partition_; }
  const Matrix<T>& values() const { return values_; }
  std::size_t parts() const { return partition_.size(); }
  T measure(std::size_t i) const { return partition_.measure(i); }
  const T& cell(std::size_t i, std::size_t j) const { return values_(i, j); }

  // Value of the block containing (x, y); throws DomainError outside [0,1)^2.
  const T& operator()(double x, double y) const {
    return values_(partition_.locate(x), partition_.locate(y));
  }

  bool symmetric() const {
    for (std::size_t i = 0; i < parts(); ++i)
      for (std::size_t j = i + 1; j < parts(); ++j)
        if (values_(i, j) != values_(j, i)) return false;
    return true;
  }

 protected:
  BasicIntervalPartition<T> partition_;
  Matrix<T> values_;
};

// Symmetric step function with values in [0, 1].
template <class T>
class BasicStepGraphon : public BasicStepFunction<T> {
 public:
  BasicStepGraphon() = default;

  BasicStepGraphon(BasicIntervalPartition<T> partition, Matrix<T> values)
      : BasicStepFunction<T>(std::move(partition), std::move(values)) {
    for (const T& v : this->values_.data())
      if (v < T(0)) throw ValidationError("step graphon value outside [0, 1]");
    if (!this->symmetric()) throw ValidationError("step graphon values are not symmetric");
  }

  static BasicStepGraphon constant(const T& p) {
    return BasicStepGraphon(BasicIntervalPartition<T>(), Matrix<T>(1, 1, p));
  }
};

using StepFunction = BasicStepFunction<double>;
using StepGraphon = BasicStepGraphon<double>;
using ExactStepFunction = BasicStepFunction<Rational>;
using ExactStepGraphon = BasicStepGraphon<Rational>;

// Same function expressed on a finer partition.
template <class T>
BasicStepFunction<T> lift(const BasicStepFunction<T>& f,
                          const BasicIntervalPartition<T>& finer) {
  const auto parent = parent_map(finer, f.partition());
  Matrix<T> m(finer.size(), finer.size());
  for (std::size_t i = 0; i < finer.size(); ++i)
    for (std::size_t j = 0; j < finer.size(); ++j) m(i, j) = f.cell(parent[i], parent[j]);
  return BasicStepFunction<T>(finer, std::move(m));
}

template <class T>
BasicStepGraphon<T> lift(const BasicStepGraphon<T>& g, const BasicIntervalPartition<T>& finer) {
  const BasicStepFunction<T> f = lift(static_cast<const BasicStepFunction<T>&>(g), finer);
  return BasicStepGraphon<T>(f.partition(), f.values());
}

// a - b on the common refinement. Throws ValidationError if some entry leaves
// [-1, 1], which cannot happen when both inputs are graphons.
template <class T>
BasicStepFunction<T> difference(const BasicStepFunction<T>& a, const BasicStepFunction<T>& b) {
  const auto common = common_refinement(a.partition(), b.partition());
  const auto la = lift(a, common);
  const auto lb = lift(b, common);
  Matrix<T> m = la.values() - lb.values();
  return BasicStepFunction<T>(common, std::move(m));
}

template <class To, class From>
BasicStepFunction<To> convert(const BasicStepFunction<From>& f) {
  std::vector<To> bounds;
  for (const From& b : f.partition().bounds()) {
    if constexpr (std::is_same_v<To, double>) {
      bounds.push_back(to_double(b));
    } else {
      bounds.push_back(from_double<To>(to_double(b)));
    }
  }
  Matrix<To> m(f.parts(), f.parts());
  for (std::size_t i = 0; i < f.parts(); ++i)
    for (std::size_t j = 0; j < f.parts(); ++j) {
      if constexpr (std::is_same_v<To, double>) {
        m(i, j) = to_double(f.cell(i, j));
      } else {
        m(i, j) = from_double<To>(to_double(f.cell(i, j)));
      }
    }
  return BasicStepFunction<To>(BasicIntervalPartition<To>(std::move(bounds)), std::move(m));
}

inline StepGraphon to_double_graphon(const ExactStepGraphon& g) {
  const auto f = convert<double>(static_cast<const ExactStepFunction&>(g));
  return StepGraphon(f.partition(), f.values());
}

inline ExactStepGraphon to_exact_graphon(const StepGraphon& g) {
  const auto f = convert<Rational>(static_cast<const StepFunction&>(g));
  return ExactStepGraphon(f.partition(), f.values());
}

// True when every bound and value of g is exactly representable as a double.
bool representable_in_double(const ExactStepFunction& g);

}  // namespace graphon
