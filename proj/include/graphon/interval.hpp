#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <type_traits>
#include <vector>

#include "graphon/errors.hpp"
#include "graphon/rational.hpp"

namespace graphon {

// Half-open [lo, hi) inside [0, 1]. Every interval in the toolkit is
// half-open so that partitions tile [0, 1) without overlaps.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x < hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Throws ValidationError unless 0 <= lo < hi <= 1.
Interval make_interval(double lo, double hi);

// Finite disjoint union of intervals, kept sorted and merged.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  IntervalUnion(std::initializer_list<Interval> pieces);
  explicit IntervalUnion(std::vector<Interval> pieces);

  const std::vector<Interval>& pieces() const { return pieces_; }
  double measure() const;
  bool contains(double x) const;
  bool empty() const { return pieces_.empty(); }

 private:
  std::vector<Interval> pieces_;
};

// Throws DomainError unless x lies in [0, 1).
void check_unit_coordinate(double x);

template <class T>
class BasicIntervalPartition {
 public:
  // Trivial partition {[0,1)}.
  BasicIntervalPartition() : bounds_{T(0), T(1)} {}

  explicit BasicIntervalPartition(std::vector<T> bounds) : bounds_(std::move(bounds)) {
    if (bounds_.size() < 2) throw ValidationError("partition needs at least two bounds");
    if (bounds_.front() != T(0) || bounds_.back() != T(1))
      throw ValidationError("partition bounds must start at 0 and end at 1");
    for (std::size_t i = 1; i < bounds_.size(); ++i)
      if (!(bounds_[i - 1] < bounds_[i]))
        throw ValidationError("partition bounds must be strictly increasing");
  }

  static BasicIntervalPartition uniform(std::size_t parts) {
    if (parts == 0) throw ValidationError("partition needs at least one part");
    std::vector<T> b(parts + 1);
    for (std::size_t i = 0; i <= parts; ++i)
      b[i] = T(static_cast<long>(i)) / T(static_cast<long>(parts));
    b.back() = T(1);
    return BasicIntervalPartition(std::move(b));
  }

  // 2^depth equal dyadic parts I^depth(0), ..., I^depth(2^depth - 1).
  static BasicIntervalPartition dyadic(unsigned depth) {
    return uniform(std::size_t{1} << depth);
  }

  std::size_t size() const { return bounds_.size() - 1; }
  const std::vector<T>& bounds() const { return bounds_; }
  const T& lo(std::size_t i) const { return bounds_[i]; }
  const T& hi(std::size_t i) const { return bounds_[i + 1]; }
  T measure(std::size_t i) const { return bounds_[i + 1] - bounds_[i]; }

  // Index of the part containing x; the left edge belongs to the part.
  std::size_t locate(double x) const {
    check_unit_coordinate(x);
    auto it = std::upper_bound(bounds_.begin(), bounds_.end(), x,
                               [](double v, const T& b) { return less(v, b); });
    return static_cast<std::size_t>(it - bounds_.begin()) - 1;
  }

  // True iff every bound of `coarser` is also a bound of this partition.
  bool refines(const BasicIntervalPartition& coarser) const {
    return std::includes(bounds_.begin(), bounds_.end(), coarser.bounds_.begin(),
                         coarser.bounds_.end());
  }

  friend bool operator==(const BasicIntervalPartition& a,
                         const BasicIntervalPartition& b) {
    return a.bounds_ == b.bounds_;
  }

 private:
  static bool less(double v, const T& b) {
    if constexpr (std::is_same_v<T, double>) {
      return v < b;
    } else {
      return exact_from_double(v) < b;
    }
  }

  std::vector<T> bounds_;
};

template <class T>
BasicIntervalPartition<T> common_refinement(const BasicIntervalPartition<T>& a,
                                            const BasicIntervalPartition<T>& b) {
  std::vector<T> merged;
  merged.reserve(a.bounds().size() + b.bounds().size());
  std::set_union(a.bounds().begin(), a.bounds().end(), b.bounds().begin(),
                 b.bounds().end(), std::back_inserter(merged));
  return BasicIntervalPartition<T>(std::move(merged));
}

// For each part of `fine`, the index of the part of `coarse` containing it.
// Requires fine.refines(coarse).
template <class T>
std::vector<std::size_t> parent_map(const BasicIntervalPartition<T>& fine,
                                    const BasicIntervalPartition<T>& coarse) {
  if (!fine.refines(coarse)) throw ValidationError("partition does not refine its base");
  std::vector<std::size_t> parent(fine.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    while (!(fine.lo(i) < coarse.hi(j))) ++j;
    parent[i] = j;
  }
  return parent;
}

using IntervalPartition = BasicIntervalPartition<double>;
using ExactIntervalPartition = BasicIntervalPartition<Rational>;

}  // namespace graphon
