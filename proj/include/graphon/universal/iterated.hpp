#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graphon/graphon.hpp"
#include "graphon/interval.hpp"
#include "graphon/rational.hpp"

namespace graphon {

// I_{j_0..j_k}: start from [0, 1) and repeatedly take, inside the current
// interval J, [sup J - 2^{-j}|J|, sup J - 2^{-j-1}|J|). Bounds are dyadic and
// exact in double while the index sum stays below ~50.
Interval iterated_interval(const std::vector<unsigned>& indices);

struct ExactInterval {
  Rational lo;
  Rational hi;
};
ExactInterval iterated_interval_exact(const std::vector<unsigned>& indices);

// Up to 4 indices j_0..j_k plus the position of x inside I_{j_0..j_k}
// rescaled to [0, 1).
struct Located {
  std::array<unsigned, 4> j{};
  unsigned count = 0;
  double lo = 0.0;
  double length = 1.0;
  double rel = 0.0;

  std::vector<unsigned> indices() const { return {j.begin(), j.begin() + count}; }
};

// Indices of the k-iterated interval (k + 1 indices, k <= 3) containing x
// with every index at most `cap`. Returns nullopt when x lies in a truncated
// residue, i.e. some index would exceed the cap.
std::optional<Located> locate(double x, unsigned k, unsigned cap);

// Index of the interval I_j containing x, j <= cap.
std::optional<Located> locate0(double x, unsigned cap);

// Sum of |I|^2 over the k-iterated intervals with all indices <= cap, i.e.
// the mass of the truncated k-iterated checker graphon.
double checker_mass(unsigned k, unsigned cap);

// The k-iterated checker graphon with every index capped. Integrals are exact.
class CheckerGraphon final : public Graphon {
 public:
  CheckerGraphon(unsigned level, unsigned cap);

  double value(double x, double y) const override;
  double row_integral(double x, double y0, double y1, std::size_t) const override;
  double rect_integral(double x0, double x1, double y0, double y1,
                       std::size_t) const override;
  double midpoint_error_bound(std::size_t n) const override;
  // Mass missing relative to the uncapped checker, (1/3)^{level+1} - kept.
  double truncation_error_bound() const override;
  std::string name() const override;

  unsigned level() const { return level_; }
  unsigned cap() const { return cap_; }
  const std::vector<Interval>& intervals() const { return intervals_; }

 private:
  unsigned level_;
  unsigned cap_;
  std::vector<Interval> intervals_;
};

// The same graphon as an explicit step graphon: one cell per kept interval
// plus the residue gaps (value 0). Refuses more than 4096 cells.
StepGraphon checker_step(unsigned level, unsigned cap);

}  // namespace graphon
