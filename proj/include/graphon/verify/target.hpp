#pragma once

#include <cstddef>
#include <vector>

#include "graphon/graphon.hpp"
#include "graphon/universal/universal_graphon.hpp"
#include "graphon/verify/report.hpp"

namespace graphon {

// The G x G tile of W_0 as a graphon on [0,1)^2, read through W_0's global
// coordinates.
class GTileView final : public Graphon {
 public:
  explicit GTileView(const UniversalGraphon& w0) : w0_(w0) {}
  double value(double x, double y) const override;
  double midpoint_error_bound(std::size_t n) const override { return w0_.wf().midpoint_error_bound(n); }
  std::string name() const override { return "GxG(" + w0_.name() + ")"; }

 private:
  const UniversalGraphon& w0_;
};

// delta(d, s, t) decoded from the digit bits carried by W_0's D x E tile.
// Digits above the depth or beyond the bit budget count as 0.
double decode_from_tiles(const UniversalGraphon& w0, const DyadicIndex& idx);
Rational decode_from_tiles_exact(const UniversalGraphon& w0, const DyadicIndex& idx);
// Largest p whose digit is read by decode_from_tiles, plus one.
std::uint64_t tile_digits(const UniversalGraphon& w0, const DyadicIndex& idx);

// For every dyadic square of depth <= d_max: the G x G dyadic density and the
// decoded bits reproduce delta(d, s, t) of W_F; and the Gamma_4 densities of
// the depth-d_max averages agree. Integrals use n samples per unit length.
std::vector<CheckReport> verify_target(const UniversalGraphon& w0, unsigned d_max, std::size_t n);

// Exact-rational variant for builds from a dyadic step graphon: decoded
// densities and G x G dyadic densities must equal delta(d, s, t) exactly.
std::vector<CheckReport> verify_target_exact(const UniversalGraphon& w0, unsigned d_max);

}  // namespace graphon
