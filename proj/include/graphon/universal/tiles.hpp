#pragma once

#include <cstddef>

#include "graphon/graphon.hpp"
#include "graphon/universal/encoding.hpp"
#include "graphon/universal/layout.hpp"

namespace graphon {

// Values of the universal graphon on each tile X x Y, in part-normalized
// coordinates u (position inside X) and v (position inside Y), both in [0, 1).
//
// Iterated-interval indices and dyadic depths are capped at `depth`; the
// linear index of F used by the B x F and D x F tiles is capped at
// `linear_cap`. Points in a truncated residue evaluate to 0.
class TileModel {
 public:
  TileModel(GraphonPtr wf, BitStream bits, unsigned depth, unsigned linear_cap,
            std::size_t resolution);

  double value(Part x, Part y, double u, double v) const;

  // Integral of the tile X x Y over v for fixed u (normalized by |Y|).
  // Both parts must be among A..G, P.
  double row_mass(Part x, Part y, double u) const;

  // 1 - (1/5) sum_Y row_mass(X, Y, u) over Y in A..G, P, clamped to [0, 1].
  // This makes the relative degree over A..G, P, Q equal to 5/13.
  double xi(Part x, double u) const;

  // Normalized L1 distance between the truncated tile and the uncapped one.
  double deviation(Part x, Part y) const;

  unsigned depth() const { return depth_; }
  unsigned linear_cap() const { return linear_cap_; }
  const BitStream& bits() const { return bits_; }
  const Graphon& wf() const { return *wf_; }
  const GraphonPtr& wf_ptr() const { return wf_; }

 private:
  double ordered_value(Part x, Part y, double u, double v) const;
  double checker(unsigned level, double u, double v) const;
  double checker_row(unsigned level, double u) const;

  GraphonPtr wf_;
  BitStream bits_;
  unsigned depth_;
  unsigned linear_cap_;
  std::size_t resolution_;
};

}  // namespace graphon
