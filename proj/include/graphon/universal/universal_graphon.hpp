#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphon/core_ops.hpp"
#include "graphon/graphon.hpp"
#include "graphon/step_graphon.hpp"
#include "graphon/universal/encoding.hpp"
#include "graphon/universal/layout.hpp"
#include "graphon/universal/tiles.hpp"

namespace graphon {

struct UniversalOptions {
  unsigned depth = 8;            // iterated-interval and dyadic cap D
  std::size_t bits = 64;         // bit budget P
  std::size_t resolution = 4096; // quadrature for W_F integrals without closed form
  std::vector<Part> order;       // empty: A, B, ..., R
};

// The universal graphon W_0 assembled around W_F, which sits on the tile G x G.
class UniversalGraphon final : public Graphon {
 public:
  UniversalGraphon(GraphonPtr wf, BitStream bits, const UniversalOptions& options,
                   std::optional<ExactStepGraphon> exact_wf = std::nullopt);

  double value(double x, double y) const override;
  // Sum of the per-tile deviations from the uncapped construction,
  // including the effect on the balancing function xi.
  double truncation_error_bound() const override { return truncation_; }
  std::string name() const override;

  double tile_value(Part x, Part y, double u, double v) const { return tiles_.value(x, y, u, v); }
  double row_mass(Part x, Part y, double u) const { return tiles_.row_mass(x, y, u); }
  double xi(Part x, double u) const { return tiles_.xi(x, u); }

  const PartLayout& layout() const { return layout_; }
  const TileModel& tiles() const { return tiles_; }
  const BitStream& bits() const { return tiles_.bits(); }
  unsigned depth() const { return options_.depth; }
  std::size_t budget() const { return options_.bits; }
  unsigned linear_cap() const { return tiles_.linear_cap(); }
  std::size_t resolution() const { return options_.resolution; }
  const UniversalOptions& options() const { return options_; }
  const Graphon& wf() const { return tiles_.wf(); }
  const GraphonPtr& wf_ptr() const { return tiles_.wf_ptr(); }
  const ExactStepGraphon* exact_wf() const { return exact_wf_ ? &*exact_wf_ : nullptr; }

  // Global coordinate of normalized position u inside part p.
  double at(Part p, double u) const { return layout_.to_global(p, u); }

 private:
  UniversalOptions options_;
  PartLayout layout_;
  TileModel tiles_;
  std::optional<ExactStepGraphon> exact_wf_;
  double truncation_;
};

// Linear index cap of F: min(P - 1, 40). Deeper intervals I_k are too short
// to address through global double coordinates.
unsigned linear_cap_for(std::size_t bits);

// Throws ResourceError when D or P exceed what the builder supports.
void check_universal_budget(const UniversalOptions& options);

UniversalGraphon build_universal(GraphonPtr wf, const UniversalOptions& options = {});
// Exact-rational encoding; W_F must be representable in double for evaluation.
UniversalGraphon build_universal(const ExactStepGraphon& wf, const UniversalOptions& options = {});

// L1 distance between two builds with the same options. Only the tiles that
// depend on W_F can differ (G x G, B x F, D x E and the xi tiles); each is
// integrated exactly, except G x G and its row integrals when W_F has no step
// representation (midpoint rule at the build resolution).
double universal_l1_distance(const UniversalGraphon& a, const UniversalGraphon& b);

}  // namespace graphon
