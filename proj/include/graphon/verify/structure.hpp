#pragma once

#include <cstddef>
#include <vector>

#include "graphon/universal/universal_graphon.hpp"
#include "graphon/verify/report.hpp"

namespace graphon {

struct StructureOptions {
  std::size_t samples_per_part = 8;
  double degree_tolerance = 0.02;
};

// Expected degree of every vertex of part X (A..G, P, R): (90 + k)/252 with
// k the position of X, and 77/252 for R.
double expected_degree(Part p);

// Part sizes, sampled degrees, Q's degree and the 5/13 balancing identity.
// Degrees are integrated with the midpoint rule at n samples per unit length.
std::vector<CheckReport> verify_structure(const UniversalGraphon& w0, std::size_t n,
                                          const StructureOptions& options = {});

// Mass of the A x A tile divided by |A|^2 on an n x n grid aligned with A.
// Grid-aligned dyadic intervals are integrated exactly; only the last two
// grid cells of each side can be misclassified.
CheckReport verify_checker_mass(const UniversalGraphon& w0, std::size_t n);

}  // namespace graphon
