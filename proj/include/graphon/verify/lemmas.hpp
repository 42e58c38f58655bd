#pragma once

#include <vector>

#include "graphon/graphon.hpp"
#include "graphon/step_graphon.hpp"
#include "graphon/universal/universal_graphon.hpp"
#include "graphon/verify/report.hpp"

namespace graphon {

// F is read as a function on X x Z with both axes carrying F's partition.
// Hypothesis: the inner product of rows x and x' equals a common C for almost
// every pair (x, x'), which includes pairs within one cell. If it holds, the
// check asserts that every row has squared norm C and that all rows agree
// almost everywhere. A failed hypothesis is reported as NA.
CheckReport typ_pairs_check(const StepFunction& f, double tol);

// Positions of the bit stream whose digit both inputs must agree on when
// their dyadic densities agree to k bits: squares with d <= k and digits
// p <= k (and every invalid square).
bool agreed_position(std::uint64_t position, unsigned k);

// Upper bound on the L1 distance of two builds whose inputs agree to k bits
// and are constant on the dyadic squares of depth k.
double semicontinuity_bound(unsigned k, const UniversalOptions& options);

// Builds W_0 for both inputs; if their dyadic densities of depth <= k agree to
// k bits and both are constant on depth-k dyadic squares, reports the L1
// distance of the builds against semicontinuity_bound. Otherwise NA.
CheckReport verify_semicontinuity(const GraphonPtr& a, const GraphonPtr& b, unsigned k,
                                  const UniversalOptions& options);

}  // namespace graphon
