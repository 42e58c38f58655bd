#pragma once

#include <optional>
#include <vector>

#include "graphon/universal/universal_graphon.hpp"
#include "graphon/verify/report.hpp"

namespace graphon {

// Bit r_{phi(d,s,t,p)+1} as carried by the D x E tile of the built graphon,
// or nullopt when the block is truncated (some index above the depth).
std::optional<unsigned> read_de_bit(const UniversalGraphon& w0, const Tuple4& dstp);

// Digit p of delta(d, s, t) computed directly from W_F.
unsigned expected_bit(const UniversalGraphon& w0, std::uint64_t position);

// (a) B x F columns carry r_k, (b) D x F gives tau(a,b,c,d) = 2^{-phi-1},
// (c) D x E blocks carry the digit bits and vanish off-block, (d) C x F
// strips sit at position 2^d s + t. Tuples are enumerated up to entry sum
// `max_sum`.
std::vector<CheckReport> verify_encoding(const UniversalGraphon& w0, unsigned max_sum = 3);

// F-strip index h (in [0, 4^d)) of the C x F tile at C-block (d, s, t), or
// nullopt if no strip is set.
std::optional<std::uint64_t> cf_strip(const UniversalGraphon& w0, unsigned d, unsigned s,
                                      unsigned t);

// tau(a, b, c, d): F-row integral of the D x F tile from block I_{a,b,c,d}.
double measured_tau(const UniversalGraphon& w0, const Tuple4& t);

}  // namespace graphon
