#pragma once

#include <cstdint>

namespace graphon {

struct Tuple4 {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;

  std::uint64_t sum() const { return a + b + c + d; }
  friend bool operator==(const Tuple4&, const Tuple4&) = default;
};

// C(n, 4), exact for every n used here (n below ~10^4).
std::uint64_t choose4(std::uint64_t n);

// Bijection N_0^4 -> N_0. Tuples with entry sum s occupy the index range
// [C(s+3, 4), C(s+4, 4) - 1], ordered lexicographically.
std::uint64_t phi(const Tuple4& t);
Tuple4 phi_inv(std::uint64_t n);

}  // namespace graphon
