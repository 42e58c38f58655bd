#include "graphon/universal/pairing.hpp"

#include "graphon/errors.hpp"

namespace graphon {

std::uint64_t choose4(std::uint64_t n) {
  if (n < 4) return 0;
  // n(n-1)(n-2)(n-3) is divisible by 24; divide in steps to stay exact.
  std::uint64_t v = n * (n - 1) / 2;
  v = v * (n - 2) / 3;
  return v * (n - 3) / 4;
}

namespace {

// Number of k-tuples of non-negative integers with sum s.
std::uint64_t compositions(std::uint64_t s, unsigned k) {
  switch (k) {
    case 1:
      return 1;
    case 2:
      return s + 1;
    case 3:
      return (s + 2) * (s + 1) / 2;
  }
  throw ValidationError("unsupported tuple width");
}

}  // namespace

std::uint64_t phi(const Tuple4& t) {
  const std::uint64_t s = t.sum();
  if (s > 20000) throw ResourceError("tuple sum too large for the pairing map");
  std::uint64_t rank = 0;
  // Tuples (a', ...) with a' < a come first, then (a, b', ...) with b' < b, ...
  for (std::uint64_t x = 0; x < t.a; ++x) rank += compositions(s - x, 3);
  for (std::uint64_t x = 0; x < t.b; ++x) rank += compositions(s - t.a - x, 2);
  rank += t.c;
  return choose4(s + 3) + rank;
}

Tuple4 phi_inv(std::uint64_t n) {
  std::uint64_t s = 0;
  while (choose4(s + 4) <= n) ++s;
  std::uint64_t rank = n - choose4(s + 3);
  Tuple4 t;
  while (rank >= compositions(s - t.a, 3)) rank -= compositions(s - t.a++, 3);
  const std::uint64_t rest = s - t.a;
  while (rank >= compositions(rest - t.b, 2)) rank -= compositions(rest - t.b++, 2);
  t.c = rank;
  t.d = rest - t.b - t.c;
  return t;
}

}  // namespace graphon
