#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "graphon/graphon.hpp"
#include "graphon/rational.hpp"
#include "graphon/step_graphon.hpp"
#include "graphon/universal/pairing.hpp"

namespace graphon {

// Dyadic square I^d(s) x I^d(t); squares with s or t >= 2^d are invalid and
// have density 0.
struct DyadicIndex {
  unsigned d = 0;
  std::uint64_t s = 0;
  std::uint64_t t = 0;

  bool valid() const;
  friend bool operator==(const DyadicIndex&, const DyadicIndex&) = default;
};

// 2^{2d} times the integral of W over the square, via W.rect_integral.
double dyadic_delta(const Graphon& w, const DyadicIndex& idx, std::size_t resolution);
Rational dyadic_delta(const ExactStepGraphon& w, const DyadicIndex& idx);

// Bits r_1..r_P; positions beyond the budget read as 0.
class BitStream {
 public:
  BitStream() = default;
  explicit BitStream(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  std::size_t size() const { return bits_.size(); }
  // 1-based position k.
  unsigned bit(std::uint64_t k) const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::string to_string() const;
  static BitStream parse(const std::string& text);

  friend bool operator==(const BitStream&, const BitStream&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Position of digit p of delta(d, s, t): phi(d, s, t, p) + 1.
std::uint64_t bit_position(const DyadicIndex& idx, std::uint64_t p);

// Digit p of x in [0, 1] in the terminating binary expansion: p = 0 is the
// units digit, so only x = 1 has digit 0 set.
unsigned binary_digit(double x, std::uint64_t p);
unsigned binary_digit(const Rational& x, std::uint64_t p);

// r_k for k = 1..P. The one graphon (every delta equal to 1) is encoded as
// all ones.
BitStream encode_bits(const Graphon& w, std::size_t budget, std::size_t resolution);
BitStream encode_bits(const ExactStepGraphon& w, std::size_t budget);

// Number of digits p of delta(d, s, t) whose position lies within the budget;
// they are always p = 0, 1, ..., count - 1.
std::uint64_t available_digits(const DyadicIndex& idx, std::size_t budget);

// sum_p 2^{-p} r_{phi(d,s,t,p)+1} over the available digits, clamped to 1 so
// that the all-ones stream decodes to 1. The error is below 2^{1-count}.
double decode_delta(const BitStream& bits, const DyadicIndex& idx);
Rational decode_delta_exact(const BitStream& bits, const DyadicIndex& idx);

}  // namespace graphon
