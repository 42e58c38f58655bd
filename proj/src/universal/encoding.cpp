#include "graphon/universal/encoding.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include "graphon/core_ops.hpp"
#include "graphon/errors.hpp"

namespace graphon {

bool DyadicIndex::valid() const {
  if (d >= 63) return true;
  return s < (std::uint64_t{1} << d) && t < (std::uint64_t{1} << d);
}

double dyadic_delta(const Graphon& w, const DyadicIndex& idx, std::size_t resolution) {
  if (!idx.valid()) return 0.0;
  if (idx.d > 40) throw ResourceError("dyadic depth too large for double coordinates");
  const double len = std::ldexp(1.0, -static_cast<int>(idx.d));
  const double x0 = static_cast<double>(idx.s) * len;
  const double y0 = static_cast<double>(idx.t) * len;
  return w.rect_integral(x0, x0 + len, y0, y0 + len, resolution) / (len * len);
}

Rational dyadic_delta(const ExactStepGraphon& w, const DyadicIndex& idx) {
  if (!idx.valid()) return Rational(0);
  const Rational len = pow2<Rational>(-static_cast<int>(idx.d));
  const Rational x0 = Rational(idx.s) * len;
  const Rational y0 = Rational(idx.t) * len;
  return rect_integral<Rational>(w, x0, x0 + len, y0, y0 + len) / (len * len);
}

unsigned BitStream::bit(std::uint64_t k) const {
  if (k == 0) throw ValidationError("bit positions start at 1");
  return k <= bits_.size() ? bits_[k - 1] : 0u;
}

std::string BitStream::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (std::uint8_t b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

BitStream BitStream::parse(const std::string& text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw ValidationError("bit stream may only contain 0 and 1");
    bits.push_back(c == '1');
  }
  return BitStream(std::move(bits));
}

std::uint64_t bit_position(const DyadicIndex& idx, std::uint64_t p) {
  return phi({idx.d, idx.s, idx.t, p}) + 1;
}

unsigned binary_digit(double x, std::uint64_t p) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("binary digits need a value in [0, 1]");
  if (p == 0) return x == 1.0 ? 1u : 0u;
  if (x == 1.0 || p > 1100) return 0u;
  const double scaled = std::floor(std::ldexp(x, static_cast<int>(p)));
  return static_cast<unsigned>(std::fmod(scaled, 2.0));
}

unsigned binary_digit(const Rational& x, std::uint64_t p) {
  if (x < 0 || x > 1) throw DomainError("binary digits need a value in [0, 1]");
  if (p == 0) return x == 1 ? 1u : 0u;
  if (x == 1) return 0u;
  const Rational scaled = x * pow2<Rational>(static_cast<int>(p));
  const boost::multiprecision::cpp_int q = numerator(scaled) / denominator(scaled);
  return static_cast<unsigned>(q & 1);
}

namespace {

template <class Delta>
BitStream encode_with(std::size_t budget, Delta delta) {
  if (budget == 0) throw ValidationError("bit budget must be at least 1");
  std::vector<std::uint8_t> bits(budget, 0);
  for (std::size_t k = 1; k <= budget; ++k) {
    const Tuple4 t = phi_inv(k - 1);
    const DyadicIndex idx{static_cast<unsigned>(t.a), t.b, t.c};
    if (!idx.valid()) continue;
    bits[k - 1] = static_cast<std::uint8_t>(delta(idx, t.d));
  }
  return BitStream(std::move(bits));
}

}  // namespace

BitStream encode_bits(const Graphon& w, std::size_t budget, std::size_t resolution) {
  // Every valid square has density 1 exactly for the one graphon.
  bool one = true;
  std::map<std::tuple<unsigned, std::uint64_t, std::uint64_t>, double> cache;
  const auto delta = [&](const DyadicIndex& idx) {
    auto key = std::make_tuple(idx.d, idx.s, idx.t);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, std::clamp(dyadic_delta(w, idx, resolution), 0.0, 1.0)).first;
    return it->second;
  };
  BitStream bits = encode_with(budget, [&](const DyadicIndex& idx, std::uint64_t p) {
    const double v = delta(idx);
    if (v != 1.0) one = false;
    return binary_digit(v, p);
  });
  if (one && delta(DyadicIndex{0, 0, 0}) == 1.0)
    return BitStream(std::vector<std::uint8_t>(budget, 1));
  return bits;
}

BitStream encode_bits(const ExactStepGraphon& w, std::size_t budget) {
  bool one = true;
  std::map<std::tuple<unsigned, std::uint64_t, std::uint64_t>, Rational> cache;
  const auto delta = [&](const DyadicIndex& idx) {
    auto key = std::make_tuple(idx.d, idx.s, idx.t);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, dyadic_delta(w, idx)).first;
    return it->second;
  };
  BitStream bits = encode_with(budget, [&](const DyadicIndex& idx, std::uint64_t p) {
    const Rational v = delta(idx);
    if (v != 1) one = false;
    return binary_digit(v, p);
  });
  if (one && delta(DyadicIndex{0, 0, 0}) == 1)
    return BitStream(std::vector<std::uint8_t>(budget, 1));
  return bits;
}

std::uint64_t available_digits(const DyadicIndex& idx, std::size_t budget) {
  std::uint64_t p = 0;
  while (bit_position(idx, p) <= budget) ++p;
  return p;
}

double decode_delta(const BitStream& bits, const DyadicIndex& idx) {
  if (!idx.valid()) return 0.0;
  double sum = 0.0;
  const std::uint64_t n = available_digits(idx, bits.size());
  for (std::uint64_t p = 0; p < n; ++p)
    if (bits.bit(bit_position(idx, p))) sum += std::ldexp(1.0, -static_cast<int>(p));
  return std::min(sum, 1.0);
}

Rational decode_delta_exact(const BitStream& bits, const DyadicIndex& idx) {
  if (!idx.valid()) return Rational(0);
  Rational sum = 0;
  const std::uint64_t n = available_digits(idx, bits.size());
  for (std::uint64_t p = 0; p < n; ++p)
    if (bits.bit(bit_position(idx, p))) sum += pow2<Rational>(-static_cast<int>(p));
  return sum > 1 ? Rational(1) : sum;
}

}  // namespace graphon
