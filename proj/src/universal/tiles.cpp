#include "graphon/universal/tiles.hpp"

#include <algorithm>
#include <cmath>

#include "graphon/errors.hpp"
#include "graphon/universal/iterated.hpp"
#include "graphon/universal/pairing.hpp"

namespace graphon {

namespace {

bool in_checker_rows(Part p) { return index_of(p) <= index_of(Part::G); }

// Iterated checker level of the tile, or -1.
int checker_level(Part x, Part y) {
  if (x == Part::A && in_checker_rows(y)) return 0;
  if (x == Part::B && y >= Part::B && y <= Part::E) return 1;
  if (x == Part::C && y >= Part::C && y <= Part::E) return 2;
  if (x == Part::D && y == Part::D) return 3;
  return -1;
}

bool same_indices(const Located& a, const Located& b) {
  return std::equal(a.j.begin(), a.j.begin() + a.count, b.j.begin());
}

std::uint64_t pow2u(unsigned k) { return std::uint64_t{1} << k; }

// floor(rel * 2^bits), guarding the top cell.
std::uint64_t sub_block(double rel, unsigned bits) {
  const double cells = std::ldexp(1.0, static_cast<int>(bits));
  return std::min(static_cast<std::uint64_t>(std::floor(rel * cells)),
                  static_cast<std::uint64_t>(cells) - 1);
}

double p2(int e) { return std::ldexp(1.0, e); }

double tail(unsigned from, int slope) {
  double s = 0.0;
  for (unsigned k = from; k < 80; ++k) s += p2(-slope * static_cast<int>(k) - 1);
  return s;
}

}  // namespace

TileModel::TileModel(GraphonPtr wf, BitStream bits, unsigned depth, unsigned linear_cap,
                     std::size_t resolution)
    : wf_(std::move(wf)),
      bits_(std::move(bits)),
      depth_(depth),
      linear_cap_(linear_cap),
      resolution_(resolution) {
  if (!wf_) throw ValidationError("missing W_F");
  if (depth_ > 20) throw ResourceError("truncation depth above 20 is not supported");
  if (linear_cap_ > 60) throw ResourceError("linear cap above 60 is not supported");
}

double TileModel::checker(unsigned level, double u, double v) const {
  const auto a = locate(u, level, depth_);
  if (!a) return 0.0;
  const auto b = locate(v, level, depth_);
  return b && same_indices(*a, *b) ? 1.0 : 0.0;
}

double TileModel::checker_row(unsigned level, double u) const {
  const auto a = locate(u, level, depth_);
  return a ? a->length : 0.0;
}

double TileModel::value(Part x, Part y, double u, double v) const {
  if (index_of(x) > index_of(y)) return ordered_value(y, x, v, u);
  return ordered_value(x, y, u, v);
}

double TileModel::ordered_value(Part x, Part y, double u, double v) const {
  if (y == Part::R) return part_weight(x) / 18.0;
  if (y == Part::Q) return x == Part::Q ? 1.0 : xi(x, u);
  if (y == Part::P) {
    if (x <= Part::D) return u >= v ? 1.0 : 0.0;
    return u + v >= 1.0 ? 1.0 : 0.0;
  }
  if (const int level = checker_level(x, y); level >= 0)
    return checker(static_cast<unsigned>(level), u, v);

  const unsigned D = depth_;
  switch (x) {
    case Part::B:
      if (y == Part::F) {
        const auto k = locate0(v, linear_cap_);
        return k ? bits_.bit(k->j[0] + 1) : 0.0;
      }
      return 0.0;  // B x G
    case Part::C:
      if (y == Part::F) {
        const auto a = locate(u, 2, D);
        const auto b = locate0(v, D);
        if (!a || !b || a->j[0] != b->j[0]) return 0.0;
        const unsigned d = a->j[0];
        const std::uint64_t s = a->j[1], t = a->j[2];
        if (s >= pow2u(d) || t >= pow2u(d)) return 0.0;
        return sub_block(b->rel, 2 * d) == (s << d) + t ? 1.0 : 0.0;
      }
      return 0.0;  // C x G
    case Part::D:
      if (y == Part::E) {
        const auto a = locate(u, 3, D);
        const auto b = locate(v, 2, D);
        if (!a || !b || !std::equal(b->j.begin(), b->j.begin() + 3, a->j.begin())) return 0.0;
        return bits_.bit(phi({a->j[0], a->j[1], a->j[2], a->j[3]}) + 1);
      }
      if (y == Part::F) {
        const auto a = locate(u, 3, D);
        const auto b = locate0(v, linear_cap_);
        if (!a || !b) return 0.0;
        return phi({a->j[0], a->j[1], a->j[2], a->j[3]}) == b->j[0] ? 1.0 : 0.0;
      }
      return 0.0;  // D x G
    case Part::E:
    case Part::F: {
      const auto a = locate0(u, D);
      if (!a) return 0.0;
      const unsigned k = a->j[0];
      if (y == Part::G) {
        const std::uint64_t target = sub_block(v, k);
        if (x == Part::E) return sub_block(a->rel, k) == target ? 1.0 : 0.0;
        return (sub_block(a->rel, 2 * k) & (pow2u(k) - 1)) == target ? 1.0 : 0.0;
      }
      // E x E, E x F (same pattern as E x E) and F x F.
      const auto b = locate0(v, D);
      if (!b || b->j[0] != k) return 0.0;
      const unsigned split = (x == Part::F && y == Part::F) ? 2 * k : k;
      return sub_block(a->rel, split) == sub_block(b->rel, split) ? 1.0 : 0.0;
    }
    case Part::G:
      return wf_->value(u, v);
    default:
      break;
  }
  throw DomainError("no tile for this pair of parts");
}

double TileModel::row_mass(Part x, Part y, double u) const {
  if (x == Part::Q || x == Part::R || y == Part::Q || y == Part::R)
    throw DomainError("row masses are defined on parts A..G and P only");
  const unsigned D = depth_;
  if (y == Part::P) return u;
  if (x == Part::P) return y <= Part::D ? 1.0 - u : u;
  const Part lo = std::min(x, y);
  const Part hi = std::max(x, y);
  if (const int level = checker_level(lo, hi); level >= 0)
    return checker_row(static_cast<unsigned>(level), u);
  const bool row_low = x == lo;

  if (lo == Part::B && hi == Part::F) {
    if (row_low) {
      double s = 0.0;
      for (unsigned k = 0; k <= linear_cap_; ++k) s += p2(-static_cast<int>(k) - 1) * bits_.bit(k + 1);
      return s;
    }
    const auto k = locate0(u, linear_cap_);
    return k ? bits_.bit(k->j[0] + 1) : 0.0;
  }
  if (lo == Part::C && hi == Part::F) {
    if (row_low) {
      const auto a = locate(u, 2, D);
      if (!a) return 0.0;
      const unsigned d = a->j[0];
      if (a->j[1] >= pow2u(d) || a->j[2] >= pow2u(d)) return 0.0;
      return p2(-3 * static_cast<int>(d) - 1);
    }
    const auto a = locate0(u, D);
    if (!a) return 0.0;
    const unsigned d = a->j[0];
    const std::uint64_t h = sub_block(a->rel, 2 * d);
    const std::uint64_t s = h >> d, t = h & (pow2u(d) - 1);
    if (s > D || t > D) return 0.0;
    return p2(-static_cast<int>(d + s + t) - 3);
  }
  if (lo == Part::D && hi == Part::E) {
    if (row_low) {
      const auto a = locate(u, 3, D);
      if (!a) return 0.0;
      const std::uint64_t bit = bits_.bit(phi({a->j[0], a->j[1], a->j[2], a->j[3]}) + 1);
      return bit * p2(-static_cast<int>(a->j[0] + a->j[1] + a->j[2]) - 3);
    }
    const auto a = locate(u, 2, D);
    if (!a) return 0.0;
    double s = 0.0;
    for (unsigned p = 0; p <= D; ++p)
      s += p2(-static_cast<int>(a->j[0] + a->j[1] + a->j[2] + p) - 4) *
           bits_.bit(phi({a->j[0], a->j[1], a->j[2], p}) + 1);
    return s;
  }
  if (lo == Part::D && hi == Part::F) {
    if (row_low) {
      const auto a = locate(u, 3, D);
      if (!a) return 0.0;
      const std::uint64_t n = phi({a->j[0], a->j[1], a->j[2], a->j[3]});
      return n <= linear_cap_ ? p2(-static_cast<int>(n) - 1) : 0.0;
    }
    const auto a = locate0(u, linear_cap_);
    if (!a) return 0.0;
    const Tuple4 t = phi_inv(a->j[0]);
    if (t.a > D || t.b > D || t.c > D || t.d > D) return 0.0;
    return p2(-static_cast<int>(t.sum()) - 4);
  }
  if ((lo == Part::E || lo == Part::F) && (hi == Part::E || hi == Part::F)) {
    const auto a = locate0(u, D);
    if (!a) return 0.0;
    const int k = static_cast<int>(a->j[0]);
    return lo == Part::F ? p2(-3 * k - 1) : p2(-2 * k - 1);
  }
  if ((lo == Part::E || lo == Part::F) && hi == Part::G) {
    if (row_low) return locate0(u, D) ? p2(-static_cast<int>(locate0(u, D)->j[0])) : 0.0;
    double s = 0.0;
    for (unsigned k = 0; k <= D; ++k) s += p2(-2 * static_cast<int>(k) - 1);
    return s;
  }
  if (lo == Part::G && hi == Part::G) return wf_->row_integral(u, 0.0, 1.0, resolution_);
  return 0.0;  // zero tiles
}

double TileModel::xi(Part x, double u) const {
  if (x == Part::Q || x == Part::R) throw DomainError("xi is defined on parts A..G and P only");
  double s = 0.0;
  for (Part y : kBalancedParts) s += row_mass(x, y, u);
  return std::clamp(1.0 - s / 5.0, 0.0, 1.0);
}

double TileModel::deviation(Part x, Part y) const {
  const Part lo = std::min(x, y);
  const Part hi = std::max(x, y);
  if (lo > Part::G || hi > Part::P) return 0.0;
  if (hi == Part::P) return 0.0;
  const unsigned D = depth_;
  const unsigned L = linear_cap_;
  if (const int level = checker_level(lo, hi); level >= 0)
    return std::max(0.0, std::pow(1.0 / 3.0, level + 1) - checker_mass(level, D));
  if (lo == Part::B && hi == Part::F) return p2(-static_cast<int>(L) - 1);
  if (lo == Part::D && hi == Part::F) {
    double s = p2(-static_cast<int>(L) - 1) / 16.0;
    for (std::uint64_t n = 0; n <= L; ++n) {
      const Tuple4 t = phi_inv(n);
      if (t.a > D || t.b > D || t.c > D || t.d > D)
        s += p2(-static_cast<int>(n) - 1) * p2(-static_cast<int>(t.sum()) - 4);
    }
    return s;
  }
  if (lo == Part::D && hi == Part::E) {
    double kept = 0.0;
    for (unsigned d = 0; d <= D; ++d)
      for (unsigned s = 0; s <= D; ++s)
        for (unsigned t = 0; t <= D; ++t)
          for (unsigned p = 0; p <= D; ++p) {
            if (phi({d, s, t, p}) + 1 > bits_.size()) continue;
            const int sum = static_cast<int>(d + s + t);
            kept += p2(-sum - static_cast<int>(p) - 4) * p2(-sum - 3);
          }
    return std::max(0.0, 1.0 / 27.0 - kept);
  }
  if (lo == Part::C && hi == Part::F) {
    double ideal = 0.0;
    double kept = 0.0;
    for (unsigned d = 0; d < 64; ++d) {
      const double full = 2.0 - (d < 10 ? p2(1 - static_cast<int>(pow2u(d))) : 0.0);
      ideal += p2(-4 * static_cast<int>(d) - 4) * full * full;
      if (d > D) continue;
      double part = 0.0;
      const std::uint64_t top = std::min<std::uint64_t>(D, pow2u(d) - 1);
      for (std::uint64_t s = 0; s <= top; ++s) part += p2(-static_cast<int>(s));
      kept += p2(-4 * static_cast<int>(d) - 4) * part * part;
    }
    return std::max(0.0, ideal - kept);
  }
  if ((lo == Part::E || lo == Part::F) && (hi == Part::E || hi == Part::F))
    return lo == Part::F ? tail(D + 1, 3) : tail(D + 1, 2);
  if ((lo == Part::E || lo == Part::F) && hi == Part::G) return tail(D + 1, 2);
  if (lo == Part::G && hi == Part::G) return wf_->truncation_error_bound();
  return 0.0;
}

}  // namespace graphon
