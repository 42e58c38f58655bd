#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphon/rational.hpp"

namespace graphon {

enum class Part : unsigned { A, B, C, D, E, F, G, P, Q, R };

constexpr std::size_t kPartCount = 10;
constexpr std::array<Part, kPartCount> kAllParts{Part::A, Part::B, Part::C, Part::D, Part::E,
                                                 Part::F, Part::G, Part::P, Part::Q, Part::R};
// Parts whose rows feed the balancing function (A..G and P).
constexpr std::array<Part, 8> kBalancedParts{Part::A, Part::B, Part::C, Part::D,
                                             Part::E, Part::F, Part::G, Part::P};

inline unsigned index_of(Part p) { return static_cast<unsigned>(p); }
std::string_view part_name(Part p);
std::optional<Part> parse_part(std::string_view name);

// Position of the part in A, ..., G, P, Q, R; the R tiles take value k/18.
inline unsigned part_weight(Part p) { return index_of(p); }

// Part sizes (1/14, Q = 5/14) laid out contiguously in a chosen order.
class PartLayout {
 public:
  // A, B, ..., R left to right.
  PartLayout();
  // Any permutation of the ten parts.
  explicit PartLayout(const std::vector<Part>& order);

  const std::vector<Part>& order() const { return order_; }
  static Rational exact_size(Part p);
  double size(Part p) const { return size_[index_of(p)]; }
  double offset(Part p) const { return offset_[index_of(p)]; }
  const Rational& exact_offset(Part p) const { return exact_offset_[index_of(p)]; }

  // Part containing the global coordinate x in [0, 1).
  Part part_at(double x) const;
  // eta_X(u) = |X| u + c_X and its inverse.
  double to_global(Part p, double u) const;
  double to_local(Part p, double x) const;

 private:
  std::vector<Part> order_;
  std::array<double, kPartCount> size_{};
  std::array<double, kPartCount> offset_{};
  std::array<Rational, kPartCount> exact_offset_{};
};

}  // namespace graphon
