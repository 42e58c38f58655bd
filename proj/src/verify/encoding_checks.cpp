#include "graphon/verify/encoding_checks.hpp"

#include <cmath>
#include <map>
#include <string>

#include "graphon/universal/iterated.hpp"
#include "graphon/universal/pairing.hpp"

namespace graphon {

namespace {

double mid(const Interval& i) { return 0.5 * (i.lo + i.hi); }

std::string tuple_tag(const Tuple4& t) {
  return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + "," +
         std::to_string(t.d) + ")";
}

std::vector<Tuple4> tuples_up_to(unsigned max_sum) {
  std::vector<Tuple4> out;
  for (std::uint64_t n = 0;; ++n) {
    const Tuple4 t = phi_inv(n);
    if (t.sum() > max_sum) break;
    out.push_back(t);
  }
  return out;
}

bool within(const Tuple4& t, unsigned cap) {
  return t.a <= cap && t.b <= cap && t.c <= cap && t.d <= cap;
}

unsigned u(std::uint64_t v) { return static_cast<unsigned>(v); }

}  // namespace

std::optional<unsigned> read_de_bit(const UniversalGraphon& w0, const Tuple4& t) {
  if (!within(t, w0.depth())) return std::nullopt;
  const double x = w0.at(Part::D, mid(iterated_interval({u(t.a), u(t.b), u(t.c), u(t.d)})));
  const double y = w0.at(Part::E, mid(iterated_interval({u(t.a), u(t.b), u(t.c)})));
  return static_cast<unsigned>(w0.value(x, y));
}

unsigned expected_bit(const UniversalGraphon& w0, std::uint64_t position) {
  const Tuple4 t = phi_inv(position - 1);
  const DyadicIndex idx{u(t.a), t.b, t.c};
  // The one graphon is encoded as all ones, invalid squares included.
  if (dyadic_delta(w0.wf(), DyadicIndex{0, 0, 0}, w0.resolution()) == 1.0) return 1;
  if (!idx.valid()) return 0;
  return binary_digit(dyadic_delta(w0.wf(), idx, w0.resolution()), t.d);
}

std::optional<std::uint64_t> cf_strip(const UniversalGraphon& w0, unsigned d, unsigned s,
                                      unsigned t) {
  const double x = w0.at(Part::C, mid(iterated_interval({d, s, t})));
  const Interval id = iterated_interval({d});
  const std::uint64_t strips = std::uint64_t{1} << (2 * d);
  std::optional<std::uint64_t> found;
  for (std::uint64_t h = 0; h < strips; ++h) {
    const double v = id.lo + id.length() * (static_cast<double>(h) + 0.5) / static_cast<double>(strips);
    if (w0.value(x, w0.at(Part::F, v)) == 1.0) {
      if (found) return std::nullopt;  // more than one strip set
      found = h;
    }
  }
  return found;
}

double measured_tau(const UniversalGraphon& w0, const Tuple4& t) {
  const double x = w0.at(Part::D, mid(iterated_interval({u(t.a), u(t.b), u(t.c), u(t.d)})));
  double sum = 0.0;
  for (unsigned k = 0; k <= w0.linear_cap(); ++k) {
    const Interval ik = iterated_interval({k});
    sum += ik.length() * w0.value(x, w0.at(Part::F, mid(ik)));
  }
  return sum;
}

std::vector<CheckReport> verify_encoding(const UniversalGraphon& w0, unsigned max_sum) {
  std::vector<CheckReport> out;
  const unsigned D = w0.depth();
  const std::size_t P = w0.budget();

  // (a) B x F: the column over I_{k-1} is constantly r_k.
  {
    double mismatches = 0;
    const std::size_t top = std::min<std::size_t>(P, w0.linear_cap() + 1);
    for (std::size_t k = 1; k <= top; ++k) {
      const unsigned want = expected_bit(w0, k);
      const double y = w0.at(Part::F, mid(iterated_interval({u(k - 1)})));
      for (double bu : {0.1, 0.5, 0.9})
        if (w0.value(w0.at(Part::B, bu), y) != want) ++mismatches;
    }
    out.push_back(make_check("encoding.bf.bits", mismatches, 0.0, 0.0, CheckKind::equal,
                             "positions=" + std::to_string(top)));
  }

  const std::vector<Tuple4> tuples = tuples_up_to(max_sum);

  // (b) D x F: tau(a,b,c,d) = 2^{-phi(a,b,c,d)-1}.
  {
    double worst = 0.0;
    for (const Tuple4& t : tuples) {
      if (!within(t, D) || phi(t) > w0.linear_cap()) continue;
      const double err = std::abs(measured_tau(w0, t) - std::ldexp(1.0, -static_cast<int>(phi(t)) - 1));
      worst = std::max(worst, err);
    }
    out.push_back(make_check("encoding.df.tau", worst, 0.0, 1e-12));
    out.push_back(make_check("encoding.df.tau" + tuple_tag({0, 0, 0, 0}),
                             measured_tau(w0, {0, 0, 0, 0}), 0.5, 1e-12));
  }

  // (c) D x E: block I_{d,s,t,p} x I_{d,s,t} carries r_{phi+1}; other E blocks
  // of the same row are 0.
  {
    double mismatches = 0;
    for (const Tuple4& t : tuples) {
      if (!within(t, D) || phi(t) + 1 > P) continue;
      if (*read_de_bit(w0, t) != expected_bit(w0, phi(t) + 1)) ++mismatches;
      const double x = w0.at(Part::D, mid(iterated_interval({u(t.a), u(t.b), u(t.c), u(t.d)})));
      for (const Tuple4& o : tuples) {
        if (o.d != 0 || (o.a == t.a && o.b == t.b && o.c == t.c)) continue;
        const double y = w0.at(Part::E, mid(iterated_interval({u(o.a), u(o.b), u(o.c)})));
        if (w0.value(x, y) != 0.0) ++mismatches;
      }
    }
    out.push_back(make_check("encoding.de.blocks", mismatches, 0.0, 0.0));
  }

  // (d) C x F: the strip of block (d, s, t) is 2^d s + t.
  {
    double mismatches = 0;
    const unsigned top = std::min(D, max_sum);
    for (unsigned d = 0; d <= top; ++d)
      for (unsigned s = 0; s < (1u << d) && s <= D; ++s)
        for (unsigned t = 0; t < (1u << d) && t <= D; ++t) {
          const auto h = cf_strip(w0, d, s, t);
          if (!h || *h != (std::uint64_t{s} << d) + t) ++mismatches;
        }
    out.push_back(make_check("encoding.cf.strips", mismatches, 0.0, 0.0));
    if (D >= 1) {
      const auto h = cf_strip(w0, 1, 1, 0);
      out.push_back(make_check("encoding.cf.strip(1,1,0)", h ? static_cast<double>(*h) : -1.0, 2.0, 0.0));
    }
  }
  return out;
}

}  // namespace graphon
