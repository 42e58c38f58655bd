#include "graphon/cutnorm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>

#include "graphon/errors.hpp"

namespace graphon {

CellSet cells_of(const IntervalPartition& partition, const IntervalUnion& set) {
  CellSet cells;
  for (const Interval& piece : set.pieces()) {
    const auto& b = partition.bounds();
    const auto lo = std::lower_bound(b.begin(), b.end(), piece.lo);
    const auto hi = std::lower_bound(b.begin(), b.end(), piece.hi);
    if (lo == b.end() || *lo != piece.lo || hi == b.end() || *hi != piece.hi)
      throw ValidationError("set is not a union of partition cells");
    for (auto it = lo; it != hi; ++it) cells.push_back(static_cast<std::size_t>(it - b.begin()));
  }
  return cells;
}

double block_density(const StepFunction& w, const IntervalUnion& a, const IntervalUnion& b) {
  return block_density(w, cells_of(w.partition(), a), cells_of(w.partition(), b));
}

namespace {

// Groups indices 0..k-1 by identical value vectors get(i, 0..k-1).
template <class Get>
std::vector<std::vector<std::size_t>> profile_classes(std::size_t k, Get get) {
  std::map<std::vector<double>, std::size_t> index;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> profile(k);
    for (std::size_t j = 0; j < k; ++j) profile[j] = get(i, j);
    auto [it, inserted] = index.emplace(std::move(profile), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(i);
  }
  return classes;
}

// Weighted class matrix: entry (r, c) is the integral of W over row class r
// times column class c.
struct Compressed {
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<std::size_t>> cols;
  std::vector<double> a;  // rows.size() x cols.size()

  double at(std::size_t r, std::size_t c) const { return a[r * cols.size() + c]; }
};

Compressed compress(const StepFunction& w) {
  const std::size_t k = w.parts();
  Compressed c;
  c.rows = profile_classes(k, [&](std::size_t i, std::size_t j) { return w.cell(i, j); });
  c.cols = profile_classes(k, [&](std::size_t j, std::size_t i) { return w.cell(i, j); });
  c.a.assign(c.rows.size() * c.cols.size(), 0.0);
  for (std::size_t r = 0; r < c.rows.size(); ++r)
    for (std::size_t q = 0; q < c.cols.size(); ++q) {
      double sum = 0.0;
      for (std::size_t i : c.rows[r])
        for (std::size_t j : c.cols[q]) sum += w.cell(i, j) * w.measure(i) * w.measure(j);
      c.a[r * c.cols.size() + q] = sum;
    }
  return c;
}

// Best value over subsets of the "left" classes, each evaluated with the
// optimal set of "right" classes. left x right matrix given by m(l, r).
struct Search {
  double value = 0.0;
  std::uint64_t left = 0;
  bool positive = true;
};

Search exact_search(std::size_t nl, std::size_t nr, const std::vector<double>& m) {
  const std::uint64_t total = std::uint64_t{1} << nl;
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
  std::vector<Search> best(chunks);
#pragma omp parallel for schedule(dynamic)
  for (long ci = 0; ci < static_cast<long>(chunks); ++ci) {
    const auto chunk = static_cast<std::uint64_t>(ci);
    const std::uint64_t begin = total * chunk / chunks;
    const std::uint64_t end = total * (chunk + 1) / chunks;
    std::vector<double> col(nr, 0.0);
    std::uint64_t gray = begin ^ (begin >> 1);
    for (std::size_t l = 0; l < nl; ++l)
      if (gray >> l & 1)
        for (std::size_t r = 0; r < nr; ++r) col[r] += m[l * nr + r];
    Search local;
    for (std::uint64_t idx = begin;;) {
      double pos = 0.0;
      double neg = 0.0;
      for (double v : col) (v > 0 ? pos : neg) += v;
      if (pos > local.value) local = {pos, gray, true};
      if (-neg > local.value) local = {-neg, gray, false};
      if (++idx == end) break;
      const int bit = std::countr_zero(idx);
      gray ^= std::uint64_t{1} << bit;
      const double sign = (gray >> bit & 1) ? 1.0 : -1.0;
      for (std::size_t r = 0; r < nr; ++r) col[r] += sign * m[static_cast<std::size_t>(bit) * nr + r];
    }
    best[chunk] = local;
  }
  Search result;
  for (const Search& s : best)
    if (s.value > result.value) result = s;
  return result;
}

Search random_search(std::size_t nl, std::size_t nr, const std::vector<double>& m,
                     const CutNormOptions& options) {
  if (nl > 64) throw ResourceError("randomized cut norm search supports at most 64 row classes");
  Search result;
  std::mt19937_64 rng(options.seed);
  for (std::size_t restart = 0; restart < options.random_restarts; ++restart) {
    for (bool positive : {true, false}) {
      const double sign = positive ? 1.0 : -1.0;
      std::vector<bool> s(nl);
      for (std::size_t l = 0; l < nl; ++l) s[l] = (rng() & 1) != 0;
      double last = -1.0;
      for (int round = 0; round < 100; ++round) {
        std::vector<bool> t(nr);
        for (std::size_t r = 0; r < nr; ++r) {
          double v = 0.0;
          for (std::size_t l = 0; l < nl; ++l)
            if (s[l]) v += sign * m[l * nr + r];
          t[r] = v > 0;
        }
        double value = 0.0;
        for (std::size_t l = 0; l < nl; ++l) {
          double v = 0.0;
          for (std::size_t r = 0; r < nr; ++r)
            if (t[r]) v += sign * m[l * nr + r];
          s[l] = v > 0;
          if (s[l]) value += v;
        }
        if (value <= last) break;
        last = value;
      }
      if (last > result.value) {
        std::uint64_t mask = 0;
        for (std::size_t l = 0; l < nl; ++l)
          if (s[l]) mask |= std::uint64_t{1} << l;
        result = {last, mask, positive};
      }
    }
  }
  return result;
}

}  // namespace

CutNormResult cut_norm(const StepFunction& w, const CutNormOptions& options) {
  const Compressed c = compress(w);
  const std::size_t nrow = c.rows.size();
  const std::size_t ncol = c.cols.size();
  // Enumerate over the smaller side.
  const bool by_rows = nrow <= ncol;
  const std::size_t nl = by_rows ? nrow : ncol;
  const std::size_t nr = by_rows ? ncol : nrow;
  std::vector<double> m(nl * nr);
  for (std::size_t l = 0; l < nl; ++l)
    for (std::size_t r = 0; r < nr; ++r) m[l * nr + r] = by_rows ? c.at(l, r) : c.at(r, l);

  CutNormResult result;
  result.row_classes = nrow;
  result.column_classes = ncol;
  result.exact = nl <= options.max_exact_classes;
  const Search s = result.exact ? exact_search(nl, nr, m) : random_search(nl, nr, m, options);

  // Recover the optimal right side for the chosen left set.
  std::vector<std::size_t> left_classes;
  std::vector<std::size_t> right_classes;
  for (std::size_t l = 0; l < nl; ++l)
    if (s.left >> l & 1) left_classes.push_back(l);
  for (std::size_t r = 0; r < nr; ++r) {
    double v = 0.0;
    for (std::size_t l : left_classes) v += m[l * nr + r];
    if (s.positive ? v > 0 : v < 0) right_classes.push_back(r);
  }
  const auto& lgroups = by_rows ? c.rows : c.cols;
  const auto& rgroups = by_rows ? c.cols : c.rows;
  CellSet left_cells;
  CellSet right_cells;
  for (std::size_t l : left_classes)
    left_cells.insert(left_cells.end(), lgroups[l].begin(), lgroups[l].end());
  for (std::size_t r : right_classes)
    right_cells.insert(right_cells.end(), rgroups[r].begin(), rgroups[r].end());
  std::sort(left_cells.begin(), left_cells.end());
  std::sort(right_cells.begin(), right_cells.end());
  result.witness.s = by_rows ? left_cells : right_cells;
  result.witness.t = by_rows ? right_cells : left_cells;
  result.witness.value = block_density(w, result.witness.s, result.witness.t);
  result.value = std::abs(result.witness.value);
  return result;
}

}  // namespace graphon
