#include "graphon/densities.hpp"

#include <cmath>

namespace graphon {

void check_assignment_budget(std::size_t cells, std::size_t vertices) {
  if (std::pow(static_cast<double>(cells), static_cast<double>(vertices)) >
      kDensityAssignmentBudget)
    throw ResourceError(std::to_string(cells) + "^" + std::to_string(vertices) +
                        " cell assignments exceed the density budget");
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  // splitmix64 finalizer
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

SimpleGraph sample_with(const Graphon& w, std::size_t n, std::mt19937_64& rng) {
  std::vector<double> x(n);
  for (double& xi : x) xi = unit_double(rng);
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (unit_double(rng) < w.value(x[i], x[j])) g.add_edge(i, j);
  return g;
}

}  // namespace

SimpleGraph sample_w_random(const Graphon& w, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ValidationError("sample order must be at least 1");
  std::mt19937_64 rng(seed);
  return sample_with(w, n, rng);
}

double edge_density(const SimpleGraph& g) {
  const std::size_t n = g.order();
  if (n < 2) return 0.0;
  return static_cast<double>(g.edge_count()) / (static_cast<double>(n * (n - 1)) / 2.0);
}

SampledDensity sample_induced_density(const SimpleGraph& h, const Graphon& w,
                                      std::size_t samples, std::uint64_t seed) {
  constexpr std::size_t streams = 64;
  const std::uint64_t target = canonical_code(h);
  std::vector<std::size_t> hits(streams, 0);
#pragma omp parallel for schedule(static)
  for (long s = 0; s < static_cast<long>(streams); ++s) {
    const auto stream = static_cast<std::size_t>(s);
    std::mt19937_64 rng(derive_seed(seed, stream));
    const std::size_t count = samples / streams + (stream < samples % streams ? 1 : 0);
    std::size_t local = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const SimpleGraph g = sample_with(w, h.order(), rng);
      if (g.edge_count() == h.edge_count() && canonical_code(g) == target) ++local;
    }
    hits[stream] = local;
  }
  std::size_t total = 0;
  for (std::size_t c : hits) total += c;
  const double mean = samples == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(samples);
  const double se = samples == 0 ? 0.0 : std::sqrt(mean * (1.0 - mean) / static_cast<double>(samples));
  return {mean, se, samples};
}

}  // namespace graphon
