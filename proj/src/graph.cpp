#include "graphon/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "graphon/errors.hpp"

namespace graphon {

SimpleGraph::SimpleGraph(std::size_t order) : n_(order), adj_(order * order, 0) {}

SimpleGraph::SimpleGraph(std::size_t order, const std::vector<Edge>& edges)
    : SimpleGraph(order) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::check_vertex(std::size_t v) const {
  if (v >= n_)
    throw ValidationError("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(n_));
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u * n_ + v] != 0;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ValidationError("loops are not allowed");
  if (adj_[u * n_ + v]) throw ValidationError("repeated edge");
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (adj_[u * n_ + v]) out.emplace_back(u, v);
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

SimpleGraph SimpleGraph::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) throw ValidationError("permutation has the wrong length");
  SimpleGraph g(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) g.adj_[i * n_ + j] = adj_[perm[i] * n_ + perm[j]];
  return g;
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw ValidationError("a cycle needs at least 3 vertices");
  SimpleGraph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph k4_minus() { return SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

namespace {

void check_small(const SimpleGraph& g) {
  if (g.order() > kMaxAutomorphismOrder)
    throw ResourceError("brute-force permutation search is limited to " +
                        std::to_string(kMaxAutomorphismOrder) + " vertices");
}

std::uint64_t code_under(const SimpleGraph& g, const std::vector<std::size_t>& perm) {
  std::uint64_t code = 0;
  const std::size_t n = g.order();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      code = (code << 1) | (g.adjacent(perm[u], perm[v]) ? 1u : 0u);
  return code;
}

}  // namespace

std::size_t automorphism_count(const SimpleGraph& g) {
  check_small(g);
  std::vector<std::size_t> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  const std::uint64_t base = code_under(g, perm);
  std::size_t count = 0;
  do {
    if (code_under(g, perm) == base) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::uint64_t canonical_code(const SimpleGraph& g) {
  check_small(g);
  std::vector<std::size_t> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = code_under(g, perm);
  while (std::next_permutation(perm.begin(), perm.end()))
    best = std::min(best, code_under(g, perm));
  return best;
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_code(a) == canonical_code(b);
}

std::vector<SimpleGraph> isomorphism_classes(std::size_t n) {
  if (n > 6) throw ResourceError("isomorphism classes are enumerated for n <= 6 only");
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::set<std::uint64_t> seen;
  std::vector<SimpleGraph> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    SimpleGraph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1) g.add_edge(pairs[e].first, pairs[e].second);
    if (seen.insert(canonical_code(g)).second) classes.push_back(std::move(g));
  }
  return classes;
}

}  // namespace graphon
