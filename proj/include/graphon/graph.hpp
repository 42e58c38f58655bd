#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace graphon {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph on vertices 0..n-1.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t order = 0);
  SimpleGraph(std::size_t order, const std::vector<Edge>& edges);

  std::size_t order() const { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  // Throws ValidationError for loops, out-of-range vertices and repeated edges.
  void add_edge(std::size_t u, std::size_t v);
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  // Vertex i of the result is vertex perm[i] of this graph.
  SimpleGraph permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(std::size_t v) const;

  std::size_t n_;
  std::vector<std::uint8_t> adj_;
};

SimpleGraph complete_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
// K4 minus an edge.
SimpleGraph k4_minus();

// Brute-force permutation search; refuses graphs with more than 8 vertices.
constexpr std::size_t kMaxAutomorphismOrder = 8;
std::size_t automorphism_count(const SimpleGraph& g);

// Adjacency bits of the lexicographically smallest relabeling; equal codes
// iff isomorphic. Orders up to 8.
std::uint64_t canonical_code(const SimpleGraph& g);
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// One representative per isomorphism class of graphs on n vertices, n <= 6.
std::vector<SimpleGraph> isomorphism_classes(std::size_t n);

// "graph n" followed by "u v" edge lines, 0-indexed; '#' starts a comment.
SimpleGraph read_graph(std::istream& in);
SimpleGraph load_graph(const std::string& path);
void write_graph(std::ostream& out, const SimpleGraph& g);

}  // namespace graphon
