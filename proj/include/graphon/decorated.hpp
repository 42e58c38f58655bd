#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "graphon/core_ops.hpp"
#include "graphon/graph.hpp"
#include "graphon/step_graphon.hpp"

namespace graphon {

enum class EdgeState { free, edge, non_edge };

// Graph with ordered roots, a part label per vertex and a three-valued state
// per vertex pair. Root-root pairs must be edge or non-edge.
class DecoratedGraph {
 public:
  explicit DecoratedGraph(std::size_t order = 0);

  std::size_t order() const { return n_; }
  const std::vector<std::size_t>& roots() const { return roots_; }
  bool is_root(std::size_t v) const;

  void set_state(std::size_t u, std::size_t v, EdgeState s);
  EdgeState state(std::size_t u, std::size_t v) const;
  void add_root(std::size_t v);
  void set_part(std::size_t v, std::size_t part);
  std::size_t part(std::size_t v) const;

  // Throws ValidationError if some root-root pair is free.
  void validate() const;

  // Root-induced decorated graph as (root parts, root-root states); two
  // decorated graphs are compatible iff their signatures are equal.
  struct RootSignature {
    std::vector<std::size_t> parts;
    std::vector<EdgeState> states;
    friend bool operator==(const RootSignature&, const RootSignature&) = default;
  };
  RootSignature root_signature() const;

 private:
  void check_vertex(std::size_t v) const;

  std::size_t n_;
  std::vector<EdgeState> states_;
  std::vector<std::size_t> parts_;
  std::vector<std::size_t> roots_;
};

// Parses the graph format with the extra lines `root v`, `part v p` and
// `nonedge u v`. Listed edges and non-edges are fixed; other non-root pairs
// are free and unlisted root-root pairs are non-edges. Without `part` lines
// every vertex is in part 0.
DecoratedGraph read_decorated_graph(std::istream& in);
DecoratedGraph load_decorated_graph(const std::string& path);

// A step graphon whose cells are grouped into parts of constant, pairwise
// distinct degree.
template <class T>
class BasicPartitionedStepGraphon {
 public:
  BasicPartitionedStepGraphon(BasicStepGraphon<T> g, std::vector<std::vector<std::size_t>> parts)
      : g_(std::move(g)), cells_(std::move(parts)), part_of_cell_(g_.parts(), npos) {
    for (std::size_t p = 0; p < cells_.size(); ++p) {
      if (cells_[p].empty()) throw ValidationError("empty part");
      for (std::size_t c : cells_[p]) {
        if (c >= g_.parts()) throw ValidationError("cell index out of range");
        if (part_of_cell_[c] != npos) throw ValidationError("cell assigned to two parts");
        part_of_cell_[c] = p;
      }
    }
    for (std::size_t c = 0; c < g_.parts(); ++c)
      if (part_of_cell_[c] == npos) throw ValidationError("cell not assigned to any part");
    for (std::size_t p = 0; p < cells_.size(); ++p) {
      T size(0);
      for (std::size_t c : cells_[p]) size += g_.measure(c);
      sizes_.push_back(size);
      const T d = cell_degree(cells_[p].front());
      for (std::size_t c : cells_[p])
        if (abs_value(T(cell_degree(c) - d)) > tolerance())
          throw ValidationError("degree is not constant on part " + std::to_string(p));
      for (std::size_t q = 0; q < degrees_.size(); ++q)
        if (abs_value(T(degrees_[q] - d)) <= tolerance())
          throw ValidationError("parts " + std::to_string(q) + " and " + std::to_string(p) +
                                " have the same degree");
      degrees_.push_back(d);
    }
  }

  // Groups cells by exactly equal degree, in order of first appearance.
  static BasicPartitionedStepGraphon by_degree(BasicStepGraphon<T> g) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<T> degs;
    for (std::size_t c = 0; c < g.parts(); ++c) {
      T d(0);
      for (std::size_t j = 0; j < g.parts(); ++j) d += g.cell(c, j) * g.measure(j);
      std::size_t p = 0;
      while (p < degs.size() && degs[p] != d) ++p;
      if (p == degs.size()) {
        degs.push_back(d);
        parts.emplace_back();
      }
      parts[p].push_back(c);
    }
    return BasicPartitionedStepGraphon(std::move(g), std::move(parts));
  }

  const BasicStepGraphon<T>& graph() const { return g_; }
  std::size_t part_count() const { return cells_.size(); }
  const std::vector<std::size_t>& cells(std::size_t part) const { return cells_.at(part); }
  const T& size(std::size_t part) const { return sizes_.at(part); }
  const T& degree(std::size_t part) const { return degrees_.at(part); }
  std::size_t part_of_cell(std::size_t cell) const { return part_of_cell_.at(cell); }
  std::size_t part_at(double x) const { return part_of_cell_[g_.partition().locate(x)]; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static T tolerance() {
    if constexpr (std::is_same_v<T, double>) {
      return 1e-12;
    } else {
      return T(0);
    }
  }

  T cell_degree(std::size_t c) const {
    T d(0);
    for (std::size_t j = 0; j < g_.parts(); ++j) d += g_.cell(c, j) * g_.measure(j);
    return d;
  }

  BasicStepGraphon<T> g_;
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::size_t> part_of_cell_;
  std::vector<T> sizes_;
  std::vector<T> degrees_;
};

using PartitionedStepGraphon = BasicPartitionedStepGraphon<double>;
using ExactPartitionedStepGraphon = BasicPartitionedStepGraphon<Rational>;

constexpr double kDecoratedAssignmentBudget = 1e8;

// Probability that non-roots drawn uniformly from their parts, together with
// the roots at the given coordinates, realize every fixed (non-free) pair
// state of D. Free pairs contribute no factor. Root-root pairs are conditioned
// on and must be admissible: W > 0 on edges and W < 1 on non-edges.
template <class T>
T decorated_density(const DecoratedGraph& dg, const BasicPartitionedStepGraphon<T>& w,
                    const std::vector<double>& roots) {
  dg.validate();
  const auto& rs = dg.roots();
  if (roots.size() != rs.size())
    throw PreconditionError("expected " + std::to_string(rs.size()) + " root coordinates, got " +
                            std::to_string(roots.size()));
  const auto& g = w.graph();
  const std::size_t n = dg.order();
  // Cell of every vertex; roots are fixed.
  std::vector<std::size_t> cell(n, 0);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::size_t c = g.partition().locate(roots[i]);
    if (dg.part(rs[i]) >= w.part_count() || w.part_of_cell(c) != dg.part(rs[i]))
      throw PreconditionError("root " + std::to_string(i) + " is not in its decorated part");
    cell[rs[i]] = c;
  }
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      const T& v = g.cell(cell[rs[i]], cell[rs[j]]);
      const EdgeState s = dg.state(rs[i], rs[j]);
      if (s == EdgeState::edge && !(v > T(0)))
        throw PreconditionError("root edge placed where W = 0");
      if (s == EdgeState::non_edge && !(v < T(1)))
        throw PreconditionError("root non-edge placed where W = 1");
    }

  std::vector<std::size_t> free_vertices;
  double assignments = 1.0;
  for (std::size_t v = 0; v < n; ++v) {
    if (dg.is_root(v)) continue;
    if (dg.part(v) >= w.part_count())
      throw ValidationError("vertex " + std::to_string(v) + " decorated with unknown part");
    free_vertices.push_back(v);
    assignments *= static_cast<double>(w.cells(dg.part(v)).size());
  }
  if (assignments > kDecoratedAssignmentBudget)
    throw ResourceError("decorated density needs too many cell assignments");

  const auto factor = [&](std::size_t u, std::size_t v) -> T {
    switch (dg.state(u, v)) {
      case EdgeState::edge:
        return g.cell(cell[u], cell[v]);
      case EdgeState::non_edge:
        return T(1) - g.cell(cell[u], cell[v]);
      case EdgeState::free:
        break;
    }
    return T(1);
  };

  // Depth-first over non-root vertices; the partial product covers every
  // pair between already placed vertices (roots count as placed).
  T total(0);
  const auto recurse = [&](auto&& self, std::size_t depth, const T& acc) -> void {
    if (acc == T(0)) return;
    if (depth == free_vertices.size()) {
      total += acc;
      return;
    }
    const std::size_t v = free_vertices[depth];
    const std::size_t part = dg.part(v);
    for (std::size_t c : w.cells(part)) {
      cell[v] = c;
      T next = acc * g.measure(c) / w.size(part);
      for (std::size_t r : rs) next *= factor(v, r);
      for (std::size_t k = 0; k < depth; ++k) next *= factor(v, free_vertices[k]);
      self(self, depth + 1, next);
    }
  };
  recurse(recurse, 0, T(1));
  return total;
}

// Expression tree over reals and decorated graphs with + and *.
template <class T>
class BasicDensityExpression {
 public:
  enum class Kind { constant, graph, sum, product };

  static BasicDensityExpression constant(const T& c) {
    BasicDensityExpression e(Kind::constant);
    e.value_ = c;
    return e;
  }
  static BasicDensityExpression graph(DecoratedGraph g) {
    BasicDensityExpression e(Kind::graph);
    e.graph_ = std::make_shared<const DecoratedGraph>(std::move(g));
    return e;
  }
  friend BasicDensityExpression operator+(BasicDensityExpression a, BasicDensityExpression b) {
    return combine(Kind::sum, std::move(a), std::move(b));
  }
  friend BasicDensityExpression operator*(BasicDensityExpression a, BasicDensityExpression b) {
    return combine(Kind::product, std::move(a), std::move(b));
  }

  Kind kind() const { return kind_; }
  const T& value() const { return value_; }
  const DecoratedGraph& decorated() const { return *graph_; }
  const std::vector<BasicDensityExpression>& children() const { return children_; }

  void collect_graphs(std::vector<const DecoratedGraph*>& out) const {
    if (kind_ == Kind::graph) out.push_back(graph_.get());
    for (const auto& c : children_) c.collect_graphs(out);
  }

 private:
  explicit BasicDensityExpression(Kind k) : kind_(k) {}

  static BasicDensityExpression combine(Kind k, BasicDensityExpression a,
                                        BasicDensityExpression b) {
    BasicDensityExpression e(k);
    e.children_.push_back(std::move(a));
    e.children_.push_back(std::move(b));
    return e;
  }

  Kind kind_;
  T value_{};
  std::shared_ptr<const DecoratedGraph> graph_;
  std::vector<BasicDensityExpression> children_;
};

using DensityExpression = BasicDensityExpression<double>;
using ExactDensityExpression = BasicDensityExpression<Rational>;

template <class T>
T eval_expression_unchecked(const BasicDensityExpression<T>& e,
                            const BasicPartitionedStepGraphon<T>& w,
                            const std::vector<double>& roots) {
  using Kind = typename BasicDensityExpression<T>::Kind;
  switch (e.kind()) {
    case Kind::constant:
      return e.value();
    case Kind::graph:
      return decorated_density(e.decorated(), w, roots);
    case Kind::sum: {
      T s(0);
      for (const auto& c : e.children()) s += eval_expression_unchecked(c, w, roots);
      return s;
    }
    case Kind::product: {
      T p(1);
      for (const auto& c : e.children()) p *= eval_expression_unchecked(c, w, roots);
      return p;
    }
  }
  return T(0);
}

// Throws ValidationError when the decorated graphs are not compatible.
template <class T>
T eval_expression(const BasicDensityExpression<T>& e, const BasicPartitionedStepGraphon<T>& w,
                  const std::vector<double>& roots) {
  std::vector<const DecoratedGraph*> graphs;
  e.collect_graphs(graphs);
  for (const DecoratedGraph* g : graphs) {
    g->validate();
    if (!(g->root_signature() == graphs.front()->root_signature()))
      throw ValidationError("decorated graphs in the expression are not compatible");
  }
  return eval_expression_unchecked(e, w, roots);
}

}  // namespace graphon
