#include "graphon/decorated.hpp"

#include <algorithm>

#include "graphon/errors.hpp"

namespace graphon {

DecoratedGraph::DecoratedGraph(std::size_t order)
    : n_(order), states_(order * order, EdgeState::free), parts_(order, 0) {}

void DecoratedGraph::check_vertex(std::size_t v) const {
  if (v >= n_) throw ValidationError("vertex " + std::to_string(v) + " out of range");
}

bool DecoratedGraph::is_root(std::size_t v) const {
  check_vertex(v);
  return std::find(roots_.begin(), roots_.end(), v) != roots_.end();
}

void DecoratedGraph::set_state(std::size_t u, std::size_t v, EdgeState s) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ValidationError("loops are not allowed");
  states_[u * n_ + v] = states_[v * n_ + u] = s;
}

EdgeState DecoratedGraph::state(std::size_t u, std::size_t v) const {
  check_vertex(u);
  check_vertex(v);
  return states_[u * n_ + v];
}

void DecoratedGraph::add_root(std::size_t v) {
  if (is_root(v)) throw ValidationError("vertex " + std::to_string(v) + " is already a root");
  roots_.push_back(v);
}

void DecoratedGraph::set_part(std::size_t v, std::size_t part) {
  check_vertex(v);
  parts_[v] = part;
}

std::size_t DecoratedGraph::part(std::size_t v) const {
  check_vertex(v);
  return parts_[v];
}

void DecoratedGraph::validate() const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t j = i + 1; j < roots_.size(); ++j)
      if (state(roots_[i], roots_[j]) == EdgeState::free)
        throw ValidationError("root pair (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") must be an edge or a non-edge");
}

DecoratedGraph::RootSignature DecoratedGraph::root_signature() const {
  RootSignature sig;
  for (std::size_t r : roots_) sig.parts.push_back(parts_[r]);
  for (std::size_t i = 0; i < roots_.size(); ++i)
    for (std::size_t j = i + 1; j < roots_.size(); ++j)
      sig.states.push_back(state(roots_[i], roots_[j]));
  return sig;
}

}  // namespace graphon
