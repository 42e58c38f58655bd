#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "graphon/decorated.hpp"
#include "graphon/errors.hpp"
#include "graphon/graph.hpp"

namespace graphon {

namespace {

struct Line {
  std::vector<std::string> words;
  std::vector<std::size_t> columns;
  std::size_t number = 0;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (text[i] == '#') break;
      const std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      line.words.push_back(text.substr(start, i - start));
      line.columns.push_back(start + 1);
    }
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::size_t index_at(const Line& line, std::size_t k) {
  const std::string& w = line.words[k];
  std::size_t value = 0;
  if (w.empty() || w.size() > 9) throw ParseError("bad integer '" + w + "'", line.number, line.columns[k]);
  for (char c : w) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected a non-negative integer, got '" + w + "'", line.number,
                       line.columns[k]);
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.words.size() != arity + 1) {
    const std::size_t k = std::min(line.words.size() - 1, arity + 1);
    throw ParseError("'" + line.words[0] + "' takes " + std::to_string(arity) + " value(s)",
                     line.number, line.columns[k]);
  }
}

std::size_t read_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError("empty input, expected 'graph n'", 1, 1);
  const Line& h = lines.front();
  if (h.words[0] != "graph")
    throw ParseError("expected 'graph n', got '" + h.words[0] + "'", h.number, h.columns[0]);
  expect_arity(h, 1);
  return index_at(h, 1);
}

std::size_t vertex_at(const Line& line, std::size_t k, std::size_t n) {
  const std::size_t v = index_at(line, k);
  if (v >= n)
    throw ParseError("vertex " + std::to_string(v) + " out of range", line.number,
                     line.columns[k]);
  return v;
}

// Edge lines are "u v" or "edge u v".
bool edge_line(const Line& line, std::size_t& first) {
  if (line.words[0] == "edge") {
    expect_arity(line, 2);
    first = 1;
    return true;
  }
  if (std::isdigit(static_cast<unsigned char>(line.words[0][0]))) {
    if (line.words.size() != 2)
      throw ParseError("an edge line has two vertices", line.number, line.columns[0]);
    first = 0;
    return true;
  }
  return false;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return in;
}

}  // namespace

SimpleGraph read_graph(std::istream& in) {
  const auto lines = read_lines(in);
  const std::size_t n = read_header(lines);
  SimpleGraph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::size_t first = 0;
    if (!edge_line(line, first))
      throw ParseError("unexpected '" + line.words[0] + "' in a plain graph file", line.number,
                       line.columns[0]);
    const std::size_t u = vertex_at(line, first, n);
    const std::size_t v = vertex_at(line, first + 1, n);
    try {
      g.add_edge(u, v);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line.number, line.columns[first]);
    }
  }
  return g;
}

SimpleGraph load_graph(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << "graph " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

DecoratedGraph read_decorated_graph(std::istream& in) {
  const auto lines = read_lines(in);
  const std::size_t n = read_header(lines);
  DecoratedGraph g(n);
  std::vector<bool> fixed(n * n, false);
  const auto fix = [&](const Line& line, std::size_t first, EdgeState s) {
    const std::size_t u = vertex_at(line, first, n);
    const std::size_t v = vertex_at(line, first + 1, n);
    if (u == v) throw ParseError("loops are not allowed", line.number, line.columns[first]);
    if (fixed[u * n + v])
      throw ParseError("pair listed twice", line.number, line.columns[first]);
    fixed[u * n + v] = fixed[v * n + u] = true;
    g.set_state(u, v, s);
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::size_t first = 0;
    if (edge_line(line, first)) {
      fix(line, first, EdgeState::edge);
    } else if (line.words[0] == "nonedge") {
      expect_arity(line, 2);
      fix(line, 1, EdgeState::non_edge);
    } else if (line.words[0] == "root") {
      expect_arity(line, 1);
      try {
        g.add_root(vertex_at(line, 1, n));
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), line.number, line.columns[1]);
      }
    } else if (line.words[0] == "part") {
      expect_arity(line, 2);
      g.set_part(vertex_at(line, 1, n), index_at(line, 2));
    } else {
      throw ParseError("unknown directive '" + line.words[0] + "'", line.number,
                       line.columns[0]);
    }
  }
  const auto& roots = g.roots();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (g.state(roots[i], roots[j]) == EdgeState::free)
        g.set_state(roots[i], roots[j], EdgeState::non_edge);
  return g;
}

DecoratedGraph load_decorated_graph(const std::string& path) {
  auto in = open_input(path);
  return read_decorated_graph(in);
}

}  // namespace graphon
