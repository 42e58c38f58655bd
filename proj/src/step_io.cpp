#include "graphon/step_io.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "graphon/errors.hpp"

namespace graphon {

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

// Splits the input into non-comment lines of tokens.
std::vector<std::vector<Token>> tokenize(std::istream& in) {
  std::vector<std::vector<Token>> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      if (line[i] == '#') break;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tokens.push_back({line.substr(start, i - start), number, start + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

Rational number(const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + t.text + "'", t.line, t.column);
  }
}

std::size_t count(const Token& t) {
  const Rational v = number(t);
  if (v < 1 || denominator(v) != 1)
    throw ParseError("expected a positive integer, got '" + t.text + "'", t.line, t.column);
  return numerator(v).convert_to<std::size_t>();
}

void expect_keyword(const std::vector<Token>& line, const std::string& keyword,
                    std::size_t arity) {
  if (line.front().text != keyword)
    throw ParseError("expected '" + keyword + "', got '" + line.front().text + "'",
                     line.front().line, line.front().column);
  if (line.size() != arity + 1) {
    const Token& where = line.size() > arity + 1 ? line[arity + 1] : line.back();
    throw ParseError("'" + keyword + "' takes " + std::to_string(arity) + " value(s)",
                     where.line, where.column);
  }
}

}  // namespace

StepFileContents parse_step_file(std::istream& in) {
  const auto lines = tokenize(in);
  std::size_t at = 0;
  const auto next = [&](const char* what) -> const std::vector<Token>& {
    if (at >= lines.size()) {
      const std::size_t last = lines.empty() ? 1 : lines.back().front().line + 1;
      throw ParseError(std::string("unexpected end of input, expected ") + what, last, 1);
    }
    return lines[at++];
  };

  const auto& header = next("'stepgraphon 1'");
  expect_keyword(header, "stepgraphon", 1);
  if (header[1].text != "1")
    throw ParseError("unsupported format version '" + header[1].text + "'", header[1].line,
                     header[1].column);

  const auto& parts_line = next("'parts k'");
  expect_keyword(parts_line, "parts", 1);
  const std::size_t k = count(parts_line[1]);

  StepFileContents contents;
  const auto* line = &next("'bounds'");
  if (line->front().text == "asymmetric") {
    expect_keyword(*line, "asymmetric", 0);
    contents.asymmetric = true;
    line = &next("'bounds'");
  }
  expect_keyword(*line, "bounds", k + 1);
  std::vector<Rational> bounds;
  for (std::size_t i = 1; i <= k + 1; ++i) bounds.push_back(number((*line)[i]));
  ExactIntervalPartition partition;
  try {
    partition = ExactIntervalPartition(bounds);
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), line->front().line, line->front().column);
  }

  Matrix<Rational> values(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& row = next("a matrix row");
    if (row.size() != k) {
      const Token& where = row.size() > k ? row[k] : row.back();
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                           " values, expected " + std::to_string(k),
                       where.line, where.column);
    }
    for (std::size_t j = 0; j < k; ++j) {
      values(i, j) = number(row[j]);
      if (values(i, j) < -1 || values(i, j) > 1)
        throw ParseError("value outside [-1, 1]", row[j].line, row[j].column);
    }
  }
  if (at < lines.size())
    throw ParseError("trailing content after the matrix", lines[at].front().line,
                     lines[at].front().column);
  contents.function = ExactStepFunction(std::move(partition), std::move(values));
  if (!contents.asymmetric) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (contents.function.cell(i, j) != contents.function.cell(j, i)) {
          const Token& where = lines[at - k + i][j];
          throw ParseError("matrix is not symmetric; add an 'asymmetric' line for step functions",
                           where.line, where.column);
        }
  }
  return contents;
}

ExactStepGraphon read_exact_step_graphon(std::istream& in) {
  const StepFileContents c = parse_step_file(in);
  if (c.asymmetric) throw ParseError("a graphon file cannot be 'asymmetric'", 3, 1);
  for (const Rational& v : c.function.values().data())
    if (v < 0) throw ValidationError("graphon values must lie in [0, 1]");
  return ExactStepGraphon(c.function.partition(), c.function.values());
}

StepGraphon read_step_graphon(std::istream& in) {
  return to_double_graphon(read_exact_step_graphon(in));
}

StepFunction read_step_function(std::istream& in) {
  return convert<double>(parse_step_file(in).function);
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return in;
}

template <class T>
void write_impl(std::ostream& out, const BasicStepFunction<T>& f) {
  const auto put = [&](const T& v) {
    if constexpr (std::is_same_v<T, double>) {
      std::ostringstream s;
      s << std::setprecision(17) << v;
      out << s.str();
    } else {
      out << to_string(v);
    }
  };
  out << "stepgraphon 1\nparts " << f.parts() << '\n';
  if (!f.symmetric()) out << "asymmetric\n";
  out << "bounds";
  for (const T& b : f.partition().bounds()) {
    out << ' ';
    put(b);
  }
  out << '\n';
  for (std::size_t i = 0; i < f.parts(); ++i) {
    for (std::size_t j = 0; j < f.parts(); ++j) {
      if (j > 0) out << ' ';
      put(f.cell(i, j));
    }
    out << '\n';
  }
}

}  // namespace

ExactStepGraphon load_exact_step_graphon(const std::string& path) {
  auto in = open_input(path);
  return read_exact_step_graphon(in);
}

StepGraphon load_step_graphon(const std::string& path) {
  auto in = open_input(path);
  return read_step_graphon(in);
}

StepFunction load_step_function(const std::string& path) {
  auto in = open_input(path);
  return read_step_function(in);
}

void write_step_function(std::ostream& out, const StepFunction& f) { write_impl(out, f); }
void write_step_function(std::ostream& out, const ExactStepFunction& f) { write_impl(out, f); }

}  // namespace graphon
