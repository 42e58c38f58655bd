#pragma once

#include <iosfwd>
#include <string>

#include "graphon/step_graphon.hpp"

namespace graphon {

// Line-oriented text format:
//
//   stepgraphon 1
//   parts k
//   asymmetric            (optional; step functions only)
//   bounds b0 b1 ... bk
//   k rows of k values
//
// Numbers are decimals or fractions p/q, read exactly. Blank lines and lines
// starting with '#' are skipped. Errors are reported as ParseError with the
// line and column of the offending token.
struct StepFileContents {
  bool asymmetric = false;
  ExactStepFunction function;
};

StepFileContents parse_step_file(std::istream& in);

ExactStepGraphon read_exact_step_graphon(std::istream& in);
StepGraphon read_step_graphon(std::istream& in);
StepFunction read_step_function(std::istream& in);

ExactStepGraphon load_exact_step_graphon(const std::string& path);
StepGraphon load_step_graphon(const std::string& path);
StepFunction load_step_function(const std::string& path);

// Doubles are written with 17 significant digits so that reading back gives
// the same values; rationals as p/q.
void write_step_function(std::ostream& out, const StepFunction& f);
void write_step_function(std::ostream& out, const ExactStepFunction& f);

}  // namespace graphon
