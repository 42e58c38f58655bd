#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "graphon/graphon.hpp"
#include "graphon/step_graphon.hpp"
#include "graphon/universal/universal_graphon.hpp"

namespace graphon {

// W_F specs: zero, one, half, const:p, checker[:K] (indices 0..K, default
// 20), or a step-graphon file path.
GraphonPtr resolve_wf(const std::string& spec);
// Same specs except half, which has no step representation.
ExactStepGraphon resolve_exact_wf(const std::string& spec);

// Universal-graphon descriptor (.ug):
//   universal 1
//   wf <spec>
//   depth <D>
//   bits <P>
//   order A B C D E F G P Q R   (optional)
//   exact                       (optional: rational encoding)
//   bitstream 0101...           (optional; checked against the rebuild)
struct UniversalDescriptor {
  std::string wf;
  UniversalOptions options;
  bool exact = false;
  std::optional<BitStream> bitstream;
};

UniversalDescriptor read_descriptor(std::istream& in);
// Relative wf paths are resolved against the descriptor's directory.
UniversalDescriptor load_descriptor(const std::string& path);
void write_descriptor(std::ostream& out, const UniversalDescriptor& desc);

// Builds W_0 and, when the descriptor records a bit stream, checks that the
// rebuild reproduces it (ValidationError otherwise).
UniversalGraphon build_from_descriptor(const UniversalDescriptor& desc);

}  // namespace graphon
