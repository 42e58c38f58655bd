#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphon {

// Command-line front end. Returns 0 on success, 1 when a verification check
// fails, 2 on usage or input errors (diagnostics go to `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graphon
