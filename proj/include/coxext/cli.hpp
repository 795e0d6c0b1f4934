#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxext {

/// Exit status: 0 success, 1 verification failure (oracle mismatch, violated
/// hard invariant, numerical failure), 2 usage or domain error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxext
