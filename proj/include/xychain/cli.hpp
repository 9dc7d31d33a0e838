#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xychain {

/// Subcommands: gen-disorder, sweep-alpha, grid-omega-alpha, wavefunction,
/// dynamics, validate. Returns 0 on success, 1 on runtime or config errors
/// and 2 on usage errors.
int dispatch(int argc, char** argv);
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xychain
