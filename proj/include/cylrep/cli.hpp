#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cylrep {

// Runs one command. args excludes the program name. Exit codes: 0 pass,
// 1 semantic failure, 2 usage or format error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cylrep
