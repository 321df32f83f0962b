#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rampkit {

// Exit codes: 0 success or verified, 1 verified-false or bound violation, 2 usage or parameter error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rampkit
