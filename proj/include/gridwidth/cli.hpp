#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridwidth {

// Full command-line surface of the gridwidth tool; returns the process exit
// code (0 ok, 1 verification mismatch, 2 usage error, 3 resource refusal).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridwidth
