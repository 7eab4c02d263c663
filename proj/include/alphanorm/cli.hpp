// Command-line driver. Exit codes: 0 pass, 1 semantic failure, 2 usage or
// parse error.
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "alphanorm/syntax.hpp"

namespace alphanorm {

// "x=2;y=2,1"; the y list may be omitted when x=0.
std::optional<Signature> parse_signature(const std::string& text);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alphanorm
