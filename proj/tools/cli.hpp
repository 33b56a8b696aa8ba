#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mla::cli {

enum Exit : int { ok = 0, negative = 1, input_error = 2, internal_error = 3 };

// Runs the command line tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mla::cli
