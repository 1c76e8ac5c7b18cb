#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twosep::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kConsistency = 3 };

/// Runs one command line (without the program name). "-" as an input file
/// reads `in`. Diagnostics go to `err` as a single line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace twosep::cli
