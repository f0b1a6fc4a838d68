#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tetra/verify.hpp"

namespace tetra::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kVerifyFailed = 3, kNumerical = 4 };

/// Runs the command line `args` (without the program name). Datasets go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Implementation& impl = {});

int main(int argc, char** argv);

}  // namespace tetra::cli
