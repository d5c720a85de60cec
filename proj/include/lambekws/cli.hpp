#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lambekws {

/// Runs one CLI command. Exit codes: 0 success (for `prove`: proved; for
/// `eval`: holds; for check commands: property holds), 1 definitive negative
/// (search space exhausted / fails / refuted), 2 inconclusive (budget hit or
/// unknown), 3 input or file error, 4 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lambekws
