#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace olacat::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kInputError = 2, kResourceError = 3 };

struct SuiteResult {
  std::string name;
  long checked = 0;
  long mismatches = 0;
};

// Fast paths against the brute-force implementations on small domains.
std::vector<SuiteResult> run_certification(int kl_max);

// argv without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace olacat::cli
