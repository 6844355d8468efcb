#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylgray::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kSearchUnresolved = 3,
};

// args excludes the program name. `in` backs `--input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace weylgray::cli
