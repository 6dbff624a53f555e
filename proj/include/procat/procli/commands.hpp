#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "procat/error.hpp"

namespace procat::procli {

// Exit statuses of the command line.
enum ExitStatus : int {
  kExitOk = 0,
  kExitOther = 1,  // also: a verification suite failed
  kExitParse = 2,
  kExitPrecondition = 3,
  kExitBudget = 4,
  kExitInvariant = 5,
};

int exit_status(ErrorKind kind);

// Runs one subcommand (args exclude the program name). The artifact is written to `out` only
// when the command succeeds; diagnostics go to `err`. Output is a function of the arguments and
// the input files alone.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace procat::procli
