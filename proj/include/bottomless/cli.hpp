#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bottomless {

// Full command-line front end.  `args` excludes the program name; `in` feeds
// the `strategy` subcommand, `out`/`err` replace the standard streams.
// Returns the process exit code: 0 success / verified, 1 violations or a
// failed self-check, 2 usage, parse, or protocol errors.
int cli_main(std::vector<std::string> args, std::istream& in,
             std::ostream& out, std::ostream& err);

}  // namespace bottomless
