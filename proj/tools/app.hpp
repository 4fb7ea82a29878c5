#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thmon::cli {

  // Runs one invocation.  args excludes the program name.  Returns 0 when
  // the checked property holds (or the command succeeded), 1 when it does
  // not hold and 2 on any error.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace thmon::cli
