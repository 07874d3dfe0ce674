#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace ordchomp {

// Runs the command-line tool. Returns 0 on success, 1 on domain errors,
// 2 on usage errors. All output goes to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in);

}  // namespace ordchomp
