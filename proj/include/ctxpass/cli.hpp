#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctxpass {

// Full command-line front end, stream-injected so tests can drive it
// in-process. Returns the process exit code: 0 success, 1 usage error,
// 2 input or data error. Diagnostics go to err, data to out.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace ctxpass
