#pragma once

#include <iostream>

namespace coxfan {

// Full command-line surface; linked into both the binary and the tests.
// Exit codes: 0 success, 1 verification/runtime failure, 2 usage error,
// 3 unsupported signature. Errors go to err as "ERROR:<kind>: message".
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxfan
