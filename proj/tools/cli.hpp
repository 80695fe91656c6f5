#pragma once

#include <iosfwd>

namespace tyw::cli {

// Exit codes: 0 ok, 1 verification failure, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tyw::cli
