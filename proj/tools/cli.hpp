#pragma once

#include <iosfwd>

namespace chromaplex::cli {

// Exit codes: 0 success, 1 failed verdicts, 2 usage or input errors.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace chromaplex::cli
