#pragma once

#include <iosfwd>

namespace hopfq {

/// Command-line entry point. Returns the process exit status: 0 when every
/// check conforms, 1 when some check does not, 2 on an input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hopfq
