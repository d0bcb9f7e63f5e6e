#pragma once

#include <ostream>

namespace malcev {

/// Full command-line driver. Returns the process exit code: 0 when every
/// asserted property held, 1 when a run produced findings, 2 on usage or
/// input errors (reported to err as one line naming the error kind).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace malcev
