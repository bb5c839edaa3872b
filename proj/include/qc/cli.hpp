#pragma once

namespace qc::cli {

// Exit codes: 0 Good/success, 1 Bad, 2 Inconclusive, 64 usage error,
// 65 input error.
int run(int argc, const char* const* argv);

}  // namespace qc::cli
