#pragma once

namespace hyplab {

// Full command-line front end. Returns the process exit status:
// 0 success, 2 usage problems, 3 capacity cap exceeded, 1 anything else.
// Artifact bytes depend only on the semantic flags (never on --workers,
// --out, or timing), so repeated runs diff clean.
int run_cli(int argc, const char* const* argv);

}  // namespace hyplab
