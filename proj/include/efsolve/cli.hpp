#pragma once

namespace efsolve {

// The command-line surface. Exit codes: 0 success (certified / convergent /
// probe agreement), 2 honest negative outcomes (divergent or indeterminate
// decay integral, uncertified run, probe disagreement, failed self-test),
// 1 program errors (bad config, solver failures).
int run_cli(int argc, const char* const* argv);

}  // namespace efsolve
