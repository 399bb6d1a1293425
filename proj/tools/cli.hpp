#pragma once

#include <iosfwd>

namespace virality::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kDataError = 2;

// Entry point of the `virality` tool; subcommands synth, metrics, build,
// overlap and experiment.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace virality::cli
