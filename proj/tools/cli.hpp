#pragma once

#include <iosfwd>

namespace toroidal::cli {

/// Runs the command line; returns the process exit code
/// (0 ok, 1 relation failures, 2 configuration errors).
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace toroidal::cli
