#pragma once

namespace starhess {
namespace cli {

/// Parses argv and executes one subcommand.  Exit code 0 on success or a
/// passing verification, 1 on a verification failure, 2 on a usage error.
int run(int argc, const char* const* argv);

}  // namespace cli
}  // namespace starhess
