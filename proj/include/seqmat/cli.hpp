#ifndef SEQMAT_CLI_HPP
#define SEQMAT_CLI_HPP

#include <iosfwd>

namespace seqmat::cli {

/// Full command-line front end. Returns the process exit code:
/// 0 success, 1 usage or evaluation error, 2 when `verify` diverges from
/// the committed golden ledger.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seqmat::cli

#endif
