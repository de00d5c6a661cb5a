#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycong::cli {

// Runs one subcommand (alpha, set, nset, surjective, table, verify) against
// the given streams.  Returns 0 on success, 1 on usage or computation errors,
// 2 when a cross-verification found disagreeing values.  Honors the
// CONGRUENCE_ORACLE_BUDGET environment variable (default 100000000).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace polycong::cli
