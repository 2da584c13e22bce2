#ifndef MONOIDLAB_CLI_HPP_
#define MONOIDLAB_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace monoidlab {

// Dispatches the monoidlab subcommands.  Exit codes: 0 proved / holds /
// member / isoterm / pass, 1 refuted / fails / non-member, 2 unknown,
// 3 input error.  MONOIDLAB_BUDGET overrides the default search budgets.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoidlab

#endif  // MONOIDLAB_CLI_HPP_
