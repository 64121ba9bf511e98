// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace newton_incl {

/// Command-line driver. Subcommands: solve | certify | verify | catalog.
/// Problem sources are file paths or catalog names. Exit codes:
///   0  success / convergence / all bounds hold
///   1  bad input (unknown flags, malformed problems, unparsable values)
///   2  iteration limit reached
///   3  step failure (linearized inclusion infeasible)
///   4  rho at or above rho_max
///   5  verification found violated bounds
/// The environment variable NEWTON_INCL_SEED provides the default seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace newton_incl
