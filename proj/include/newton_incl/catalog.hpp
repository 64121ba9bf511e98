// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#pragma once

#include <string_view>
#include <vector>

#include "newton_incl/problem.hpp"

namespace newton_incl {

/// Built-in desk-scale problems. Each entry carries reference constants in
/// its expected-values block where they are derivable by hand:
///   sqrt2       x^2 - 2 = 0                      (n=1, p=0, q=1)
///   cubic       x^3 - 2 = 0                      (n=1, p=0, q=1)
///   ineq-line   affine, one inequality + one equality   (n=2, p=1, q=1)
///   ineq-circle x0^2 + x1^2 - 1 <= 0, x0 - x1 = 0       (n=2, p=1, q=1)
///   system-2x2  nonlinear square system                 (n=2, p=0, q=2)
///   mixed-3     two inequalities + one equality          (n=3, p=2, q=1)
[[nodiscard]] std::vector<InclusionProblem> catalog();

/// Lookup by name; throws invalid_argument for unknown names.
[[nodiscard]] InclusionProblem catalog_problem(std::string_view name);

}  // namespace newton_incl
