// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#pragma once

#include <string>

#include <json.hpp>

#include "newton_incl/certify.hpp"
#include "newton_incl/problem.hpp"
#include "newton_incl/solver.hpp"

namespace newton_incl {

/// Parse a problem document:
///   {"name"?: string, "n": int, "cone": {"p": int, "q": int}, "F": [expr...],
///    "x_tilde": [real...], "R": real,
///    "expected"?: {"L"?: real, "gamma"?: real, "b"?: real, "solution"?: [real...]}}
/// Expressions are nested arrays: ["add", a, b] | ["mul", a, b] | ["neg", a] |
/// ["pow", a, k] | ["var", i] | ["const", c]. Schema violations raise
/// invalid_argument with the JSON path of the offending field.
[[nodiscard]] InclusionProblem load_problem(const std::string& text);
[[nodiscard]] InclusionProblem problem_from_json(const nlohmann::json& j);

/// Serialize a problem. Reals are written with up to 17 significant digits so
/// that load(save(p)) reproduces p bit-exactly and save is byte-stable.
[[nodiscard]] std::string save_problem(const InclusionProblem& problem);

// Report serializers shared by the CLI and the tests. Non-finite values
// (an undefined rate constant, say) serialize as null.
[[nodiscard]] nlohmann::ordered_json certificate_json(const Certificate& cert);
[[nodiscard]] nlohmann::ordered_json trace_json(const SolveTrace& trace);
[[nodiscard]] nlohmann::ordered_json verification_json(const VerificationReport& report);

}  // namespace newton_incl
