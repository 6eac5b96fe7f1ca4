// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief Command-line workbench: examples, validation, suspension, invariants.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "psym/nambu.hpp"

namespace psym {

/// Exit statuses of the workbench.
enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitInput = 2, kExitNumeric = 3 };

/// Environment variable overriding the default algebraic tolerance.
inline constexpr const char* kTolEnv = "PSYM_TOL";

/// Charge operator Q on any (possibly doubled) space: +1 on annihilators, -1 on creators.
[[nodiscard]] Mat charge_operator(const NambuSpace& space);

/// Runs one command; args exclude the program name.
[[nodiscard]] int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psym
