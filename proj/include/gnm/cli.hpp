#pragma once

#include <string_view>

#include "gnm/json_io.hpp"

namespace gnm {

inline constexpr std::string_view kVersion = "gnm 1.0.0";

struct CommandResult {
  Json response;
  /// 0 on OK/PASS, 1 on UNSOLVABLE/FAIL, 2 on input errors.
  int exit_code = 0;
};

/// Validates and dispatches one request object:
///   {command: analyze|solve|apply-tau|verify|expand, moments, kappa, kind,
///    tau: {num, den}, phi: {num, den}, order}
CommandResult run_command(const Json& request);

}  // namespace gnm
