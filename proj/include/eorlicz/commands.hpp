#pragma once

#include <optional>
#include <string>

namespace eorlicz {

/// Exit-code contract shared by the CLI and the test suites:
///   classify: 0 all requested classes certified, 1 any refuted,
///             2 inconclusive present, 3 input error
///   norm/sobolev: 0 finite value, 1 +inf (not a member), 3 input or
///             precondition error
///   catalog:  0 nothing unexpected, 1 unexpected dispute or inconclusive,
///             3 unknown fixture
struct CommandResult {
  int exit_code = 0;
  std::string report;  ///< JSON, newline terminated
};

CommandResult cmd_classify(const std::string& spec_path);
CommandResult cmd_norm(const std::string& spec_path, const std::string& data_path,
                       double tol = 1e-10);
CommandResult cmd_sobolev(const std::string& spec_path, const std::string& data_path, int order,
                          double tol = 1e-10);
CommandResult cmd_catalog(const std::optional<std::string>& fixture = std::nullopt);

}  // namespace eorlicz
