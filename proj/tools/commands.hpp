#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "zagreb/graph.hpp"
#include "zagreb/oracle.hpp"

namespace zagreb::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainRejection = 1,
  kParseError = 2,
  kResourceCap = 3,
};

/// Environment variable holding the default oracle cap.
inline constexpr const char* kCapEnvVar = "ZAGREB_ORACLE_CAP";

struct Report {
  explicit Report(std::string name = {}) : command(std::move(name)) {}

  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> warnings;

  nlohmann::json to_json() const;
};

Report cmd_validate(std::string_view sequence);
Report cmd_construct(std::string_view sequence);
Report cmd_bicyclic_max(std::string_view sequence);
Report cmd_oracle(std::string_view sequence, const OracleOptions& options,
                  bool with_timing);
Report cmd_m2(const SimpleGraph& g, std::string_view source);
Report cmd_improve(const SimpleGraph& g, std::string_view source, int depth);
Report cmd_majorize(std::string_view a, std::string_view b, bool chain);

struct SweepOptions {
  int n = 0;
  int excess = 1;
  bool verify_monotone = false;
  OracleOptions oracle;
  bool with_timing = true;
};

Report cmd_sweep(const SweepOptions& options);

/// Cap from the environment, falling back to kDefaultOracleCap.
int default_cap();

/// Full command-line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zagreb::cli
