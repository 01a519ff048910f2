#pragma once

#include <json.hpp>

#include <istream>
#include <string>
#include <vector>

namespace dicut {

/// Exit codes: 0 success, 1 error, 2 a checked claim was refuted.
struct RunReport {
  int exit_code = 0;
  nlohmann::ordered_json document;
  std::string help;  // set instead of a document for --help

  std::string text() const;
};

/// Runs one subcommand. `args` excludes the program name; `in` backs the
/// input path "-".
RunReport run(const std::vector<std::string>& args, std::istream& in);

}  // namespace dicut
