#pragma once

#include <filesystem>
#include <string>

namespace flagrep::tools {

struct ReproResult {
  bool match = false;
  std::string report;  // JSON
};

// target: fig1, fig2, fig7 or example-flag-tables
ReproResult repro(const std::string& target, const std::filesystem::path& expected_dir);

}  // namespace flagrep::tools
