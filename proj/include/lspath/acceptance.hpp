#ifndef LSPATH_ACCEPTANCE_HPP
#define LSPATH_ACCEPTANCE_HPP

#include <optional>
#include <ostream>
#include <string>

namespace lsp {

struct AcceptanceConfig {
  bool quick = false;  // restrict the degree sweeps to r <= 2
  // Replaces the computed G(2,4) straightening table in criterion 3; a
  // corrupted fixture then fails by name.
  std::optional<std::string> straightening_table_file;
  int only = 0;  // run a single criterion (1-10); 0 runs all
};

// Runs the acceptance criteria, printing one PASS/FAIL line per criterion
// with its timing; returns the number of failures.
int run_acceptance_suite(const AcceptanceConfig& config, std::ostream& out);

}  // namespace lsp

#endif
