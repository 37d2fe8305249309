#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ptolemy_lab {

struct SuiteResult {
  std::string name;
  std::size_t diagrams = 0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// The first few failing cases, described.
  std::vector<std::string> counterexamples;

  bool passed() const { return failures == 0; }
};

/// ptolemy-equivalence, hom-criteria, weak-ar, theorem-b, theorem-c,
/// uniqueness.
const std::vector<std::string>& suite_names();

/// PTOLEMY_LAB_MAX_SIZE when set, otherwise the enumeration default.
/// Throws Error(parse_error) on a malformed value.
int verify_bound();

/// Runs one suite over every polygon size 4..max_size (hom-criteria always
/// sweeps at least up to 12). Throws Error(size_limit) outside
/// [4, verify_bound()] and Error(parse_error) for an unknown suite.
SuiteResult run_suite(std::string_view name, int max_size);

/// Runs the named suites in order; an empty list runs nothing.
std::vector<SuiteResult> run_suites(int max_size, const std::vector<std::string>& names);

}  // namespace ptolemy_lab
