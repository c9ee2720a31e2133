#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pga/group.hpp"

namespace pga {

/// Concrete counterexample attached to a failed check. Only the fields
/// that make sense for the check are set.
struct Witness {
  std::optional<Index> g;
  std::optional<Index> h;
  std::optional<Index> x;
  std::string detail;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;  // how many instances were examined
  std::optional<Witness> witness;
};

/// Pass/fail evidence for a list of named checks.
struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  /// First failing check, or nullptr.
  const CheckResult* first_failure() const;

  void pass(std::string name, std::size_t cases);
  void fail(std::string name, std::size_t cases, Witness witness);
  void append(const ValidationReport& other);
};

}  // namespace pga
