#include "pga/validation.hpp"

#include <algorithm>

namespace pga {

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const CheckResult* ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

void ValidationReport::pass(std::string name, std::size_t cases) {
  checks.push_back(CheckResult{std::move(name), true, cases, std::nullopt});
}

void ValidationReport::fail(std::string name, std::size_t cases, Witness witness) {
  checks.push_back(CheckResult{std::move(name), false, cases, std::move(witness)});
}

void ValidationReport::append(const ValidationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

}  // namespace pga
