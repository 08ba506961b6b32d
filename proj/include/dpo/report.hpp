#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dpo {

struct Violation {
  std::string item;    // e.g. "edge 3"
  std::string clause;  // e.g. "src out of V"
};

/// Result of a well-formedness check. Violations are data, not errors.
struct ValidationReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
  void add(std::string item, std::string clause) {
    violations.push_back({std::move(item), std::move(clause)});
  }
  [[nodiscard]] bool mentions(std::string_view clause) const;
};

/// Verdict of a decidable diagram check. A false verdict always carries the
/// clause that failed and the first counterexample under ascending-id order.
struct CheckReport {
  bool verdict = true;
  std::optional<std::string> failed_clause;
  std::optional<std::string> counterexample;

  static CheckReport pass() { return {}; }
  static CheckReport fail(std::string clause, std::string witness) {
    return {false, std::move(clause), std::move(witness)};
  }
  explicit operator bool() const noexcept { return verdict; }
};

std::ostream& operator<<(std::ostream& os, const ValidationReport& report);
std::ostream& operator<<(std::ostream& os, const CheckReport& report);

}  // namespace dpo
