#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sandwich {

enum class Status { pass, fail, skipped };

std::string_view to_string(Status s);

/// Outcome of one named check. A failing check carries a witness.
struct CheckResult {
  std::string name;
  Status status = Status::skipped;
  std::string witness;

  [[nodiscard]] bool passed() const noexcept { return status == Status::pass; }
  [[nodiscard]] bool failed() const noexcept { return status == Status::fail; }

  static CheckResult pass(std::string name) { return {std::move(name), Status::pass, {}}; }
  static CheckResult fail(std::string name, std::string witness) {
    return {std::move(name), Status::fail, std::move(witness)};
  }
  static CheckResult skip(std::string name, std::string why = {}) {
    return {std::move(name), Status::skipped, std::move(why)};
  }
  static CheckResult from(std::string name, bool ok, std::string witness) {
    return ok ? pass(std::move(name)) : fail(std::move(name), std::move(witness));
  }
};

/// Ordered collection of checks; passes iff no check failed.
struct Report {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool ok() const noexcept {
    for (const auto& c : checks)
      if (c.failed()) return false;
    return true;
  }
  [[nodiscard]] const CheckResult* find(std::string_view name) const noexcept {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  /// First failing check, or nullptr.
  [[nodiscard]] const CheckResult* first_failure() const noexcept {
    for (const auto& c : checks)
      if (c.failed()) return &c;
    return nullptr;
  }
  void add(CheckResult c) { checks.push_back(std::move(c)); }
};

}  // namespace sandwich
