#pragma once

// Verdicts with structured certificates and counterexamples.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace hcot {

enum class Verdict { Pass, Fail, PassRelative, Inconclusive, NotApplicable };

std::string to_string(Verdict v);
/// Process exit status for a verdict: 0 pass, 1 fail, 2 inconclusive.
int exit_code(Verdict v);

struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::Inconclusive;
  std::string scope;
  nlohmann::json certificate = nlohmann::json::object();
  nlohmann::json counterexample = nullptr;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  /// Short human-readable reason line.
  std::string summary;

  bool passed() const noexcept {
    return verdict == Verdict::Pass || verdict == Verdict::PassRelative;
  }
  nlohmann::json to_json() const;
  std::string to_text() const;

  static CheckReport pass(std::string check, std::string summary,
                          nlohmann::json certificate = nlohmann::json::object());
  static CheckReport fail(std::string check, std::string summary, nlohmann::json counterexample);
  static CheckReport inconclusive(std::string check, std::string summary);
  static CheckReport not_applicable(std::string check, std::string summary);
};

/// Combines sub-reports: any Fail wins, then Inconclusive/NotApplicable, then
/// PassRelative, else Pass. Sub-reports are listed in the certificate.
CheckReport combine(std::string check, const std::vector<CheckReport>& parts);

}  // namespace hcot
