#include "hcot/report.hpp"

#include <sstream>

namespace hcot {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::PassRelative: return "PassRelative";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass:
    case Verdict::PassRelative: return 0;
    case Verdict::Fail: return 1;
    default: return 2;
  }
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["verdict"] = to_string(verdict);
  j["scope"] = scope;
  j["summary"] = summary;
  j["certificate"] = certificate;
  j["counterexample"] = counterexample;
  j["seed"] = seed;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << check << ": " << to_string(verdict);
  if (!summary.empty()) os << " - " << summary;
  os << "\n";
  if (!scope.empty()) os << "  scope: " << scope << "\n";
  if (certificate.contains("certified_via"))
    os << "  certified via: " << certificate["certified_via"].get<std::string>() << "\n";
  if (!counterexample.is_null()) os << "  counterexample: " << counterexample.dump() << "\n";
  return os.str();
}

CheckReport CheckReport::pass(std::string check, std::string summary, nlohmann::json cert) {
  CheckReport r;
  r.check = std::move(check);
  r.verdict = Verdict::Pass;
  r.summary = std::move(summary);
  r.certificate = std::move(cert);
  return r;
}

CheckReport CheckReport::fail(std::string check, std::string summary, nlohmann::json cx) {
  CheckReport r;
  r.check = std::move(check);
  r.verdict = Verdict::Fail;
  r.summary = std::move(summary);
  r.counterexample = std::move(cx);
  return r;
}

CheckReport CheckReport::inconclusive(std::string check, std::string summary) {
  CheckReport r;
  r.check = std::move(check);
  r.verdict = Verdict::Inconclusive;
  r.summary = std::move(summary);
  return r;
}

CheckReport CheckReport::not_applicable(std::string check, std::string summary) {
  CheckReport r;
  r.check = std::move(check);
  r.verdict = Verdict::NotApplicable;
  r.summary = std::move(summary);
  return r;
}

CheckReport combine(std::string check, const std::vector<CheckReport>& parts) {
  CheckReport r;
  r.check = std::move(check);
  r.verdict = Verdict::Pass;
  nlohmann::json subs = nlohmann::json::array();
  const CheckReport* worst = nullptr;
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::Fail: return 4;
      case Verdict::Inconclusive: return 3;
      case Verdict::NotApplicable: return 2;
      case Verdict::PassRelative: return 1;
      default: return 0;
    }
  };
  for (const auto& p : parts) {
    subs.push_back(p.to_json());
    if (!worst || rank(p.verdict) > rank(worst->verdict)) worst = &p;
  }
  if (worst) {
    r.verdict = worst->verdict;
    r.counterexample = worst->counterexample;
    r.summary = worst->verdict == Verdict::Pass ? "all parts pass" : worst->summary;
  }
  r.certificate["parts"] = subs;
  return r;
}

}  // namespace hcot
