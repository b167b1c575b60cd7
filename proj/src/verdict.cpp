#include "exrings/verdict.hpp"

namespace exrings {

std::string_view to_string(VerifyMode m) {
  switch (m) {
    case VerifyMode::ProvedExhaustive: return "ProvedExhaustive";
    case VerifyMode::VerifiedInWindow: return "VerifiedInWindow";
    case VerifyMode::Randomized: return "Randomized";
  }
  return "Randomized";
}

Json Verdict::to_json() const {
  Json j;
  j["theorem"] = theorem;
  j["mode"] = std::string(to_string(mode));
  j["cases_total"] = cases_total;
  j["cases_failed"] = cases_failed;
  j["witnesses"] = witnesses;
  j["counterexamples"] = counterexamples;
  j["elapsed_ms"] = elapsed_ms;
  j["config"] = config;
  return j;
}

}  // namespace exrings
