#pragma once

// Structured outcome of one checker run on one context.

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace exrings {

using Json = nlohmann::ordered_json;

enum class VerifyMode { ProvedExhaustive, VerifiedInWindow, Randomized };
std::string_view to_string(VerifyMode m);

struct RunConfig {
  int degree = 8;
  std::uint64_t seed = 0;
  int samples = 1000;
};

struct Verdict {
  std::string theorem;
  VerifyMode mode = VerifyMode::Randomized;
  long cases_total = 0;
  long cases_failed = 0;
  Json witnesses = Json::array();
  Json counterexamples = Json::array();
  long elapsed_ms = 0;
  Json config = Json::object();

  bool passed() const { return cases_failed == 0 && cases_total > 0; }
  /// Keys in the fixed order theorem, mode, cases_total, cases_failed,
  /// witnesses, counterexamples, elapsed_ms, config.
  Json to_json() const;
};

}  // namespace exrings
