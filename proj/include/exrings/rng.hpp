#pragma once

// Deterministic randomness. Every case draws from its own stream derived from
// (master seed, label, case index), so results do not depend on scheduling.

#include <cstdint>
#include <string_view>

namespace exrings {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Stream for one case of one labelled experiment.
  static Rng for_case(std::uint64_t master, std::string_view label, std::uint64_t index);

  std::uint64_t next();
  /// Uniform in [0, bound); bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

std::uint64_t fnv1a(std::string_view text);

}  // namespace exrings
