#include "exrings/rng.hpp"

namespace exrings {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

Rng Rng::for_case(std::uint64_t master, std::string_view label, std::uint64_t index) {
  Rng mix(master ^ fnv1a(label));
  std::uint64_t a = mix.next();
  Rng second(a ^ (index * 0xd1342543de82ef95ULL));
  return Rng(second.next());
}

}  // namespace exrings
