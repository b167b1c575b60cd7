#include <doctest.h>

#include <cstdint>
#include <set>

#include "exrings/finite_ring.hpp"
#include "exrings/gf2.hpp"

using namespace exrings;

namespace {

// Number of k-dimensional subspaces of F_q^n.
std::int64_t gaussian_binomial(int n, int k, std::int64_t q) {
  std::int64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    std::int64_t qn = 1, qd = 1;
    for (int j = 0; j < n - i; ++j) qn *= q;
    for (int j = 0; j < i + 1; ++j) qd *= q;
    num *= qn - 1;
    den *= qd - 1;
  }
  return num / den;
}

std::int64_t all_subspaces(int n, std::int64_t q) {
  std::int64_t total = 0;
  for (int k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
  return total;
}

}  // namespace

TEST_CASE("Gaussian binomial oracle") {
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(all_subspaces(4, 2) == 67);
}

TEST_CASE("subspace enumeration matches the Gaussian binomial counts") {
  CHECK(FiniteRing::get(FieldTag::GF2).for_each_subspace([](const FiniteSubspace&) {}) == all_subspaces(4, 2));
  CHECK(FiniteRing::get(FieldTag::GF3).for_each_subspace([](const FiniteSubspace&) {}) == all_subspaces(4, 3));
  const auto& gf4 = FiniteRing::get(FieldTag::GF4);
  std::int64_t sharded = 0;
  for (int w = 0; w < 3; ++w) sharded += gf4.for_each_subspace([](const FiniteSubspace&) {}, w, 3);
  CHECK(sharded == all_subspaces(8, 2));
}

TEST_CASE("subspaces of M2(GF(2)) by brute force over subsets") {
  const auto& fr = FiniteRing::get(FieldTag::GF2);
  std::set<std::uint32_t> closed;
  for (std::uint32_t mask = 1; mask < (1U << 16); ++mask) {
    if (!(mask & 1U)) continue;
    bool ok = true;
    for (int a = 0; a < 16 && ok; ++a)
      for (int b = 0; b < 16 && ok; ++b)
        if ((mask >> a & 1U) && (mask >> b & 1U) && !(mask >> fr.add(a, b) & 1U)) ok = false;
    if (ok) closed.insert(mask);
  }
  std::set<std::uint32_t> enumerated;
  fr.for_each_subspace([&](const FiniteSubspace& s) {
    std::uint32_t m = 0;
    for (int c = 0; c < 16; ++c)
      if (s.contains(c)) m |= 1U << c;
    enumerated.insert(m);
  });
  CHECK(closed.size() == 67);
  CHECK(enumerated == closed);
}

TEST_CASE("finite ring tables") {
  for (FieldTag f : {FieldTag::GF2, FieldTag::GF3, FieldTag::GF4}) {
    const auto& fr = FiniteRing::get(f);
    CHECK(fr.element(fr.identity()) == Matrix::identity(fr.context()));
    for (int a = 0; a < fr.size(); a += 7)
      for (int b = 0; b < fr.size(); b += 5) {
        CHECK(fr.element(fr.mul(a, b)) == fr.element(a) * fr.element(b));
        CHECK(fr.element(fr.add(a, b)) == fr.element(a) + fr.element(b));
        CHECK(fr.code(fr.element(a)) == a);
      }
    CHECK(fr.center().dimension() == fr.dimension() / 4);
    CHECK(fr.commutators().dimension() == 3 * fr.dimension() / 4);
    CHECK(fr.is_lie_ideal(fr.commutators()));
    CHECK(fr.subring_closure(fr.commutators()).dimension() == fr.dimension());
  }
}

TEST_CASE("Lie ideals of M2(GF(2))") {
  const auto& fr = FiniteRing::get(FieldTag::GF2);
  long brute = 0;
  fr.for_each_subspace([&](const FiniteSubspace& s) {
    bool ok = true;
    for (int x : s.basis)
      for (int r = 0; r < fr.size() && ok; ++r) ok = s.contains(fr.bracket(x, r));
    brute += ok;
  });
  CHECK(static_cast<long>(fr.lie_ideals().size()) == brute);
}

TEST_CASE("GF(2) echelon forms are canonical") {
  BitVec a(10), b(10), c(10);
  a.set(1);
  a.set(4);
  b.set(4);
  b.set(7);
  c = a;
  c ^= b;
  Gf2Echelon x(10), y(10);
  x.insert(a);
  x.insert(b);
  y.insert(c);
  y.insert(b);
  CHECK(x == y);
  CHECK(x.contains(c));
  CHECK_FALSE(x.insert(c));
  CHECK(x.rank() == 2);
}
