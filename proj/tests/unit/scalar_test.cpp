#include <doctest.h>

#include <cstdint>

#include "exrings/rng.hpp"
#include "exrings/sampling.hpp"
#include "exrings/scalar.hpp"

using namespace exrings;

namespace {

// Carry-less product of two small bit masks.
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (int i = 0; i < 32; ++i)
    if ((b >> i) & 1U) r ^= a << i;
  return r;
}

// GF(4) product by reduction modulo u^2 + u + 1.
std::uint8_t gf4_oracle(std::uint8_t a, std::uint8_t b) {
  std::uint64_t p = clmul(a, b);
  if (p & 4U) p ^= 7U;
  return static_cast<std::uint8_t>(p);
}

}  // namespace

TEST_CASE("gcd of t^2+t and t^2+1 is t+1") {
  CHECK(Poly::gcd(Poly::parse("t^2+t"), Poly::parse("t^2+1")) == Poly::parse("t+1"));
  CHECK(Poly::gcd(Poly::parse("t^3+t+1"), Poly::parse("t^2+t+1")).is_one());
  CHECK(Poly::gcd(Poly::zero(), Poly::parse("t^4")) == Poly::parse("t^4"));
}

TEST_CASE("polynomial product agrees with carry-less multiplication") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t a = rng.next() & 0xffffffffU;
    const std::uint64_t b = rng.next() & 0x7fffffffU;
    CHECK((Poly::from_bits(a) * Poly::from_bits(b)).low_bits() == clmul(a, b));
  }
}

TEST_CASE("multi-word polynomial arithmetic") {
  const Poly a = Poly::monomial(70) + Poly::monomial(3) + Poly::one();
  const Poly b = Poly::monomial(65) + Poly::t();
  const Poly p = a * b;
  CHECK(p.degree() == 135);
  auto [q, r] = p.divmod(b);
  CHECK(q == a);
  CHECK(r.is_zero());
  CHECK(p.exact_div(a) == b);
  CHECK_THROWS_AS(p.exact_div(Poly::parse("t^2+t+1")), DomainError);
}

TEST_CASE("division with remainder") {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const Poly a = random_poly(rng, 20);
    const Poly g = random_nonzero_poly(rng, 8);
    auto [q, r] = a.divmod(g);
    CHECK(q * g + r == a);
    CHECK(r.degree() < g.degree());
  }
}

TEST_CASE("formal derivative") {
  CHECK(Poly::parse("t^3+t^2+t").derivative() == Poly::parse("t^2+1"));
  CHECK(Poly::t().derivative().is_one());
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const Poly f = random_poly(rng, 12);
    const Poly g = random_poly(rng, 12);
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
    CHECK((f * f).derivative().is_zero());
    for (int k = 0; k <= f.degree(); ++k)
      if (k % 2 == 0 && k > 0) CHECK_FALSE(f.derivative().coeff(k - 1));
  }
}

TEST_CASE("rational functions stay in lowest terms") {
  const Rat r(Poly::parse("t^2+1"), Poly::parse("t+1"));
  CHECK(r.is_polynomial());
  CHECK(r.num() == Poly::parse("t+1"));
  CHECK(Rat::parse("(t^2+1)/(t)").den() == Poly::t());
  CHECK_THROWS_AS(Rat(Poly::one(), Poly::zero()), DomainError);
  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const Scalar a = random_scalar(rng, FieldTag::Rat2, 4);
    const Scalar b = random_nonzero_scalar(rng, FieldTag::Rat2, 4);
    const Scalar q = a / b;
    const Rat& x = q.rat();
    CHECK(Poly::gcd(x.num(), x.den()).is_one());
    CHECK((a / b) * b == a);
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
  }
}

TEST_CASE("parse and print round-trip") {
  Rng rng(21);
  for (FieldTag tag : {FieldTag::GF2, FieldTag::GF3, FieldTag::GF4, FieldTag::Poly2, FieldTag::Rat2}) {
    for (int i = 0; i < 200; ++i) {
      const Scalar x = random_scalar(rng, tag, 6);
      CHECK(Scalar::parse(tag, x.to_string()) == x);
    }
  }
  CHECK(Poly::parse("t^3+t+1").to_string() == "t^3+t+1");
  CHECK(Poly::parse(Poly::monomial(130).to_string()) == Poly::monomial(130));
  CHECK_THROWS_AS(Poly::parse("t^^2"), ParseError);
}

TEST_CASE("GF(4) multiplication table") {
  for (std::uint8_t a = 0; a < 4; ++a)
    for (std::uint8_t b = 0; b < 4; ++b) CHECK(gf4_mul(a, b) == gf4_oracle(a, b));
  for (std::uint64_t a = 1; a < 4; ++a) {
    const Scalar x = Scalar::from_code(FieldTag::GF4, a);
    CHECK((x * x.inverse()).is_one());
  }
}

TEST_CASE("prime fields") {
  for (std::uint64_t a = 1; a < 3; ++a) {
    const Scalar x = Scalar::from_code(FieldTag::GF3, a);
    CHECK((x * x.inverse()).is_one());
    CHECK((x + x + x).is_zero());
  }
  CHECK(characteristic(FieldTag::GF3) == 3);
  CHECK(characteristic(FieldTag::Rat2) == 2);
  CHECK_THROWS_AS(Scalar::zero(FieldTag::GF2).inverse(), DomainError);
  CHECK_THROWS_AS(Scalar::one(FieldTag::GF4).derivative(), DomainError);
}

TEST_CASE("polynomials meet rationals in the fraction field") {
  const Scalar p(Poly::parse("t+1"));
  const Scalar r(Rat::parse("(1)/(t)"));
  CHECK((p * r).tag() == FieldTag::Rat2);
  CHECK(join_levels(FieldTag::Poly2, FieldTag::Rat2) == FieldTag::Rat2);
  CHECK_THROWS_AS(join_levels(FieldTag::GF2, FieldTag::GF4), DomainError);
}
