#include <doctest.h>

#include "exrings/linear_space.hpp"
#include "exrings/matrix.hpp"
#include "exrings/sampling.hpp"

using namespace exrings;

namespace {

const char* kSpecs[] = {"m2-gf2", "m2-gf3", "m2-gf4", "m2-poly2", "m2-tpoly2", "m2-rat2"};
const char* kChar2[] = {"m2-gf2", "m2-gf4", "m2-poly2", "m2-tpoly2", "m2-rat2"};

}  // namespace

TEST_CASE("ring specs round-trip") {
  for (const char* s : kSpecs) CHECK(RingContext::parse(s).to_string() == s);
  CHECK(RingContext::parse("m2-tpoly2").restriction == Restriction::AugmentationIdeal);
  CHECK(RingContext::parse("m2-poly2").central_closure().scalar == FieldTag::Rat2);
  CHECK_THROWS(RingContext::parse("m3-gf2"));
}

TEST_CASE("matrix literals") {
  const RingContext ctx = RingContext::parse("m2-poly2");
  const Matrix a = Matrix::parse(ctx, "[[t, t],[t, t]]");
  CHECK(a.at(0, 1) == Scalar(Poly::t()));
  CHECK(Matrix::parse(ctx, a.to_string()) == a);
  CHECK(Matrix::parse(ctx, "e21") == Matrix::unit(ctx, 2, 1));
  CHECK(Matrix::parse(ctx, "e11") + Matrix::parse(ctx, "e22") == Matrix::identity(ctx));
  CHECK_THROWS_AS(Matrix::parse(ctx, "[[1,0],[0]]"), ParseError);
}

TEST_CASE("Cayley-Hamilton in characteristic 2") {
  Rng rng(17);
  for (const char* s : kChar2) {
    const RingContext ctx = RingContext::parse(s);
    for (int i = 0; i < 100; ++i) {
      const Matrix g = random_matrix(rng, ctx, 3);
      const Matrix rhs = g.trace() * g + Matrix::scalar_matrix(ctx.ambient(), g.det());
      CHECK(g * g == rhs.lift_to(join(g.context(), rhs.context())));
      CHECK((g * g).trace() == g.trace() * g.trace());
    }
  }
}

TEST_CASE("bracket identities") {
  Rng rng(19);
  for (const char* s : kSpecs) {
    const RingContext ctx = RingContext::parse(s);
    for (int i = 0; i < 50; ++i) {
      const Matrix x = random_matrix(rng, ctx, 2);
      const Matrix y = random_matrix(rng, ctx, 2);
      const Matrix z = random_matrix(rng, ctx, 2);
      CHECK((commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y))).is_zero());
      CHECK(commutator(x, y).trace().is_zero());
      CHECK(commutator(x, x).is_zero());
      const std::vector<Matrix> coeffs{x, y};
      CHECK(iterated_bracket(coeffs, z) == commutator(x, commutator(y, z)));
      const std::vector<Matrix> args{x, y, z};
      CHECK(engel(args) == commutator(commutator(x, y), z));
    }
  }
}

TEST_CASE("trace criterion agrees with the span oracle") {
  Rng rng(23);
  for (const char* s : kChar2) {
    const RingContext ctx = RingContext::parse(s);
    for (int i = 0; i < 100; ++i) {
      const Matrix a = i % 2 ? random_trace_zero(rng, ctx, 3) : random_matrix(rng, ctx, 3);
      CHECK(in_commutator_space(a) == in_commutator_span(a));
    }
  }
  CHECK_THROWS_AS(in_commutator_space(Matrix::identity(RingContext::parse("m2-gf3"))), DomainError);
}

TEST_CASE("centrality") {
  const RingContext ctx = RingContext::parse("m2-rat2");
  CHECK(is_central(Matrix::scalar_matrix(ctx, Scalar(Rat::parse("(t)/(t+1)")))));
  CHECK_FALSE(is_central(Matrix::unit(ctx, 1, 1)));
  CHECK(square_central(Matrix::unit(ctx, 1, 2) + Matrix::unit(ctx, 2, 1)));
  CHECK_FALSE(square_central(Matrix::unit(ctx, 1, 1) + Matrix::unit(ctx, 1, 2)));
}

TEST_CASE("augmentation ideal samples") {
  Rng rng(29);
  const RingContext ctx = RingContext::parse("m2-tpoly2");
  for (int i = 0; i < 100; ++i) {
    const Matrix a = random_matrix(rng, ctx, 4);
    for (const auto& e : a.entries()) CHECK((e.is_zero() || !e.poly().coeff(0)));
    const Matrix c = random_noncentral(rng, ctx, i % 2 == 0, 3);
    CHECK_FALSE(is_central(c));
    CHECK(in_commutator_space(c) == (i % 2 == 0));
  }
}

TEST_CASE("C-spans") {
  for (const char* s : kSpecs) {
    const RingContext rc = RingContext::parse(s).central_closure();
    const CSubspace comm = CSubspace::commutators(rc);
    CHECK(comm.dimension() == 3);
    CHECK(CSubspace::whole(rc).dimension() == 4);
    CHECK(CSubspace::center(rc).dimension() == 1);
    CHECK(comm.contains(Matrix::unit(rc, 1, 2)));
    CHECK(comm.contains(Matrix::identity(rc)) == rc.is_exceptional());
    CHECK(bracket_span(CSubspace::whole(rc), CSubspace::whole(rc)) == comm);
  }
}

TEST_CASE("linear solves over GF(2)(t)") {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::vector<Scalar>> a(3, std::vector<Scalar>(3));
    std::vector<Scalar> x(3);
    for (auto& row : a)
      for (auto& v : row) v = random_scalar(rng, FieldTag::Rat2, 2);
    for (auto& v : x) v = random_scalar(rng, FieldTag::Rat2, 2);
    std::vector<Scalar> b(3, Scalar(Rat()));
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) b[static_cast<std::size_t>(r)] = b[static_cast<std::size_t>(r)] + a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
    auto sol = solve_linear(a, b, FieldTag::Rat2);
    REQUIRE(sol);
    for (int r = 0; r < 3; ++r) {
      Scalar acc = Scalar(Rat());
      for (int c = 0; c < 3; ++c) acc = acc + a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * (*sol)[static_cast<std::size_t>(c)];
      CHECK(acc == b[static_cast<std::size_t>(r)]);
    }
  }
  const Scalar one = Scalar::one(FieldTag::GF2);
  const Scalar zero = Scalar::zero(FieldTag::GF2);
  CHECK_FALSE(solve_linear({{one, one}, {one, one}}, {one, zero}, FieldTag::GF2));
}
