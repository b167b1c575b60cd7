#include <doctest.h>

#include "exrings/derivation.hpp"
#include "exrings/glmap.hpp"
#include "exrings/linear_space.hpp"
#include "exrings/sampling.hpp"

using namespace exrings;

namespace {

DerivationExpr random_derivation(Rng& rng, const RingContext& ctx) {
  const Scalar c = random_scalar(rng, ctx.scalar, 2);
  const Matrix a = random_matrix(rng, ctx, 2);
  return DerivationExpr::sum(DerivationExpr::scaled(c, DerivationExpr::dt()), DerivationExpr::inner(a));
}

}  // namespace

TEST_CASE("Leibniz rule") {
  Rng rng(51);
  for (const char* s : {"m2-poly2", "m2-rat2", "m2-tpoly2"}) {
    const RingContext ctx = RingContext::parse(s);
    for (int i = 0; i < 60; ++i) {
      const DerivationExpr d = random_derivation(rng, ctx);
      const Matrix x = random_matrix(rng, ctx, 3);
      const Matrix y = random_matrix(rng, ctx, 3);
      CHECK(apply_derivation(d, x * y) == apply_derivation(d, x) * y + x * apply_derivation(d, y));
      CHECK(apply_derivation(d, x + y) == apply_derivation(d, x) + apply_derivation(d, y));
    }
  }
}

TEST_CASE("the entrywise derivative squares to zero") {
  const RingContext ctx = RingContext::parse("m2-poly2");
  const DerivationExpr dt = DerivationExpr::dt();
  CHECK(apply_scalar(dt, Scalar(Poly::t())).is_one());
  Operator zero = [](const Matrix& x) { return Matrix::zero(x.context()); };
  CHECK(operators_equal(compose(as_operator(dt), as_operator(dt)), zero, ctx));
  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    const Matrix x = random_matrix(rng, ctx, 6);
    CHECK(apply_derivation(dt, apply_derivation(dt, x)).is_zero());
  }
  CHECK_THROWS_AS(apply_derivation(dt, Matrix::identity(RingContext::parse("m2-gf2"))), DomainError);
}

TEST_CASE("mini-language") {
  const RingContext ctx = RingContext::parse("m2-poly2");
  for (const char* text : {"dt", "inner [[0,1],[0,0]]", "sum(dt, inner e11)", "scale (t) dt"}) {
    const DerivationExpr d = DerivationExpr::parse(ctx, text);
    CHECK(derivations_equal(DerivationExpr::parse(ctx, d.to_string()), d, ctx));
  }
  CHECK_THROWS_AS(DerivationExpr::parse(ctx, "integrate"), ParseError);
}

TEST_CASE("normal forms and the X-inner test") {
  const RingContext ctx = RingContext::parse("m2-poly2");
  Rng rng(57);
  for (int i = 0; i < 60; ++i) {
    const DerivationExpr d = random_derivation(rng, ctx);
    const DerivationNormalForm nf = normal_form(d, ctx);
    const XInnerResult x = is_x_inner(d, ctx);
    CHECK(x.inner == nf.c.is_zero());
    const DerivationExpr rebuilt =
        DerivationExpr::sum(DerivationExpr::scaled(nf.c, DerivationExpr::dt()), DerivationExpr::inner(nf.a));
    CHECK(derivations_equal(rebuilt, d, ctx));
    if (x.inner) {
      REQUIRE(x.witness);
      CHECK(derivations_equal(DerivationExpr::inner(*x.witness), d, ctx));
    } else {
      REQUIRE(x.beta);
      CHECK_FALSE(apply_scalar(d, *x.beta).is_zero());
    }
  }
  CHECK(is_zero_derivation(DerivationExpr::inner(Matrix::identity(ctx)), ctx));
  CHECK_FALSE(is_zero_derivation(DerivationExpr::dt(), ctx));
}

TEST_CASE("maps into the centre on [RC, RC]") {
  const RingContext ctx = RingContext::parse("m2-poly2");
  const auto comm = CSubspace::commutators(ctx.central_closure()).basis();
  const Matrix tz = Matrix::parse(ctx, "[[t,1],[t^2,t]]");
  CHECK(maps_into_center(as_operator(DerivationExpr::inner(tz)), comm, ctx));
  CHECK_FALSE(maps_into_center(as_operator(DerivationExpr::inner(Matrix::unit(ctx, 1, 1))), comm, ctx));
}

TEST_CASE("generalized linear maps") {
  const RingContext ctx = RingContext::parse("m2-rat2");
  Rng rng(59);
  auto random_map = [&] {
    std::vector<GLMap::Term> terms;
    const int k = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < k; ++i) terms.emplace_back(random_matrix(rng, ctx, 2), random_matrix(rng, ctx, 2));
    return GLMap(ctx, terms);
  };
  for (int i = 0; i < 100; ++i) {
    const GLMap phi = random_map();
    const GLMap eta = random_map();
    CHECK(compose(phi, eta).star().equals(compose(eta.star(), phi.star())));
    CHECK(phi.star().star().equals(phi));
    const Matrix x = random_matrix(rng, ctx, 2);
    CHECK(compose(phi, eta).apply(x) == phi.apply(eta.apply(x)));
    CHECK((phi + eta).apply(x) == phi.apply(x) + eta.apply(x));
    CHECK(GLMap::trace_map(ctx).apply(x) == Matrix::scalar_matrix(ctx, x.trace()));
    const Matrix a = random_matrix(rng, ctx, 2);
    CHECK(GLMap::inner(a).apply(x) == commutator(a, x));
  }
  CHECK(GLMap::identity(ctx).star().equals(GLMap::identity(ctx)));
}

TEST_CASE("abelian families") {
  const RingContext ctx = RingContext::parse("m2-rat2");
  const DerivationExpr d = DerivationExpr::dt();
  const AbelianFamily fam = abelian_family(d, 4, ctx);
  CHECK(commutator(fam.u, fam.v) == Matrix::identity(ctx));
  REQUIRE(fam.w.size() == 4);
  for (std::size_t i = 0; i < fam.w.size(); ++i) {
    const CSubspace lc = c_span(fam.ideals[i]);
    CHECK(lc.dimension() == 2);
    CHECK(square_central(fam.w[i]));
    CHECK_FALSE(lc.contains(apply_derivation(d, fam.w[i])));
    for (const auto& u : matrix_units(ctx)) CHECK(lc.contains(commutator(fam.w[i], u)));
  }
  CHECK_THROWS_AS(abelian_family(DerivationExpr::inner(Matrix::unit(ctx, 1, 2)), 2, ctx), DomainError);
  CHECK_THROWS_AS(abelian_family(d, 2, RingContext::parse("m2-gf2")), DomainError);
}
