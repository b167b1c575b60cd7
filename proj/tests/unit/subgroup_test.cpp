#include <doctest.h>

#include "exrings/linear_space.hpp"
#include "exrings/sampling.hpp"
#include "exrings/subgroup.hpp"

using namespace exrings;

namespace {

RingContext poly() { return RingContext::parse("m2-poly2"); }

AdditiveSubgroup type_two(const RingContext& ctx) {
  AdditiveSubgroup l = commutator_subgroup(ctx);
  l.add(TaggedGenerator::bits(Matrix::unit(ctx, 1, 1)));
  return l;
}

}  // namespace

TEST_CASE("generator files round-trip") {
  const RingContext ctx = poly();
  const auto a = AdditiveSubgroup::parse(ctx, "# comment\npoly-full [[1,0],[0,1]]\n\nbits [[0,1],[0,0]]\npoly-ideal t^2 [[0,0],[1,0]]\n");
  REQUIRE(a.generators().size() == 3);
  CHECK(a.generators()[2].domain == MultiplierDomain::PolyIdeal);
  CHECK(a.generators()[2].base() == Matrix::parse(ctx, "[[0,0],[t^2,0]]"));
  CHECK(AdditiveSubgroup::parse(ctx, a.to_string()).generators().size() == 3);
  CHECK_THROWS_AS(AdditiveSubgroup::parse(ctx, "sometimes [[1,0],[0,1]]"), ParseError);
  CHECK(AdditiveSubgroup::parse(ctx, "bits e11   # trailing\n").generators().size() == 1);
}

TEST_CASE("slice dimensions of cyclic modules") {
  const RingContext ctx = poly();
  Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    const Matrix m = random_noncentral(rng, ctx, false, 3);
    const int n = 12;
    AdditiveSubgroup a(ctx, {TaggedGenerator::poly_full(m)});
    // S m in degree < n has dimension n - deg m.
    CHECK(slice(a, n).dimension() == n - m.degree());
  }
  CHECK(slice(whole_ring(ctx), 5).dimension() == 20);
  CHECK(slice(commutator_subgroup(ctx), 5).dimension() == 15);
}

TEST_CASE("membership in principal ideals") {
  const RingContext ctx = poly();
  const AdditiveSubgroup i = principal_ideal(ctx, Poly::parse("t+1"));
  CHECK(contains(i, Matrix::parse(ctx, "[[t+1,0],[t^2+1,0]]"), 8));
  CHECK_FALSE(contains(i, Matrix::parse(ctx, "[[t,0],[0,0]]"), 8));
  CHECK_THROWS_AS(contains(i, Matrix::parse(ctx, "[[t^9,0],[0,0]]"), 8), DomainError);
}

TEST_CASE("bracket of S1 + Z2 e12 + Z2 e21 with [R,R]") {
  const RingContext ctx = poly();
  const AdditiveSubgroup a(ctx, {TaggedGenerator::poly_full(Matrix::identity(ctx)),
                                 TaggedGenerator::bits(Matrix::unit(ctx, 1, 2)),
                                 TaggedGenerator::bits(Matrix::unit(ctx, 2, 1))});
  const AdditiveSubgroup s1(ctx, {TaggedGenerator::poly_full(Matrix::identity(ctx))});
  for (int n : {8, 16}) CHECK(slice(bracket_subgroup(a, commutator_subgroup(ctx), n), n) == slice(s1, n));
  CHECK(c_span(a) == CSubspace::commutators(ctx.central_closure()));
  CHECK_FALSE(contains(a, Matrix::parse(ctx, "[[0,t],[0,0]]"), 8));
}

TEST_CASE("classification") {
  const RingContext ctx = poly();
  CHECK(classify_lie_ideal(type_two(ctx), 12) == LieIdealClass::TypeII);
  CHECK(classify_lie_ideal(AdditiveSubgroup(ctx, {TaggedGenerator::poly_full(Matrix::identity(ctx))}), 8) ==
        LieIdealClass::Central);
  const AdditiveSubgroup e12(ctx, {TaggedGenerator::bits(Matrix::unit(ctx, 1, 2))});
  const LieIdealCheck chk = check_lie_ideal(e12, 8);
  CHECK_FALSE(chk.is_lie_ideal);
  REQUIRE(chk.witness);
  CHECK_FALSE(contains(e12, commutator(chk.witness->first, chk.witness->second), 8));
  CHECK_THROWS_AS(classify_lie_ideal(e12, 8), ClassificationError);
  const AdditiveSubgroup abelian(ctx, {TaggedGenerator::poly_full(Matrix::identity(ctx)),
                                       TaggedGenerator::poly_full(Matrix::unit(ctx, 1, 2) + Matrix::unit(ctx, 2, 1))});
  CHECK(classify_lie_ideal(abelian, 8) == LieIdealClass::AbelianNoncentral);
}

TEST_CASE("g e11 lies in [R,R] + Z2 e11 only for g = 1") {
  const RingContext ctx = poly();
  const TruncatedSlice s = slice(type_two(ctx), 16);
  for (std::uint64_t code = 1; code < 512; ++code) {
    const Poly g = Poly::from_bits(code);
    CHECK(s.contains(Scalar(g) * Matrix::unit(ctx, 1, 1)) == g.is_one());
  }
}

TEST_CASE("Lie ideal closure") {
  const RingContext ctx = poly();
  Rng rng(43);
  for (int i = 0; i < 10; ++i) {
    const Matrix seed = random_noncentral(rng, ctx, i % 2 == 0, 2);
    const AdditiveSubgroup l = lie_ideal_closure(ctx, {seed});
    CHECK(contains(l, seed, 8));
    CHECK(is_lie_ideal(l, 8));
  }
}

TEST_CASE("Engel subgroups of [R,R] are central from the second step") {
  const RingContext ctx = poly();
  const AdditiveSubgroup e2 = engel_subgroup(commutator_subgroup(ctx), 2, 8);
  CHECK(e2.is_central());
  CHECK(slice(bracket_subgroup(e2, e2, 8), 8).dimension() == 0);
}

TEST_CASE("finite contexts ignore the window") {
  const RingContext ctx = RingContext::parse("m2-gf4");
  CHECK(slice(whole_ring(ctx), 1).dimension() == 8);
  CHECK(slice(commutator_subgroup(ctx), 3).dimension() == 6);
}
