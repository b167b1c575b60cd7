#include "checks/checks.hpp"
#include "checks/common.hpp"

namespace exrings::checks {

namespace {

std::vector<int> windows(const RunConfig& cfg) { return {cfg.degree, 2 * cfg.degree}; }

AdditiveSubgroup scalar_module(const RingContext& ctx) {
  return AdditiveSubgroup(ctx, {TaggedGenerator::poly_full(Matrix::identity(ctx))});
}

}  // namespace

Verdict check_ex2(const RingContext& ctx, const RunConfig& cfg) {
  Tally tally("ex2", VerifyMode::VerifiedInWindow, ctx, cfg);
  const Scalar t = Scalar(Poly::t());
  const Matrix a = Matrix::parse(ctx, "[[t,t],[t,t]]");
  tally.expect((a * a).is_zero(), Json{{"check", "a^2 = 0"}});
  tally.expect(a.trace().is_zero(), Json{{"check", "tr a = 0"}});
  tally.expect(in_commutator_space(a), Json{{"check", "a in [RC, RC]"}});
  const AdditiveSubgroup comm = commutator_subgroup(ctx);
  tally.expect(c_span(comm).contains(a.lift_to(ctx.central_closure())), Json{{"check", "a in C[R, R]"}});
  for (int n : windows(cfg))
    tally.expect(!contains(comm, a, n), [&] { return Json{{"check", "a not in [R, R]"}, {"window", n}}; });
  // Every commutator of M2(tS) has entries divisible by t^2.
  for (int i = 0; i < cfg.samples; ++i) {
    Rng rng = case_rng(cfg, "ex2", i);
    const Matrix c = commutator(random_matrix(rng, ctx, 3), random_matrix(rng, ctx, 3));
    bool divisible = true;
    for (const auto& e : c.entries()) divisible = divisible && (e.is_zero() || e.poly().low_bits() % 4 == 0);
    tally.expect(divisible, [&] { return Json{{"commutator", c.to_string()}, {"case", i}}; });
  }
  tally.witness({{"a", a.to_string()}, {"a^2", (a * a).to_string()}, {"t", t.to_string()}});
  return tally.finish();
}

Verdict check_ex3(const RingContext& ctx, const RunConfig& cfg) {
  Tally tally("ex3", VerifyMode::VerifiedInWindow, ctx, cfg);
  const Matrix e11 = Matrix::unit(ctx, 1, 1);
  const Matrix e12 = Matrix::unit(ctx, 1, 2);
  const Matrix e21 = Matrix::unit(ctx, 2, 1);
  const AdditiveSubgroup a(ctx, {TaggedGenerator::poly_full(Matrix::identity(ctx)), TaggedGenerator::bits(e12),
                                 TaggedGenerator::bits(e21)});
  const AdditiveSubgroup comm = commutator_subgroup(ctx);
  const AdditiveSubgroup s1 = scalar_module(ctx);
  for (int n : windows(cfg)) {
    const AdditiveSubgroup br = bracket_subgroup(a, comm, n);
    tally.expect(slice(br, n) == slice(s1, n), [&] { return Json{{"check", "[A, [R, R]] = S1"}, {"window", n}}; });
  }
  const CSubspace ac = c_span(a);
  tally.expect(ac == CSubspace::commutators(ctx.central_closure()) && ac.dimension() == 3,
               Json{{"check", "AC = [RC, RC]"}});
  const Scalar t = Scalar(Poly::t());
  const int max_g = std::min(cfg.degree, 5);
  const std::uint64_t count = (std::uint64_t{1} << (max_g + 1)) - 1;
  for (std::uint64_t code = 1; code <= count; ++code) {
    const Poly g = Poly::from_bits(code);
    const Matrix w = (Scalar(g) * t * e12).lift_to(ctx);
    const Matrix x = (Scalar(g) * t * e11).lift_to(ctx);
    const int n = w.degree() + 1;
    const AdditiveSubgroup lhs = bracket_subgroup(principal_ideal(ctx, g), whole_ring(ctx), n);
    tally.expect(commutator(x, e12) == w && contains(lhs, w, n) && !contains(a, w, n),
                 [&] { return Json{{"g", g.to_string()}, {"witness", w.to_string()}}; });
  }
  tally.witness({{"A", a.to_string()}, {"[A,[R,R]]", "S1"}, {"g", "t"}, {"witness", (t * t * e12).to_string()}});
  return tally.finish();
}

Verdict check_ex4(const RingContext& ctx, const RunConfig& cfg) {
  Tally tally("ex4", VerifyMode::VerifiedInWindow, ctx, cfg);
  AdditiveSubgroup l = commutator_subgroup(ctx);
  const Matrix e11 = Matrix::unit(ctx, 1, 1);
  l.add(TaggedGenerator::bits(e11));
  const int n = 2 * cfg.degree;
  std::optional<LieIdealClass> cls;
  try {
    cls = classify_lie_ideal(l, n);
  } catch (const std::exception& e) {
    tally.config()["classification_error"] = e.what();
  }
  tally.expect(cls == LieIdealClass::TypeII, [&] { return Json{{"class", cls ? std::string(to_string(*cls)) : "none"}}; });
  const int max_g = std::min(cfg.degree, 12);
  const std::uint64_t count = (std::uint64_t{1} << (max_g + 1)) - 1;
  const TruncatedSlice window = slice(l, n);
  for (std::uint64_t code = 1; code <= count; ++code) {
    const Poly g = Poly::from_bits(code);
    const bool member = window.contains((Scalar(g) * e11).lift_to(ctx));
    tally.expect(member == g.is_one(), [&] { return Json{{"g", g.to_string()}, {"member", member}}; });
  }
  tally.config()["multipliers_checked"] = count;
  tally.witness({{"L", "[R,R] + Z2 e11"}, {"class", "TypeII"}, {"outside", "t e11"}});
  return tally.finish();
}

Verdict check_remark1(const RingContext& ctx, const RunConfig& cfg) {
  Tally tally("remark1", VerifyMode::VerifiedInWindow, ctx, cfg);
  AdditiveSubgroup l = commutator_subgroup(ctx);
  const Matrix e11 = Matrix::unit(ctx, 1, 1);
  const Matrix e12 = Matrix::unit(ctx, 1, 2);
  l.add(TaggedGenerator::bits(e11));
  const AdditiveSubgroup comm = commutator_subgroup(ctx);
  const DerivationExpr d = DerivationExpr::dt();
  tally.expect(apply_derivation(d, e11).is_zero(), Json{{"check", "d(e11) = 0"}});
  for (int n : windows(cfg)) {
    for (const Matrix& x : slice(l, n).basis()) {
      const Matrix dx = apply_derivation(d, x);
      tally.expect(contains(comm, dx, n) && contains(l, dx, n),
                   [&] { return Json{{"check", "d(L) in [R, R]"}, {"x", x.to_string()}, {"window", n}}; });
    }
  }
  const int max_b = std::min(cfg.degree, 8);
  const std::uint64_t count = (std::uint64_t{1} << (max_b + 1)) - 1;
  long separating = 0;
  for (std::uint64_t code = 1; code <= count; ++code) {
    const Scalar beta = Scalar(Poly::from_bits(code));
    const Matrix inner = commutator(apply_derivation(d, (beta * e11).lift_to(ctx)), commutator(e11, e12));
    const Matrix lhs = commutator(inner, e11);
    const Scalar db = apply_scalar(d, beta);
    tally.expect(lhs == (db * e12).lift_to(ctx), [&] { return Json{{"beta", beta.to_string()}, {"value", lhs.to_string()}}; });
    if (!db.is_zero()) ++separating;
  }
  tally.require_exercised("d(beta) != 0", separating);
  tally.witness({{"d", "dt"}, {"beta", "t"}, {"value", e12.to_string()}});
  return tally.finish();
}

}  // namespace exrings::checks
