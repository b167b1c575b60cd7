#include "checks/checks.hpp"
#include "checks/common.hpp"
#include "exrings/glmap.hpp"

namespace exrings::checks {

namespace {

Scalar poly_scalar(const RingContext& ctx, const Poly& p) { return Scalar(p).lift_to(ctx.scalar); }

Scalar random_coeff(Rng& rng, const RingContext& ctx) { return random_nonzero_scalar(rng, ctx.scalar, 2); }

Operator product(const DerivationExpr& delta, const DerivationExpr& d) { return compose(as_operator(delta), as_operator(d)); }

bool into_centre(const DerivationExpr& d, const std::vector<Matrix>& basis, const RingContext& ctx) {
  return maps_into_center(as_operator(d), basis, ctx);
}

std::optional<Scalar> find_beta(const DerivationExpr& delta, const DerivationExpr& d, const RingContext& ctx) {
  for (std::uint64_t m = 2; m < 64; ++m) {
    Scalar beta = poly_scalar(ctx, Poly::from_bits(m));
    if (!apply_scalar(delta, beta).is_zero() && !apply_scalar(d, beta).is_zero()) return beta;
  }
  return std::nullopt;
}

/// beta, g, mu, h for two X-outer derivations, from their normal forms.
struct OuterData {
  Scalar beta;
  Scalar delta_beta;
  Scalar d_beta;
  Matrix g;
  Scalar mu;
  Matrix h;
};

OuterData outer_data(const DerivationExpr& delta, const DerivationExpr& d, const Scalar& beta, const RingContext& ctx) {
  const RingContext rc = ctx.central_closure();
  auto nd = normal_form(delta, ctx);
  auto nb = normal_form(d, ctx);
  const Scalar bp = beta.lift_to(rc.scalar).derivative();
  Matrix g = (bp * (nd.c * nb.a + nb.c * nd.a)).lift_to(rc);
  Scalar mu = nb.c.derivative();
  Matrix b_prime = apply_derivation(DerivationExpr::dt(), nb.a).lift_to(rc);
  Matrix h = (nb.c * b_prime + nb.a * nb.a + mu * nb.a).lift_to(rc);
  return {beta, apply_scalar(delta, beta).lift_to(rc.scalar), apply_scalar(d, beta).lift_to(rc.scalar), g, mu, h};
}

/// Checks the two operator identities that define g, mu and h.
void verify_outer_identities(Tally& tally, const DerivationExpr& delta, const DerivationExpr& d, const OuterData& o,
                             const RingContext& ctx, const Json& label) {
  Operator lhs1 = [&](const Matrix& x) { return o.delta_beta * apply_derivation(d, x) + o.d_beta * apply_derivation(delta, x); };
  Operator rhs1 = [&](const Matrix& x) { return commutator(o.g, x); };
  tally.expect(operators_equal(lhs1, rhs1, ctx), [&] { return Json{{"identity", "delta(b)d + d(b)delta = ad_g"}, {"case", label}}; });
  Operator lhs2 = compose(as_operator(d), as_operator(d));
  Operator rhs2 = [&](const Matrix& x) { return o.mu * apply_derivation(d, x) + commutator(o.h, x); };
  tally.expect(operators_equal(lhs2, rhs2, ctx), [&] { return Json{{"identity", "d^2 = mu d + ad_h"}, {"case", label}}; });
}

enum class DerivTheorem { Thm29, Thm34, Thm35 };

struct DerivCase {
  DerivationExpr delta;
  DerivationExpr d;
  std::optional<Matrix> w;  ///< abelian L = Cw + C for thm34
};

Json describe(const DerivCase& c) {
  Json j{{"delta", c.delta.to_string()}, {"d", c.d.to_string()}};
  if (c.w) j["w"] = c.w->to_string();
  return j;
}

int part_of(bool delta_inner, bool d_inner) {
  if (d_inner && !delta_inner) return 1;
  if (d_inner && delta_inner) return 2;
  if (!d_inner && delta_inner) return 3;
  return 4;
}

void run_deriv_case(DerivTheorem kind, Tally& tally, const DerivCase& c, const RingContext& ctx, long index,
                    std::map<std::string, long>& seen) {
  const RingContext rc = ctx.central_closure();
  const std::vector<Matrix> comm = CSubspace::commutators(rc).basis();
  const bool delta_inner = is_x_inner(c.delta, ctx).inner;
  const bool d_inner = is_x_inner(c.d, ctx).inner;
  const int part = part_of(delta_inner, d_inner);
  Json label = describe(c);
  label["case"] = index;
  label["part"] = part;

  std::vector<Matrix> lbasis;
  CSubspace lc(rc);
  if (kind == DerivTheorem::Thm29) lbasis = comm;
  if (kind == DerivTheorem::Thm35) lbasis = matrix_units(rc);
  if (kind == DerivTheorem::Thm34) {
    lbasis = {c.w->lift_to(rc), Matrix::identity(rc)};
    lc = CSubspace::span(rc, lbasis);
  }
  const bool lhs = maps_into_center(product(c.delta, c.d), lbasis, ctx);

  bool rhs = false;
  if (kind == DerivTheorem::Thm35) {
    switch (part) {
      case 1: rhs = is_zero_derivation(c.d, ctx); break;
      case 2: rhs = is_zero_derivation(c.d, ctx) || into_centre(c.delta, comm, ctx); break;
      case 3: rhs = is_zero_derivation(c.delta, ctx); break;
      default: {
        auto beta = find_beta(c.delta, c.d, ctx);
        if (!beta) break;
        const Scalar db = apply_scalar(c.delta, *beta);
        const Scalar bd = apply_scalar(c.d, *beta);
        Operator p = [&](const Matrix& x) { return db * apply_derivation(c.d, x); };
        Operator q = [&](const Matrix& x) { return bd * apply_derivation(c.delta, x); };
        Operator zero = [&](const Matrix& x) { return Matrix::zero(x.context()); };
        rhs = operators_equal(p, q, ctx) && operators_equal(compose(as_operator(c.d), as_operator(c.d)), zero, ctx);
        label["beta"] = beta->to_string();
      }
    }
  } else {
    switch (part) {
      case 1: rhs = into_centre(c.d, comm, ctx); break;
      case 2: rhs = into_centre(c.d, comm, ctx) || into_centre(c.delta, comm, ctx); break;
      case 3: rhs = into_centre(c.delta, comm, ctx); break;
      default: {
        auto beta = find_beta(c.delta, c.d, ctx);
        if (!beta) break;
        const OuterData o = outer_data(c.delta, c.d, *beta, ctx);
        verify_outer_identities(tally, c.delta, c.d, o, ctx, label);
        const bool g_tz = in_commutator_space(o.g);
        const Matrix sq = o.g * o.g + (o.delta_beta * o.mu) * o.g;
        label["beta"] = o.beta.to_string();
        label["g"] = o.g.to_string();
        label["mu"] = o.mu.to_string();
        label["h"] = o.h.to_string();
        if (kind == DerivTheorem::Thm29) {
          rhs = in_commutator_space(o.h) && (o.mu.is_zero() == g_tz) && (o.mu.is_zero() || is_central(sq));
        } else {
          bool lin = true;
          for (const auto& z : lbasis) lin = lin && is_central((o.delta_beta * o.mu) * z + commutator(o.g, z));
          const bool d_invariant = lc.contains(apply_derivation(c.d, lbasis[0]).lift_to(rc));
          rhs = in_commutator_space(o.h) && lin && (d_invariant || g_tz || lc.contains(sq));
        }
      }
    }
  }
  ++seen["part" + std::to_string(part) + (lhs ? ":holds" : ":fails")];
  tally.expect(lhs == rhs, [&] {
    Json j = label;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    return j;
  });
}

void require_all_parts(Tally& tally, const std::map<std::string, long>& seen) {
  for (int p = 1; p <= 4; ++p)
    for (const char* side : {":holds", ":fails"}) {
      const std::string key = "part" + std::to_string(p) + side;
      auto it = seen.find(key);
      tally.require_exercised(key, it == seen.end() ? 0 : it->second);
    }
}

/// Random derivation pair for a part; `positive` aims at the predicted-true side.
DerivCase sample_case(DerivTheorem kind, Rng& rng, const RingContext& ctx, int part, bool positive) {
  auto inner_noncentral = [&](bool tz) { return DerivationExpr::inner(random_noncentral(rng, ctx, tz, 2)); };
  auto outer_random = [&] { return make_derivation(random_coeff(rng, ctx), random_matrix(rng, ctx, 2)); };
  auto zero_inner = [&] { return DerivationExpr::inner(Matrix::scalar_matrix(ctx, random_scalar(rng, ctx.scalar, 2))); };
  DerivCase c{DerivationExpr::dt(), DerivationExpr::dt(), std::nullopt};
  const bool t35 = kind == DerivTheorem::Thm35;
  switch (part) {
    case 1:
      c.delta = outer_random();
      c.d = t35 ? (positive ? zero_inner() : inner_noncentral(rng.coin())) : inner_noncentral(positive);
      break;
    case 2:
      if (t35) {
        c.d = positive && rng.coin() ? zero_inner() : inner_noncentral(rng.coin());
        c.delta = inner_noncentral(positive);
      } else if (positive) {
        const bool first = rng.coin();
        c.delta = inner_noncentral(first);
        c.d = inner_noncentral(!first);
      } else {
        c.delta = inner_noncentral(false);
        c.d = inner_noncentral(false);
      }
      break;
    case 3:
      c.d = outer_random();
      c.delta = t35 ? (positive ? zero_inner() : inner_noncentral(rng.coin())) : inner_noncentral(positive);
      break;
    default: {
      const Scalar c1 = random_coeff(rng, ctx);
      if (!positive) {
        c.delta = outer_random();
        c.d = outer_random();
      } else if (t35) {
        const Poly p = random_nonzero_poly(rng, 2);
        const Scalar c2 = poly_scalar(ctx, p * p);
        const Matrix b0 = random_trace_zero(rng, ctx, 0);
        c.delta = make_derivation(c1, (c1 * b0).lift_to(ctx));
        c.d = make_derivation(c2, (c2 * b0).lift_to(ctx));
      } else {
        const Poly p = random_nonzero_poly(rng, 2);
        const Scalar c2 = poly_scalar(ctx, p * p);
        const Matrix a = random_trace_zero(rng, ctx, 2);
        const Matrix b = random_trace_zero(rng, ctx, 2);
        c.delta = make_derivation(c1, a);
        c.d = make_derivation(c2, b);
        Matrix w = (c1 * b + c2 * a).lift_to(ctx);
        if (!is_central(w)) c.w = w;
      }
    }
  }
  if (kind == DerivTheorem::Thm34 && !c.w) {
    if (part == 4 && !positive && rng.coin()) {
      c.w = abelian_family(c.d, 1, ctx).w.front();
    } else {
      c.w = random_noncentral(rng, ctx, true, 2);
    }
  }
  return c;
}

const char* deriv_id(DerivTheorem k) {
  switch (k) {
    case DerivTheorem::Thm29: return "thm29";
    case DerivTheorem::Thm34: return "thm34";
    case DerivTheorem::Thm35: return "thm35";
  }
  return "";
}

Verdict derivation_theorem(DerivTheorem kind, const RingContext& ctx, const RunConfig& cfg) {
  Tally tally(deriv_id(kind), VerifyMode::Randomized, ctx, cfg);
  std::map<std::string, long> seen;
  DerivCase dt_case{DerivationExpr::dt(), DerivationExpr::dt(), std::nullopt};
  if (kind == DerivTheorem::Thm34) dt_case.w = Matrix::unit(ctx, 1, 2) + Matrix::unit(ctx, 2, 1);
  run_deriv_case(kind, tally, dt_case, ctx, -1, seen);
  const int samples = std::max(16, budget(cfg, 1000));
  for (int i = 0; i < samples; ++i) {
    Rng rng = case_rng(cfg, deriv_id(kind), i);
    const int part = 1 + i % 4;
    DerivCase c = sample_case(kind, rng, ctx, part, (i / 4) % 2 == 0);
    run_deriv_case(kind, tally, c, ctx, i, seen);
  }
  tally.config()["effective_samples"] = samples;
  for (const auto& [k, v] : seen) tally.config()["exercised"][k] = v;
  require_all_parts(tally, seen);
  return tally.finish();
}

}  // namespace

Verdict check_thm29(const RingContext& ctx, const RunConfig& cfg) {
  Verdict v = derivation_theorem(DerivTheorem::Thm29, ctx, cfg);
  // delta = d = dt with beta = t: the trivial witnesses and delta d([I, I]) = 0.
  Tally extra("thm29", v.mode, ctx, cfg);
  const RingContext rc = ctx.central_closure();
  const DerivationExpr dt = DerivationExpr::dt();
  const Scalar t = Scalar(Poly::t());
  const OuterData o = outer_data(dt, dt, t, ctx);
  verify_outer_identities(extra, dt, dt, o, ctx, Json("dt,dt"));
  Operator zero = [](const Matrix& x) { return Matrix::zero(x.context()); };
  extra.expect(operators_equal(compose(as_operator(dt), as_operator(dt)), zero, ctx), Json{{"identity", "d^2 = 0"}});
  extra.expect(o.g.is_zero() && o.h.is_zero() && o.mu.is_zero(), Json{{"witness", "g = h = mu = 0"}});
  extra.expect(!apply_scalar(dt, t).is_zero(), Json{{"witness", "d(t) != 0"}});
  extra.expect(in_commutator_space(o.h) && in_commutator_space(o.g), Json{{"witness", "side conditions"}});
  const Operator dd = product(dt, dt);
  for (int i = 0; i < cfg.samples; ++i) {
    Rng rng = case_rng(cfg, "thm29:dtdt", i);
    const Poly g = random_nonzero_poly(rng, 2);
    auto in_ideal = [&] { return (Scalar(g) * random_matrix(rng, ctx, 3)).lift_to(ctx); };
    const Matrix x = in_ideal();
    const Matrix y = in_ideal();
    extra.expect(dd(commutator(x, y)).is_zero(), [&] { return Json{{"x", x.to_string()}, {"y", y.to_string()}, {"case", i}}; });
  }
  Verdict e = extra.finish();
  v.cases_total += e.cases_total;
  v.cases_failed += e.cases_failed;
  for (auto& c : e.counterexamples)
    if (v.counterexamples.size() < kMaxRecords) v.counterexamples.push_back(c);
  v.witnesses.push_back({{"delta", "dt"}, {"d", "dt"}, {"beta", "t"}, {"g", o.g.to_string()}, {"h", o.h.to_string()},
                         {"mu", o.mu.to_string()}, {"ideal_samples", cfg.samples}});
  (void)rc;
  return v;
}

Verdict check_thm34(const RingContext& ctx, const RunConfig& cfg) { return derivation_theorem(DerivTheorem::Thm34, ctx, cfg); }
Verdict check_thm35(const RingContext& ctx, const RunConfig& cfg) { return derivation_theorem(DerivTheorem::Thm35, ctx, cfg); }

Verdict check_lem14(const RingContext& ctx, const RunConfig& cfg) {
  long yes = 0, no = 0;
  const RingContext rc = ctx.central_closure();
  const std::vector<Matrix> comm = CSubspace::commutators(rc).basis();
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("lem14", VerifyMode::ProvedExhaustive, ctx, cfg);
    for (int a = 0; a < fr.size(); ++a) {
      bool lhs = false;
      for (int g = 0; g < fr.size() && !lhs; ++g)
        lhs = fr.trace_zero(g) && fr.is_central(fr.add(g, fr.neg(a)));
      bool rhs = true;
      for (int c : fr.commutators().basis) rhs = rhs && fr.is_central(fr.bracket(a, c));
      ++(lhs ? yes : no);
      tally.expect(lhs == rhs, [&] { return Json{{"d", "inner " + fr.element(a).to_string()}, {"lhs", lhs}}; });
    }
    tally.require_exercised("holds", yes);
    tally.require_exercised("fails", no);
    return tally.finish();
  }
  Tally tally("lem14", VerifyMode::Randomized, ctx, cfg);
  const int samples = budget(cfg, 1000);
  for (int i = 0; i < samples; ++i) {
    Rng rng = case_rng(cfg, "lem14", i);
    const Scalar c = rng.below(3) == 0 ? random_coeff(rng, ctx) : Scalar::zero(ctx.scalar);
    const Matrix a = rng.coin() ? random_trace_zero(rng, ctx, 2) : random_matrix(rng, ctx, 2);
    const DerivationExpr d = make_derivation(c, a);
    const XInnerResult x = is_x_inner(d, ctx);
    const bool lhs = x.inner && in_commutator_space(*x.witness);
    const bool rhs = into_centre(d, comm, ctx);
    ++(lhs ? yes : no);
    tally.expect(lhs == rhs, [&] { return Json{{"d", d.to_string()}, {"lhs", lhs}, {"case", i}}; });
  }
  tally.config()["effective_samples"] = samples;
  tally.require_exercised("holds", yes);
  tally.require_exercised("fails", no);
  return tally.finish();
}

Verdict check_lem18(const RingContext& ctx, const RunConfig& cfg) {
  Tally tally("lem18", VerifyMode::Randomized, ctx, cfg);
  const int samples = budget(cfg, 40);
  const auto units = matrix_units(ctx);
  for (int i = 0; i < samples; ++i) {
    Rng rng = case_rng(cfg, "lem18", i);
    const DerivationExpr d = make_derivation(random_coeff(rng, ctx), random_matrix(rng, ctx, 2));
    const int k = 3 + static_cast<int>(rng.below(4));
    const AbelianFamily fam = abelian_family(d, k, ctx);
    const Json label{{"d", d.to_string()}, {"k", k}, {"case", i}};
    tally.expect(commutator(fam.u, fam.v) == Matrix::identity(ctx), [&] { return Json{{"check", "[u,v] = 1"}, {"at", label}}; });
    tally.expect(!apply_scalar(d, fam.beta).is_zero(), [&] { return Json{{"check", "d(beta) != 0"}, {"at", label}}; });
    for (std::size_t j = 0; j < fam.w.size(); ++j) {
      const Matrix& w = fam.w[j];
      const CSubspace lc = c_span(fam.ideals[j]);
      bool lie = true;
      for (const auto& u : units) lie = lie && lc.contains(commutator(w, u));
      tally.expect(!is_central(w) && in_commutator_space(w) && lie && lc.dimension() == 2,
                   [&] { return Json{{"check", "noncentral abelian Lie ideal"}, {"w", w.to_string()}, {"at", label}}; });
      tally.expect(!lc.contains(apply_derivation(d, w).lift_to(ctx)),
                   [&] { return Json{{"check", "d(L) not in L"}, {"w", w.to_string()}, {"at", label}}; });
      for (std::size_t l = j + 1; l < fam.w.size(); ++l)
        tally.expect(!commutator(w, fam.w[l]).is_zero(),
                     [&] { return Json{{"check", "distinct"}, {"i", j}, {"j", l}, {"at", label}}; });
    }
    if (i == 0) tally.witness({{"d", d.to_string()}, {"u", fam.u.to_string()}, {"v", fam.v.to_string()},
                               {"beta", fam.beta.to_string()}, {"w", mats(fam.w)}});
  }
  bool rejected = false;
  try {
    abelian_family(DerivationExpr::inner(Matrix::unit(ctx, 1, 1)), 2, ctx);
  } catch (const DomainError&) {
    rejected = true;
  }
  tally.expect(rejected, Json{{"check", "X-inner derivation rejected"}});
  tally.config()["effective_samples"] = samples;
  return tally.finish();
}

}  // namespace exrings::checks
