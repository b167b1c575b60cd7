#include "checks/checks.hpp"
#include "checks/common.hpp"

namespace exrings::checks {

namespace {

Json fsub(const FiniteRing& fr, const FiniteSubspace& s) {
  Json out = Json::array();
  for (int b : s.basis) out.push_back(fr.element(b).to_string());
  return out;
}

Json gens(const AdditiveSubgroup& a) {
  Json out = Json::array();
  for (const auto& g : a.generators()) out.push_back(g.to_string());
  return out;
}

bool in_commutators(const CSubspace& s) { return CSubspace::commutators(s.context()).contains(s); }

bool all_zero(const AdditiveSubgroup& a) {
  for (const auto& g : a.generators())
    if (!g.base().is_zero()) return false;
  return true;
}

/// A uniformly random element of a slice.
Matrix random_slice_element(Rng& rng, const TruncatedSlice& s) {
  Matrix acc = Matrix::zero(s.context());
  for (const auto& b : s.basis())
    if (rng.coin()) acc = (acc + b).lift_to(s.context());
  return acc;
}

std::optional<Poly> escalate(const std::function<std::optional<Poly>(int)>& search, int n, int* used) {
  for (int w : {n, 2 * n, 4 * n}) {
    if (auto p = search(w)) {
      *used = w;
      return p;
    }
  }
  *used = 4 * n;
  return std::nullopt;
}

}  // namespace

Verdict check_thm16(const RingContext& ctx, const RunConfig& cfg) {
  const auto& fr = finite(ctx);
  Tally tally("thm16", VerifyMode::ProvedExhaustive, ctx, cfg);
  const auto& z = fr.center();
  const auto& comm = fr.commutators();
  const auto& whole = fr.whole();
  const auto scalars = scalar_codes(fr);
  long invariant = 0, not_invariant = 0, zsubspaces = 0, subrings = 0;
  bool example = false;
  const long count = fr.for_each_subspace([&](const FiniteSubspace& a) {
    if (z.contains(a)) return;
    const bool lhs = a.contains(fr.bracket_span(a, comm));
    const bool rhs = (a.contains(z) && comm.contains(a)) || a.contains(comm);
    ++(lhs ? invariant : not_invariant);
    tally.expect(lhs == rhs, [&] {
      return Json{{"part", "subgroup"}, {"A", fsub(fr, a)}, {"invariant", lhs}, {"predicted", rhs}};
    });
    if (!example && a.contains(z) && comm.contains(a) && a.dimension() == z.dimension() + 1) {
      example = true;
      tally.witness({{"A", fsub(fr, a)}, {"shape", "Z2a+Z(R), a trace-zero"}, {"invariant", lhs}});
    }
    bool zsub = true;
    for (int b : a.basis)
      for (int s : scalars) zsub = zsub && a.contains(fr.mul(s, b));
    if (zsub) {
      ++zsubspaces;
      const bool listed = is_fa_plus_f(fr, a, false, true) || a.members == comm.members || a.members == whole.members;
      tally.expect(lhs == listed, [&] {
        return Json{{"part", "centre-subspace"}, {"A", fsub(fr, a)}, {"invariant", lhs}, {"listed", listed}};
      });
      if (lhs) tally.expect(fr.is_lie_ideal(a), [&] { return Json{{"part", "centre-subspace lie ideal"}, {"A", fsub(fr, a)}}; });
    }
    if (fr.is_subring(a)) {
      ++subrings;
      const bool shaped = is_fa_plus_f(fr, a, true, false);
      const bool between = a.contains(z) && comm.contains(a);
      tally.expect(between == shaped, [&] {
        return Json{{"part", "subring between"}, {"A", fsub(fr, a)}, {"between", between}, {"shaped", shaped}};
      });
      const bool predicted = a.members == whole.members || shaped;
      tally.expect(lhs == predicted, [&] {
        return Json{{"part", "subring"}, {"A", fsub(fr, a)}, {"invariant", lhs}, {"predicted", predicted}};
      });
    }
  });
  tally.config()["subspaces"] = count;
  tally.config()["centre_subspaces"] = zsubspaces;
  tally.config()["subrings"] = subrings;
  tally.require_exercised("invariant", invariant);
  tally.require_exercised("not_invariant", not_invariant);
  tally.witness({{"subspaces_scanned", count}});
  return tally.finish();
}

namespace {

void thm19_case(Tally& tally, const std::string& label, const AdditiveSubgroup& a, const AdditiveSubgroup& l,
                long& inconclusive, long& ca_branch, long& comm_branch) {
  const int n = tally.run_config().degree;
  const RingContext rc = a.context().central_closure();
  const bool hyp = slice(a, n).contains(slice(bracket_subgroup(a, l, n), n));
  tally.expect(hyp, [&] { return Json{{"case", label}, {"hypothesis", "[A,L] in A"}, {"A", gens(a)}}; });
  int used = 0;
  auto beta = escalate([&](int w) { return find_central_multiplier(a, w); }, n, &used);
  if (beta) {
    tally.expect(true, Json{});
    tally.witness({{"case", label}, {"beta", beta->to_string()}, {"window", used}});
  } else {
    ++inconclusive;
    tally.witness({{"case", label}, {"beta", "inconclusive"}, {"window", used}, {"A", gens(a)}});
  }
  const CSubspace cs = c_span(a);
  const bool ca = is_ca_plus_c(cs);
  const bool contains_comm = cs.contains(CSubspace::commutators(rc));
  ca_branch += ca;
  comm_branch += contains_comm;
  tally.expect(ca || contains_comm, [&] {
    return Json{{"case", label}, {"A", gens(a)}, {"c_span", mats(cs.basis())}};
  });
}

}  // namespace

Verdict check_thm19(const RingContext& ctx, const RunConfig& cfg) {
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("thm19", VerifyMode::ProvedExhaustive, ctx, cfg);
    std::vector<FiniteSubspace> nonab;
    for (const auto& l : noncentral_lie_ideals(fr))
      if (!l.abelian) nonab.push_back(l.space);
    const CSubspace comm = CSubspace::commutators(ctx);
    long hyp = 0, ca_branch = 0, comm_branch = 0;
    const long count = fr.for_each_subspace([&](const FiniteSubspace& a) {
      if (fr.center().contains(a)) return;
      for (const auto& l : nonab) {
        if (!a.contains(fr.bracket_span(a, l))) continue;
        ++hyp;
        tally.expect(a.contains(fr.center()), [&] { return Json{{"part", "i"}, {"A", fsub(fr, a)}, {"L", fsub(fr, l)}}; });
        const CSubspace cs = finite_c_span(fr, a);
        const bool ca = is_ca_plus_c(cs);
        const bool big = cs.contains(comm);
        ca_branch += ca;
        comm_branch += big;
        tally.expect(ca || big, [&] { return Json{{"part", "ii"}, {"A", fsub(fr, a)}, {"L", fsub(fr, l)}}; });
      }
    });
    tally.config()["subspaces"] = count;
    tally.config()["nonabelian_lie_ideals"] = nonab.size();
    tally.require_exercised("hypothesis", hyp);
    tally.require_exercised("Ca+C", ca_branch);
    tally.require_exercised("contains [RC,RC]", comm_branch);
    return tally.finish();
  }

  Tally tally("thm19", VerifyMode::VerifiedInWindow, ctx, cfg);
  const int n = cfg.degree;
  long inconclusive = 0, ca_branch = 0, comm_branch = 0, skipped_central = 0, unconverged = 0;
  std::vector<NamedSubgroup> nonab;
  for (auto& e : poly_lie_ideal_catalog(ctx)) {
    auto cls = classify_lie_ideal(e.group, n);
    if (cls == LieIdealClass::TypeI || cls == LieIdealClass::TypeII) nonab.push_back(std::move(e));
  }
  const AdditiveSubgroup comm = commutator_subgroup(ctx);
  {
    auto res = invariant_closure(ctx, {Matrix::unit(ctx, 1, 2)}, comm, n);
    thm19_case(tally, "seed e12, L=[R,R]", res.subgroup, comm, inconclusive, ca_branch, comm_branch);
    tally.witness({{"case", "seed e12, L=[R,R]"},
                   {"contains [RC,RC]", c_span(res.subgroup).contains(CSubspace::commutators(ctx.central_closure()))}});
  }
  {
    AdditiveSubgroup ex3(ctx, {TaggedGenerator::poly_full(Matrix::identity(ctx)), TaggedGenerator::bits(Matrix::unit(ctx, 1, 2)),
                               TaggedGenerator::bits(Matrix::unit(ctx, 2, 1))});
    thm19_case(tally, "A=S1+Z2e12+Z2e21, L=[R,R]", ex3, comm, inconclusive, ca_branch, comm_branch);
    auto beta = find_central_multiplier(ex3, n);
    tally.expect(beta && *beta == Poly::one(), [&] { return Json{{"case", "A=S1+Z2e12+Z2e21"}, {"expected_beta", "1"}}; });
    tally.expect(c_span(ex3) == CSubspace::commutators(ctx.central_closure()),
                 Json{{"case", "A=S1+Z2e12+Z2e21"}, {"expected", "AC = [RC,RC]"}});
  }
  {
    const Matrix one = Matrix::identity(ctx);
    const Matrix s = Matrix::unit(ctx, 1, 2) + Matrix::unit(ctx, 2, 1);
    AdditiveSubgroup a(ctx, {TaggedGenerator::poly_full(one), TaggedGenerator::poly_full(s)});
    thm19_case(tally, "A=S1+S(e12+e21), L=[R,R]", a, comm, inconclusive, ca_branch, comm_branch);
  }
  const int seeds = budget(cfg, 60);
  for (int i = 0; i < seeds; ++i) {
    Rng rng = case_rng(cfg, "thm19", i);
    const auto& l = nonab[static_cast<std::size_t>(i) % nonab.size()];
    std::vector<Matrix> s;
    const int k = 1 + static_cast<int>(rng.below(2));
    for (int j = 0; j < k; ++j) s.push_back(random_matrix(rng, ctx, 2));
    auto res = invariant_closure(ctx, s, l.group, n);
    if (!res.converged) {
      ++unconverged;
      continue;
    }
    if (res.subgroup.is_central()) {
      ++skipped_central;
      continue;
    }
    thm19_case(tally, "seeds " + mats(s).dump() + ", L=" + l.name, res.subgroup, l.group, inconclusive, ca_branch,
               comm_branch);
  }
  tally.config()["effective_samples"] = seeds;
  tally.config()["inconclusive"] = inconclusive;
  tally.config()["skipped_central"] = skipped_central;
  tally.config()["unconverged"] = unconverged;
  tally.require_exercised("Ca+C", ca_branch);
  tally.require_exercised("contains [RC,RC]", comm_branch);
  return tally.finish();
}

Verdict check_thm23(const RingContext& ctx, const RunConfig& cfg) {
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("thm23", VerifyMode::ProvedExhaustive, ctx, cfg);
    long ideal_branch = 0, ca_branch = 0;
    for (const auto& l : noncentral_lie_ideals(fr)) {
      const bool has = l.space.contains(fr.commutators());
      const bool ca = is_ca_plus_c(finite_c_span(fr, l.space));
      ideal_branch += has;
      ca_branch += ca;
      tally.expect(has || ca, [&] { return Json{{"A", fsub(fr, l.space)}}; });
    }
    tally.require_exercised("contains proper Lie ideal", ideal_branch);
    tally.require_exercised("Ca+C", ca_branch);
    return tally.finish();
  }

  Tally tally("thm23", VerifyMode::VerifiedInWindow, ctx, cfg);
  const int n = cfg.degree;
  const std::vector<Poly> ideal_gens{Poly::one(), Poly::t(), Poly::from_bits(3), Poly::monomial(2)};
  long ideal_branch = 0, ca_branch = 0, skipped = 0;
  auto run = [&](const std::string& label, const std::vector<Matrix>& seeds, const Poly& g) {
    AdditiveSubgroup ideal = principal_ideal(ctx, g);
    auto res = invariant_closure(ctx, seeds, ideal, n);
    if (!res.converged || res.subgroup.is_central()) {
      ++skipped;
      return;
    }
    const AdditiveSubgroup& a = res.subgroup;
    tally.expect(slice(a, n).contains(slice(bracket_subgroup(a, ideal, n), n)),
                 [&] { return Json{{"case", label}, {"hypothesis", "[A,I] in A"}}; });
    int used = 0;
    auto h = escalate([&](int w) { return find_commutator_multiple(a, w); }, n, &used);
    const bool ca = is_ca_plus_c(c_span(a));
    ideal_branch += h.has_value();
    ca_branch += ca;
    if (h) tally.witness({{"case", label}, {"h", h->to_string()}, {"window", used}});
    tally.expect(h.has_value() || ca, [&] { return Json{{"case", label}, {"A", gens(a)}, {"window", used}}; });
  };
  const Matrix e12 = Matrix::unit(ctx, 1, 2);
  const Matrix e21 = Matrix::unit(ctx, 2, 1);
  run("seed e12+e21, I=R", {e12 + e21}, Poly::one());
  run("seed e11, I=M2(tS)", {Matrix::unit(ctx, 1, 1)}, Poly::t());
  const int samples = budget(cfg, 40);
  for (int i = 0; i < samples; ++i) {
    Rng rng = case_rng(cfg, "thm23", i);
    const Poly& g = ideal_gens[rng.below(ideal_gens.size())];
    std::vector<Matrix> seeds{random_noncentral(rng, ctx, rng.coin(), 2)};
    run("seed " + seeds[0].to_string() + ", I=M2((" + g.to_string() + ")S)", seeds, g);
  }
  tally.config()["effective_samples"] = samples;
  tally.config()["skipped"] = skipped;
  tally.require_exercised("contains proper Lie ideal", ideal_branch);
  tally.require_exercised("Ca+C", ca_branch);
  return tally.finish();
}

Verdict check_thm24(const RingContext& ctx, const RunConfig& cfg) {
  const auto& fr = finite(ctx);
  Tally tally("thm24", VerifyMode::ProvedExhaustive, ctx, cfg);
  const FiniteSubspace cl = fr.subring_closure(fr.commutators());
  const long size = static_cast<long>(cl.members.count());
  tally.expect(cl.members == fr.whole().members, [&] { return Json{{"closure_size", size}, {"ring_size", fr.size()}}; });
  tally.witness({{"closure_size", size}, {"commutator_size", static_cast<long>(fr.commutators().members.count())}});
  return tally.finish();
}

Verdict check_lem5(const RingContext& ctx, const RunConfig& cfg) {
  const auto& fr = finite(ctx);
  Tally tally("lem5", VerifyMode::ProvedExhaustive, ctx, cfg);
  long hyp = 0, ideal_branch = 0, ca_branch = 0;
  fr.for_each_subspace([&](const FiniteSubspace& a) {
    if (fr.center().contains(a) || !fr.is_subring(a) || !a.contains(fr.bracket_span(a, fr.whole()))) return;
    ++hyp;
    const bool ideal = a.members == fr.whole().members;
    const bool ca = is_ca_plus_c(finite_c_span(fr, a));
    ideal_branch += ideal;
    ca_branch += ca;
    tally.expect(ideal || ca, [&] { return Json{{"A", fsub(fr, a)}}; });
  });
  tally.require_exercised("contains ideal", ideal_branch);
  tally.require_exercised("Ca+C", ca_branch);
  return tally.finish();
}

Verdict check_lem8(const RingContext& ctx, const RunConfig& cfg) {
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("lem8", VerifyMode::ProvedExhaustive, ctx, cfg);
    long h1 = 0, h2 = 0, noncentral = 0;
    for (int a = 0; a < fr.size(); ++a) {
      bool kills = true;
      for (int c : fr.commutators().basis) kills = kills && fr.bracket(a, c) == 0;
      bool into_centre = true;
      for (int e : fr.additive_basis()) into_centre = into_centre && fr.is_central(fr.bracket(a, e));
      h1 += kills;
      h2 += into_centre;
      noncentral += !fr.is_central(a);
      tally.expect(!kills || fr.is_central(a), [&] { return Json{{"part", "i"}, {"a", fr.element(a).to_string()}}; });
      tally.expect(!into_centre || fr.is_central(a), [&] { return Json{{"part", "ii"}, {"a", fr.element(a).to_string()}}; });
    }
    tally.require_exercised("i hypothesis", h1);
    tally.require_exercised("noncentral", noncentral);
    const bool small_only = fr.dimension() > 4;
    long part3 = 0;
    fr.for_each_subspace([&](const FiniteSubspace& a) {
      if (small_only && a.dimension() > 2) return;
      ++part3;
      const FiniteSubspace cl = fr.subring_closure(a);
      tally.expect(fr.bracket_span(fr.whole(), a).members == fr.bracket_span(fr.whole(), cl).members,
                   [&] { return Json{{"part", "iii"}, {"A", fsub(fr, a)}}; });
    });
    tally.config()["iii_subspaces"] = part3;
    if (small_only) tally.config()["iii_max_dimension"] = 2;
    std::vector<int> units = fr.additive_basis();
    for (const auto& l : fr.lie_ideals()) {
      const FiniteSubspace ll = fr.bracket_span(l, l);
      std::vector<int> ideal_codes;
      for (int c : ll.basis)
        for (int x : units)
          for (int y : units) ideal_codes.push_back(fr.mul(fr.mul(x, c), y));
      const FiniteSubspace ideal = fr.span(ideal_codes);
      std::vector<int> sum_codes = l.basis;
      for (int x : l.basis)
        for (int y : l.basis) sum_codes.push_back(fr.mul(x, y));
      const FiniteSubspace sum_space = fr.span(sum_codes);
      tally.expect(sum_space.contains(ideal), [&] { return Json{{"part", "iv I in L+L^2"}, {"L", fsub(fr, l)}}; });
      tally.expect(l.contains(fr.bracket_span(ideal, fr.whole())),
                   [&] { return Json{{"part", "iv [I,R] in L"}, {"L", fsub(fr, l)}}; });
    }
    return tally.finish();
  }

  Tally tally("lem8", VerifyMode::VerifiedInWindow, ctx, cfg);
  const int n = cfg.degree;
  const RingContext rc = ctx.central_closure();
  const auto comm_basis = CSubspace::commutators(rc).basis();
  const int samples = budget(cfg, 200);
  long h1 = 0, h2 = 0;
  for (int i = 0; i < samples; ++i) {
    Rng rng = case_rng(cfg, "lem8", i);
    Matrix a = rng.coin() ? Matrix::scalar_matrix(ctx, random_scalar(rng, ctx.scalar)) : random_matrix(rng, ctx);
    bool kills = true, into_centre = true;
    for (const auto& z : comm_basis) kills = kills && commutator(a.lift_to(rc), z).is_zero();
    for (const auto& u : matrix_units(rc)) into_centre = into_centre && is_central(commutator(a.lift_to(rc), u));
    h1 += kills;
    h2 += into_centre;
    tally.expect((!kills && !into_centre) || is_central(a), [&] { return Json{{"part", "i/ii"}, {"a", a.to_string()}}; });
  }
  tally.require_exercised("i hypothesis", h1);
  tally.require_exercised("ii hypothesis", h2);
  for (const auto& e : poly_lie_ideal_catalog(ctx)) {
    AdditiveSubgroup ideal = generated_ideal_window(e.group, n);
    AdditiveSubgroup l_plus_l2 = sum(e.group, product_subgroup(e.group, e.group, n));
    tally.expect(slice(l_plus_l2, n).contains(slice(ideal, n)), [&] { return Json{{"part", "iv I in L+L^2"}, {"L", e.name}}; });
    tally.expect(slice(e.group, n).contains(slice(bracket_subgroup(ideal, whole_ring(ctx), n), n)),
                 [&] { return Json{{"part", "iv [I,R] in L"}, {"L", e.name}}; });
  }
  tally.config()["effective_samples"] = samples;
  return tally.finish();
}

Verdict check_lem10(const RingContext& ctx, const RunConfig& cfg) {
  Tally tally("lem10", VerifyMode::VerifiedInWindow, ctx, cfg);
  const int n = cfg.degree;
  const std::vector<Poly> gs{Poly::one(), Poly::t(), Poly::from_bits(3), Poly::monomial(2), Poly::from_bits(7)};
  for (const auto& g1 : gs)
    for (const auto& g2 : gs) {
      AdditiveSubgroup i = principal_ideal(ctx, g1);
      AdditiveSubgroup j = principal_ideal(ctx, g2);
      AdditiveSubgroup lhs = bracket_subgroup(principal_ideal(ctx, g1 * g2), whole_ring(ctx), n);
      AdditiveSubgroup rhs = bracket_subgroup(i, j, n);
      for (int w : {n, 2 * n}) {
        tally.expect(slice(rhs, w).contains(slice(lhs, w)), [&] {
          return Json{{"I", g1.to_string()}, {"J", g2.to_string()}, {"window", w}};
        });
      }
    }
  tally.witness({{"I", "M2(tS)"}, {"J", "M2((t+1)S)"}, {"proper Lie ideal", "t(t+1)[R,R]"}});
  return tally.finish();
}

Verdict check_lem19(const RingContext& ctx, const RunConfig& cfg) {
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("lem19", VerifyMode::ProvedExhaustive, ctx, cfg);
    const CSubspace comm = CSubspace::commutators(ctx);
    const CSubspace whole = CSubspace::whole(ctx);
    long ab = 0, nonab = 0;
    for (const auto& l : noncentral_lie_ideals(fr)) {
      const CSubspace lc = finite_c_span(fr, l.space);
      if (l.abelian) {
        ++ab;
        for (int a = 0; a < fr.size(); ++a) {
          if (!l.space.contains(a) || fr.is_central(a)) continue;
          const Matrix am = fr.element(a);
          const CSubspace br = bracket_span(CSubspace::span(ctx, std::vector<Matrix>{am}), whole);
          const CSubspace ca = CSubspace::span(ctx, std::vector<Matrix>{am, Matrix::identity(ctx)});
          tally.expect(lc == br && br == ca, [&] { return Json{{"part", "i"}, {"L", fsub(fr, l.space)}, {"a", am.to_string()}}; });
        }
      } else {
        ++nonab;
        tally.expect(l.space.contains(fr.commutators()), [&] { return Json{{"part", "ii proper"}, {"L", fsub(fr, l.space)}}; });
        tally.expect(lc == comm || lc == whole, [&] { return Json{{"part", "ii LC"}, {"L", fsub(fr, l.space)}}; });
      }
    }
    tally.require_exercised("abelian", ab);
    tally.require_exercised("nonabelian", nonab);
    return tally.finish();
  }

  Tally tally("lem19", VerifyMode::VerifiedInWindow, ctx, cfg);
  const int n = cfg.degree;
  const RingContext rc = ctx.central_closure();
  long ab = 0, nonab = 0;
  for (const auto& e : poly_lie_ideal_catalog(ctx)) {
    const LieIdealClass cls = classify_lie_ideal(e.group, n);
    const CSubspace lc = c_span(e.group);
    if (cls == LieIdealClass::AbelianNoncentral) {
      ++ab;
      for (const auto& a : slice(e.group, n).basis()) {
        if (is_central(a)) continue;
        const CSubspace br = bracket_span(CSubspace::span(rc, std::vector<Matrix>{a}), CSubspace::whole(rc));
        const CSubspace ca = CSubspace::span(rc, std::vector<Matrix>{a, Matrix::identity(rc)});
        tally.expect(lc == br && br == ca, [&] { return Json{{"part", "i"}, {"L", e.name}, {"a", a.to_string()}}; });
      }
    } else {
      ++nonab;
      int used = 0;
      auto h = escalate([&](int w) { return find_commutator_multiple(e.group, w); }, n, &used);
      tally.expect(h.has_value(), [&] { return Json{{"part", "ii proper"}, {"L", e.name}, {"window", used}}; });
      if (h) tally.witness({{"L", e.name}, {"h", h->to_string()}});
      tally.expect(lc == CSubspace::commutators(rc) || lc == CSubspace::whole(rc),
                   [&] { return Json{{"part", "ii LC"}, {"L", e.name}}; });
    }
  }
  tally.require_exercised("abelian", ab);
  tally.require_exercised("nonabelian", nonab);
  return tally.finish();
}

Verdict check_lem20(const RingContext& ctx, const RunConfig& cfg) {
  const bool exceptional = ctx.is_exceptional();
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("lem20", VerifyMode::ProvedExhaustive, ctx, cfg);
    std::vector<int> comms;
    std::vector<bool> seen(static_cast<std::size_t>(fr.size()), false);
    for (int x = 0; x < fr.size(); ++x)
      for (int y = 0; y < fr.size(); ++y) {
        int c = fr.bracket(x, y);
        if (!seen[static_cast<std::size_t>(c)]) {
          seen[static_cast<std::size_t>(c)] = true;
          comms.push_back(c);
        }
      }
    std::optional<std::pair<int, int>> noncentral;
    bool nonzero = false;
    for (int a : comms)
      for (int b : comms) {
        int c = fr.bracket(a, b);
        nonzero = nonzero || c != 0;
        if (!noncentral && !fr.is_central(c)) noncentral = {a, b};
      }
    const bool holds = nonzero && !noncentral;
    tally.expect(holds == exceptional, [&] { return Json{{"holds", holds}, {"exceptional", exceptional}}; });
    if (noncentral)
      tally.witness({{"x", fr.element(noncentral->first).to_string()},
                     {"y", fr.element(noncentral->second).to_string()},
                     {"[x,y]", fr.element(fr.bracket(noncentral->first, noncentral->second)).to_string()}});
    else
      tally.witness({{"[[R,R],[R,R]]", fsub(fr, fr.bracket_span(fr.commutators(), fr.commutators()))}});
    tally.config()["commutators"] = comms.size();
    return tally.finish();
  }
  if (ctx.scalar == FieldTag::Rat2) {
    Tally tally("lem20", VerifyMode::ProvedExhaustive, ctx, cfg);
    const CSubspace s = bracket_span(CSubspace::commutators(ctx), CSubspace::commutators(ctx));
    tally.expect(s == CSubspace::center(ctx), Json{{"span", mats(s.basis())}});
    return tally.finish();
  }
  Tally tally("lem20", VerifyMode::VerifiedInWindow, ctx, cfg);
  const AdditiveSubgroup comm = commutator_subgroup(ctx);
  const AdditiveSubgroup b = bracket_subgroup(comm, comm, cfg.degree);
  tally.expect(b.is_central() && !all_zero(b), Json{{"generators", gens(b)}});
  tally.witness({{"[[R,R],[R,R]]", gens(b)}});
  return tally.finish();
}

Verdict check_lem21(const RingContext& ctx, const RunConfig& cfg) {
  const bool exceptional = ctx.is_exceptional();
  constexpr int kMaxM = 4;
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("lem21", VerifyMode::ProvedExhaustive, ctx, cfg);
    long yes = 0, no = 0;
    for (const auto& l : noncentral_lie_ideals(fr)) {
      const bool inside = fr.commutators().contains(l.space);
      for (int m = 1; m <= kMaxM; ++m) {
        const bool lhs = fr.center().contains(finite_engel(fr, l.space, m));
        const bool rhs = exceptional && m > 1 && inside;
        ++(lhs ? yes : no);
        tally.expect(lhs == rhs, [&] { return Json{{"L", fsub(fr, l.space)}, {"m", m}, {"lhs", lhs}}; });
      }
    }
    if (exceptional) tally.require_exercised("central", yes);
    tally.require_exercised("noncentral", no);
    return tally.finish();
  }
  Tally tally("lem21", VerifyMode::VerifiedInWindow, ctx, cfg);
  long yes = 0, no = 0;
  for (const auto& e : poly_lie_ideal_catalog(ctx)) {
    const bool inside = in_commutators(c_span(e.group));
    for (int m = 1; m <= kMaxM; ++m) {
      const bool lhs = engel_subgroup(e.group, m, cfg.degree).is_central();
      const bool rhs = m > 1 && inside;
      ++(lhs ? yes : no);
      tally.expect(lhs == rhs, [&] { return Json{{"L", e.name}, {"m", m}, {"lhs", lhs}}; });
    }
  }
  tally.require_exercised("central", yes);
  tally.require_exercised("noncentral", no);
  return tally.finish();
}

Verdict check_thm37(const RingContext& ctx, const RunConfig& cfg) {
  const bool exceptional = ctx.is_exceptional();
  const std::vector<std::pair<int, int>> pairs{{1, 2}, {2, 1}, {2, 2}, {1, 3}, {3, 2}, {3, 3}};
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("thm37", VerifyMode::ProvedExhaustive, ctx, cfg);
    long yes = 0, no = 0;
    for (const auto& l : noncentral_lie_ideals(fr)) {
      const bool inside = fr.commutators().contains(l.space);
      for (auto [m, k] : pairs) {
        const bool lhs = fr.bracket_span(finite_engel(fr, l.space, m), finite_engel(fr, l.space, k)).dimension() == 0;
        const bool rhs = exceptional && inside;
        ++(lhs ? yes : no);
        tally.expect(lhs == rhs, [&] { return Json{{"L", fsub(fr, l.space)}, {"m", m}, {"k", k}, {"lhs", lhs}}; });
      }
    }
    if (exceptional) tally.require_exercised("vanishing", yes);
    tally.require_exercised("nonvanishing", no);
    return tally.finish();
  }
  Tally tally("thm37", VerifyMode::VerifiedInWindow, ctx, cfg);
  const int n = cfg.degree;
  long yes = 0, no = 0;
  for (const auto& e : poly_lie_ideal_catalog(ctx)) {
    const bool inside = in_commutators(c_span(e.group));
    for (auto [m, k] : pairs) {
      const AdditiveSubgroup em = engel_subgroup(e.group, m, n);
      const AdditiveSubgroup ek = engel_subgroup(e.group, k, n);
      const AdditiveSubgroup br = bracket_subgroup(em, ek, n);
      const bool lhs = all_zero(br);
      ++(lhs ? yes : no);
      tally.expect(lhs == inside, [&] { return Json{{"L", e.name}, {"m", m}, {"k", k}, {"lhs", lhs}}; });
      if (lhs) {
        tally.expect(slice(br, n).dimension() == 0, [&] { return Json{{"L", e.name}, {"m", m}, {"k", k}, {"slice", "nonzero"}}; });
        continue;
      }
      // Nonzero witness by random sampling of the two slices.
      const TruncatedSlice sm = slice(em, n);
      const TruncatedSlice sk = slice(ek, n);
      std::optional<Json> found;
      int tries = 0;
      for (; tries < 100 && !found; ++tries) {
        Rng rng = case_rng(cfg, "thm37:" + e.name + ":" + std::to_string(m) + std::to_string(k), tries);
        Matrix x = random_slice_element(rng, sm);
        Matrix y = random_slice_element(rng, sk);
        Matrix c = commutator(x, y);
        if (!c.is_zero()) found = Json{{"L", e.name}, {"m", m}, {"k", k}, {"x", x.to_string()}, {"y", y.to_string()},
                                      {"[x,y]", c.to_string()}, {"samples", tries + 1}};
      }
      tally.expect(found.has_value(), [&] { return Json{{"L", e.name}, {"m", m}, {"k", k}, {"witness", "not found in 100 samples"}}; });
      if (found) tally.witness(*found);
    }
  }
  tally.require_exercised("vanishing", yes);
  tally.require_exercised("nonvanishing", no);
  return tally.finish();
}

Verdict check_lem22(const RingContext& ctx, const RunConfig& cfg) {
  Tally tally("lem22", VerifyMode::ProvedExhaustive, ctx, cfg);
  constexpr int kMaxM = 5;
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    for (int m = 2; m <= kMaxM; ++m) {
      tally.expect(finite_engel(fr, fr.whole(), m).members == fr.commutators().members,
                   Json{{"part", "i"}, {"m", m}});
      const FiniteSubspace e = finite_engel(fr, fr.commutators(), m);
      tally.expect(m == 2 ? e.members == fr.center().members : e.dimension() == 0, Json{{"part", "ii"}, {"m", m}});
    }
    return tally.finish();
  }
  const CSubspace whole = CSubspace::whole(ctx);
  const CSubspace comm = CSubspace::commutators(ctx);
  CSubspace e = whole;
  CSubspace f = comm;
  for (int m = 2; m <= kMaxM; ++m) {
    e = bracket_span(e, whole);
    f = bracket_span(f, comm);
    tally.expect(e == comm, Json{{"part", "i"}, {"m", m}, {"span", mats(e.basis())}});
    tally.expect(m == 2 ? f == CSubspace::center(ctx) : f.dimension() == 0, Json{{"part", "ii"}, {"m", m}});
  }
  return tally.finish();
}

Verdict check_lem23(const RingContext& ctx, const RunConfig& cfg) {
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("lem23", VerifyMode::ProvedExhaustive, ctx, cfg);
    long yes = 0, no = 0;
    for (const auto& l : noncentral_lie_ideals(fr)) {
      const bool lhs = fr.commutators().contains(l.space);
      const bool rhs = *l.cls == LieIdealClass::AbelianNoncentral || *l.cls == LieIdealClass::TypeI;
      ++(lhs ? yes : no);
      tally.expect(lhs == rhs, [&] { return Json{{"L", fsub(fr, l.space)}, {"class", to_string(*l.cls)}}; });
    }
    tally.require_exercised("inside", yes);
    tally.require_exercised("outside", no);
    return tally.finish();
  }
  Tally tally("lem23", VerifyMode::VerifiedInWindow, ctx, cfg);
  long yes = 0, no = 0;
  for (const auto& e : poly_lie_ideal_catalog(ctx)) {
    const bool lhs = in_commutators(c_span(e.group));
    const LieIdealClass cls = classify_lie_ideal(e.group, cfg.degree);
    const bool rhs = cls == LieIdealClass::AbelianNoncentral || cls == LieIdealClass::TypeI;
    ++(lhs ? yes : no);
    tally.expect(lhs == rhs, [&] { return Json{{"L", e.name}, {"class", to_string(cls)}}; });
  }
  tally.require_exercised("inside", yes);
  tally.require_exercised("outside", no);
  return tally.finish();
}

namespace {

bool thm36_predicted(LieIdealClass cls, const std::vector<bool>& trace_zero, bool last_central) {
  const std::size_t n = trace_zero.size();
  if (cls == LieIdealClass::TypeII) {
    if (last_central) return true;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (trace_zero[i]) return true;
    return false;
  }
  for (bool b : trace_zero)
    if (b) return true;
  return false;
}

}  // namespace

Verdict check_thm36(const RingContext& ctx, const RunConfig& cfg) {
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("thm36", VerifyMode::ProvedExhaustive, ctx, cfg);
    const int max_n = fr.dimension() > 4 ? 2 : 3;
    std::map<std::string, long> seen;
    for (const auto& l : noncentral_lie_ideals(fr)) {
      const LieIdealClass cls = *l.cls;
      for (int n = 1; n <= max_n; ++n) {
        std::vector<int> tuple(static_cast<std::size_t>(n), 0);
        long total = 1;
        for (int i = 0; i < n; ++i) total *= fr.size();
        for (long idx = 0; idx < total; ++idx) {
          long r = idx;
          for (int i = 0; i < n; ++i) {
            tuple[static_cast<std::size_t>(i)] = static_cast<int>(r % fr.size());
            r /= fr.size();
          }
          bool lhs = true;
          for (int b : l.space.basis) {
            int x = b;
            for (int i = n - 1; i >= 0; --i) x = fr.bracket(tuple[static_cast<std::size_t>(i)], x);
            if (!fr.is_central(x)) {
              lhs = false;
              break;
            }
          }
          std::vector<bool> tz;
          for (int a : tuple) tz.push_back(fr.trace_zero(a));
          const bool rhs = thm36_predicted(cls, tz, fr.is_central(tuple.back()));
          ++seen[std::string(to_string(cls)) + (lhs ? ":central" : ":noncentral")];
          tally.expect(lhs == rhs, [&] {
            Json a = Json::array();
            for (int c : tuple) a.push_back(fr.element(c).to_string());
            return Json{{"L", fsub(fr, l.space)}, {"a", a}, {"lhs", lhs}};
          });
        }
      }
    }
    for (const auto& [k, v] : seen) tally.config()["exercised"][k] = v;
    for (const char* cls : {"AbelianNoncentral", "TypeI", "TypeII"})
      for (const char* side : {":central", ":noncentral"}) {
        const std::string key = std::string(cls) + side;
        if (!seen.count(key)) tally.require_exercised(key, 0);
      }
    return tally.finish();
  }

  Tally tally("thm36", VerifyMode::Randomized, ctx, cfg);
  const RingContext rc = ctx.central_closure();
  std::map<std::string, long> seen;
  std::vector<std::pair<NamedSubgroup, LieIdealClass>> catalog;
  for (auto& e : poly_lie_ideal_catalog(ctx)) {
    const LieIdealClass cls = classify_lie_ideal(e.group, cfg.degree);
    catalog.emplace_back(std::move(e), cls);
  }
  const int samples = budget(cfg, 1000);
  for (int i = 0; i < samples; ++i) {
    Rng rng = case_rng(cfg, "thm36", i);
    const auto& [e, cls] = catalog[static_cast<std::size_t>(i) % catalog.size()];
    const int n = 1 + static_cast<int>(rng.below(4));
    std::vector<Matrix> a;
    for (int j = 0; j < n; ++j) a.push_back(random_noncentral(rng, ctx, false, 2));
    switch (rng.below(3)) {
      case 0: a[rng.below(static_cast<std::uint64_t>(n))] = random_trace_zero(rng, ctx, 2); break;
      case 1: a.back() = Matrix::scalar_matrix(ctx, random_scalar(rng, ctx.scalar, 2)); break;
      default: break;
    }
    std::vector<Matrix> lifted;
    for (const auto& m : a) lifted.push_back(m.lift_to(rc));
    bool lhs = true;
    for (const auto& z : c_span(e.group).basis()) lhs = lhs && is_central(iterated_bracket(lifted, z));
    std::vector<bool> tz;
    for (const auto& m : a) tz.push_back(in_commutator_space(m));
    const bool rhs = thm36_predicted(cls, tz, is_central(a.back()));
    ++seen[std::string(to_string(cls)) + (lhs ? ":central" : ":noncentral")];
    tally.expect(lhs == rhs, [&] { return Json{{"L", e.name}, {"a", mats(a)}, {"lhs", lhs}, {"case", i}}; });
  }
  tally.config()["effective_samples"] = samples;
  for (const auto& [k, v] : seen) tally.config()["exercised"][k] = v;
  for (const char* cls : {"AbelianNoncentral", "TypeI", "TypeII"})
    for (const char* side : {":central", ":noncentral"}) {
      const std::string key = std::string(cls) + side;
      if (!seen.count(key)) tally.require_exercised(key, 0);
    }
  return tally.finish();
}

}  // namespace exrings::checks
