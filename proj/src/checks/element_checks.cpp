#include "checks/checks.hpp"
#include "checks/common.hpp"
#include "exrings/glmap.hpp"

namespace exrings::checks {

namespace {

std::string code_str(const FiniteRing& fr, int c) { return fr.element(c).to_string(); }

/// Calls fn on every n-tuple of element codes.
void for_each_tuple(const FiniteRing& fr, int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= fr.size();
  for (long idx = 0; idx < total; ++idx) {
    long r = idx;
    for (int i = 0; i < n; ++i) {
      tuple[static_cast<std::size_t>(i)] = static_cast<int>(r % fr.size());
      r /= fr.size();
    }
    fn(tuple);
  }
}

int finite_iterated(const FiniteRing& fr, const std::vector<int>& a, int x) {
  for (auto it = a.rbegin(); it != a.rend(); ++it) x = fr.bracket(*it, x);
  return x;
}

std::vector<Matrix> lift_all(const std::vector<Matrix>& ms, const RingContext& rc) {
  std::vector<Matrix> out;
  for (const auto& m : ms) out.push_back(m.lift_to(rc));
  return out;
}

}  // namespace

Verdict check_lem2(const RingContext& ctx, const RunConfig& cfg) {
  long hyp = 0, not_hyp = 0;
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("lem2", VerifyMode::ProvedExhaustive, ctx, cfg);
    for (int b = 0; b < fr.size(); ++b) {
      if (fr.is_central(b)) continue;
      const FiniteSubspace cb = f_span(fr, {b, fr.identity()});
      for (int a = 0; a < fr.size(); ++a) {
        bool h = true;
        for (int e : fr.additive_basis()) h = h && fr.bracket(a, fr.bracket(b, e)) == 0;
        ++(h ? hyp : not_hyp);
        if (h) tally.expect(cb.contains(a), [&] { return Json{{"a", code_str(fr, a)}, {"b", code_str(fr, b)}}; });
      }
    }
    tally.config()["hypothesis_failed"] = not_hyp;
    tally.require_exercised("hypothesis", hyp);
    tally.require_exercised("hypothesis fails", not_hyp);
    return tally.finish();
  }
  Tally tally("lem2", VerifyMode::Randomized, ctx, cfg);
  auto run = [&](const Matrix& a, const Matrix& b) {
    bool h = true;
    for (const auto& u : matrix_units(ctx)) h = h && commutator(a, commutator(b, u)).is_zero();
    ++(h ? hyp : not_hyp);
    const CSubspace cb = CSubspace::span(ctx, std::vector<Matrix>{b, Matrix::identity(ctx)});
    if (h) tally.expect(cb.contains(a), [&] { return Json{{"a", a.to_string()}, {"b", b.to_string()}}; });
  };
  run(Matrix::unit(ctx, 1, 2), Matrix::unit(ctx, 1, 1));
  const int samples = budget(cfg, 1000);
  for (int i = 0; i < samples; ++i) {
    Rng rng = case_rng(cfg, "lem2", i);
    Matrix b = random_noncentral(rng, ctx, rng.coin(), 2);
    Matrix a = rng.coin() ? random_matrix(rng, ctx, 2)
                          : (random_scalar(rng, ctx.scalar, 2) * b + Matrix::scalar_matrix(ctx, random_scalar(rng, ctx.scalar, 2)))
                                .lift_to(ctx);
    run(a, b);
  }
  tally.config()["effective_samples"] = samples;
  tally.require_exercised("hypothesis", hyp);
  tally.require_exercised("hypothesis fails", not_hyp);
  return tally.finish();
}

Verdict check_lem6(const RingContext& ctx, const RunConfig& cfg) {
  long inside = 0, outside = 0;
  auto run = [&](Tally& tally, const Matrix& a, long index) {
    const bool by_trace = in_commutator_space(a);
    const bool by_square = square_central(a);
    const bool by_span = in_commutator_span(a);
    ++(by_span ? inside : outside);
    tally.expect(by_trace == by_square && by_square == by_span, [&] {
      return Json{{"a", a.to_string()}, {"trace", by_trace}, {"square", by_square}, {"span", by_span}, {"case", index}};
    });
  };
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("lem6", VerifyMode::ProvedExhaustive, ctx, cfg);
    for (int c = 0; c < fr.size(); ++c) run(tally, fr.element(c), c);
    tally.require_exercised("in [RC,RC]", inside);
    tally.require_exercised("outside [RC,RC]", outside);
    return tally.finish();
  }
  Tally tally("lem6", VerifyMode::Randomized, ctx, cfg);
  const long samples = ctx.scalar == FieldTag::Rat2 ? 10L * cfg.samples : cfg.samples;
  for (long i = 0; i < samples; ++i) {
    Rng rng = case_rng(cfg, "lem6", i);
    Matrix a = rng.coin() ? random_trace_zero(rng, ctx) : random_matrix(rng, ctx);
    run(tally, a, i);
  }
  tally.config()["effective_samples"] = samples;
  tally.require_exercised("in [RC,RC]", inside);
  tally.require_exercised("outside [RC,RC]", outside);
  return tally.finish();
}

Verdict check_lem11(const RingContext& ctx, const RunConfig& cfg) {
  const RingContext rc = ctx.central_closure();
  const CSubspace whole = CSubspace::whole(rc);
  long noncentral = 0;
  auto run = [&](Tally& tally, const Matrix& a) {
    const int dim = bracket_span(CSubspace::span(rc, std::vector<Matrix>{a}), whole).dimension();
    if (is_central(a)) {
      tally.expect(dim == 0, [&] { return Json{{"a", a.to_string()}, {"dim", dim}}; });
    } else {
      ++noncentral;
      tally.expect(dim > 1, [&] { return Json{{"a", a.to_string()}, {"dim", dim}}; });
    }
  };
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("lem11", VerifyMode::ProvedExhaustive, ctx, cfg);
    for (int c = 0; c < fr.size(); ++c) run(tally, fr.element(c));
    tally.require_exercised("noncentral", noncentral);
    return tally.finish();
  }
  Tally tally("lem11", VerifyMode::Randomized, ctx, cfg);
  const int samples = budget(cfg, 1000);
  for (int i = 0; i < samples; ++i) {
    Rng rng = case_rng(cfg, "lem11", i);
    run(tally, (rng.below(8) == 0 ? Matrix::scalar_matrix(ctx, random_scalar(rng, ctx.scalar)) : random_matrix(rng, ctx))
                   .lift_to(rc));
  }
  tally.config()["effective_samples"] = samples;
  tally.require_exercised("noncentral", noncentral);
  return tally.finish();
}

namespace {

enum class BracketTheorem { Thm25, Thm28, Thm31 };

const char* bracket_id(BracketTheorem k) {
  switch (k) {
    case BracketTheorem::Thm25: return "thm25";
    case BracketTheorem::Thm28: return "thm28";
    case BracketTheorem::Thm31: return "thm31";
  }
  return "";
}

bool bracket_predicted(BracketTheorem k, const std::vector<bool>& tz) {
  const std::size_t n = tz.size();
  std::size_t lo = 0, hi = n;
  if (k == BracketTheorem::Thm28) hi = n - 1;
  if (k == BracketTheorem::Thm31) lo = 1;
  for (std::size_t i = lo; i < hi; ++i)
    if (tz[i]) return true;
  return false;
}

Verdict bracket_theorem(BracketTheorem kind, const RingContext& ctx, const RunConfig& cfg) {
  const int min_n = kind == BracketTheorem::Thm25 ? 1 : 2;
  long yes = 0, no = 0;
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally(bracket_id(kind), VerifyMode::ProvedExhaustive, ctx, cfg);
    const int max_n = fr.dimension() > 4 ? 2 : 3;
    const std::vector<int>& test = kind == BracketTheorem::Thm28 ? fr.additive_basis() : fr.commutators().basis;
    for (int n = min_n; n <= max_n; ++n) {
      for_each_tuple(fr, n, [&](const std::vector<int>& a) {
        if (kind == BracketTheorem::Thm28 && fr.is_central(a.back())) return;
        if (kind == BracketTheorem::Thm31 && fr.is_central(a.front())) return;
        bool lhs = true;
        for (int z : test) {
          int x = finite_iterated(fr, a, z);
          lhs = lhs && (kind == BracketTheorem::Thm31 ? x == 0 : fr.is_central(x));
        }
        std::vector<bool> tz;
        for (int c : a) tz.push_back(fr.trace_zero(c));
        ++(lhs ? yes : no);
        tally.expect(lhs == bracket_predicted(kind, tz), [&] {
          Json j = Json::array();
          for (int c : a) j.push_back(code_str(fr, c));
          return Json{{"a", j}, {"lhs", lhs}};
        });
      });
    }
    tally.require_exercised("holds", yes);
    tally.require_exercised("fails", no);
    return tally.finish();
  }

  Tally tally(bracket_id(kind), VerifyMode::Randomized, ctx, cfg);
  const RingContext rc = ctx.central_closure();
  const std::vector<Matrix> test = kind == BracketTheorem::Thm28 ? matrix_units(rc) : CSubspace::commutators(rc).basis();
  const int samples = budget(cfg, 1000);
  for (int i = 0; i < samples; ++i) {
    Rng rng = case_rng(cfg, bracket_id(kind), i);
    const int n = min_n + static_cast<int>(rng.below(static_cast<std::uint64_t>(5 - min_n)));
    std::vector<Matrix> a;
    for (int j = 0; j < n; ++j) a.push_back(random_noncentral(rng, ctx, false, 2));
    if (rng.coin()) {
      std::size_t pos = rng.below(static_cast<std::uint64_t>(n));
      a[pos] = rng.below(4) == 0 ? Matrix::scalar_matrix(ctx, random_scalar(rng, ctx.scalar, 2))
                                 : random_noncentral(rng, ctx, true, 2);
      if (kind == BracketTheorem::Thm28 && pos + 1 == a.size()) a[pos] = random_noncentral(rng, ctx, true, 2);
      if (kind == BracketTheorem::Thm31 && pos == 0) a[pos] = random_noncentral(rng, ctx, true, 2);
    }
    const std::vector<Matrix> lifted = lift_all(a, rc);
    bool lhs = true;
    for (const auto& z : test) {
      Matrix x = iterated_bracket(lifted, z);
      lhs = lhs && (kind == BracketTheorem::Thm31 ? x.is_zero() : is_central(x));
    }
    std::vector<bool> tz;
    for (const auto& m : a) tz.push_back(in_commutator_space(m));
    ++(lhs ? yes : no);
    tally.expect(lhs == bracket_predicted(kind, tz), [&] { return Json{{"a", mats(a)}, {"lhs", lhs}, {"case", i}}; });
  }
  tally.config()["effective_samples"] = samples;
  tally.require_exercised("holds", yes);
  tally.require_exercised("fails", no);
  return tally.finish();
}

}  // namespace

Verdict check_thm25(const RingContext& ctx, const RunConfig& cfg) { return bracket_theorem(BracketTheorem::Thm25, ctx, cfg); }
Verdict check_thm28(const RingContext& ctx, const RunConfig& cfg) { return bracket_theorem(BracketTheorem::Thm28, ctx, cfg); }
Verdict check_thm31(const RingContext& ctx, const RunConfig& cfg) { return bracket_theorem(BracketTheorem::Thm31, ctx, cfg); }

Verdict check_lem17(const RingContext& ctx, const RunConfig& cfg) {
  long yes = 0, no = 0;
  auto run = [&](Tally& tally, const std::vector<std::vector<Matrix>>& fams, long index) {
    EquivalenceFlags f = lemma17_equivalence(fams, ctx);
    ++(f.lhs ? yes : no);
    tally.expect(f.lhs == f.rhs, [&] {
      Json j = Json::array();
      for (const auto& fam : fams) j.push_back(mats(fam));
      return Json{{"families", j}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"case", index}};
    });
  };
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("lem17", VerifyMode::ProvedExhaustive, ctx, cfg);
    long index = 0;
    auto el = [&](int c) { return fr.element(c); };
    for_each_tuple(fr, 1, [&](const std::vector<int>& a) { run(tally, {{el(a[0])}}, index++); });
    for_each_tuple(fr, 2, [&](const std::vector<int>& a) { run(tally, {{el(a[0]), el(a[1])}}, index++); });
    for_each_tuple(fr, 2, [&](const std::vector<int>& a) { run(tally, {{el(a[0])}, {el(a[1])}}, index++); });
    for_each_tuple(fr, 3, [&](const std::vector<int>& a) { run(tally, {{el(a[0])}, {el(a[1]), el(a[2])}}, index++); });
    tally.config()["families"] = index;
    tally.require_exercised("holds", yes);
    tally.require_exercised("fails", no);
    return tally.finish();
  }
  Tally tally("lem17", VerifyMode::Randomized, ctx, cfg);
  const int samples = budget(cfg, 1000);
  for (int i = 0; i < samples; ++i) {
    Rng rng = case_rng(cfg, "lem17", i);
    std::vector<std::vector<Matrix>> fams;
    const int m = 1 + static_cast<int>(rng.below(3));
    for (int j = 0; j < m; ++j) {
      std::vector<Matrix> fam;
      const int n = 1 + static_cast<int>(rng.below(3));
      for (int k = 0; k < n; ++k) fam.push_back(random_matrix(rng, ctx, 2));
      fams.push_back(std::move(fam));
    }
    switch (rng.below(3)) {
      case 0: fams.push_back(fams.front()); break;
      case 1:
        if (fams.front().size() == 1) fams.front().push_back(random_matrix(rng, ctx, 2));
        fams.front().back() = random_trace_zero(rng, ctx, 2);
        fams.resize(1);
        break;
      default: break;
    }
    run(tally, fams, i);
  }
  tally.config()["effective_samples"] = samples;
  tally.require_exercised("holds", yes);
  tally.require_exercised("fails", no);
  return tally.finish();
}

Verdict check_thm32(const RingContext& ctx, const RunConfig& cfg) {
  long yes = 0, no = 0;
  const GLMap trace = GLMap::trace_map(ctx);
  auto run = [&](Tally& tally, const GLMap& phi, long index) {
    EquivalenceFlags f = theorem32_equivalence(phi);
    ++(f.lhs ? yes : no);
    tally.expect(f.lhs == f.rhs, [&] {
      return Json{{"part", "i"}, {"phi", phi.to_string()}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"case", index}};
    });
  };
  auto involution = [&](Tally& tally, const GLMap& phi, const GLMap& eta, long index) {
    tally.expect(compose(phi, eta).star().equals(compose(eta.star(), phi.star())), [&] {
      return Json{{"part", "(phi eta)* = eta* phi*"}, {"phi", phi.to_string()}, {"eta", eta.to_string()}, {"case", index}};
    });
    tally.expect(phi.star().star().equals(phi),
                 [&] { return Json{{"part", "phi** = phi"}, {"phi", phi.to_string()}, {"case", index}}; });
  };
  if (ctx.is_finite()) {
    const auto& fr = finite(ctx);
    Tally tally("thm32", VerifyMode::ProvedExhaustive, ctx, cfg);
    long index = 0;
    std::vector<GLMap> singles;
    for (int a = 0; a < fr.size(); ++a)
      for (int b = 0; b < fr.size(); ++b) singles.emplace_back(ctx, std::vector<GLMap::Term>{{fr.element(a), fr.element(b)}});
    for (const auto& phi : singles) {
      run(tally, phi, index++);
      run(tally, compose(phi, trace), index++);
    }
    if (fr.field() == FieldTag::GF2) {
      for (std::size_t i = 0; i < singles.size(); ++i)
        for (std::size_t j = 0; j < singles.size(); ++j) {
          run(tally, singles[i] + singles[j], index++);
          involution(tally, singles[i], singles[j], index);
        }
    } else {
      for (std::size_t i = 0; i < singles.size(); i += 7) involution(tally, singles[i], singles[(i * 13 + 5) % singles.size()], index++);
    }
    tally.config()["maps"] = index;
    tally.require_exercised("vanishes on [RC,RC]", yes);
    tally.require_exercised("does not vanish", no);
    return tally.finish();
  }
  Tally tally("thm32", VerifyMode::Randomized, ctx, cfg);
  auto random_map = [&](Rng& rng, int max_terms) {
    std::vector<GLMap::Term> terms;
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
    for (int j = 0; j < k; ++j) terms.emplace_back(random_matrix(rng, ctx, 2), random_matrix(rng, ctx, 2));
    return GLMap(ctx, std::move(terms));
  };
  for (int i = 0; i < cfg.samples; ++i) {
    Rng rng = case_rng(cfg, "thm32", i);
    GLMap phi = rng.coin() ? random_map(rng, 4) : compose(random_map(rng, 1), trace);
    GLMap eta = random_map(rng, 4);
    run(tally, phi, i);
    involution(tally, phi, eta, i);
  }
  tally.config()["effective_samples"] = cfg.samples;
  tally.require_exercised("vanishes on [RC,RC]", yes);
  tally.require_exercised("does not vanish", no);
  return tally.finish();
}

}  // namespace exrings::checks
