#include "checks/common.hpp"

namespace exrings::checks {

Tally::Tally(std::string theorem, VerifyMode mode, const RingContext& ctx, const RunConfig& cfg) : cfg_(cfg) {
  v_.theorem = std::move(theorem);
  v_.mode = mode;
  v_.config["ring"] = ctx.to_string();
  v_.config["degree"] = cfg.degree;
  v_.config["seed"] = cfg.seed;
  v_.config["samples"] = cfg.samples;
}

bool Tally::expect(bool ok, const std::function<Json()>& detail) {
  ++v_.cases_total;
  if (!ok) {
    ++v_.cases_failed;
    if (v_.counterexamples.size() < kMaxRecords) v_.counterexamples.push_back(detail());
  }
  return ok;
}

void Tally::witness(Json w) {
  if (v_.witnesses.size() < kMaxRecords) v_.witnesses.push_back(std::move(w));
}

void Tally::require_exercised(const std::string& label, long count) {
  v_.config["exercised"][label] = count;
  if (count == 0) expect(false, Json{{"unexercised", label}});
}

std::string str(const Matrix& m) { return m.to_string(); }

Json mats(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

int budget(const RunConfig& cfg, int cap) { return std::max(1, std::min(cfg.samples, cap)); }

const FiniteRing& finite(const RingContext& ctx) { return FiniteRing::get(ctx.scalar); }

CSubspace finite_c_span(const FiniteRing& fr, const FiniteSubspace& s) {
  std::vector<Matrix> gens;
  for (int b : s.basis) gens.push_back(fr.element(b));
  return CSubspace::span(fr.context(), gens);
}

std::vector<int> scalar_codes(const FiniteRing& fr) {
  std::vector<int> out;
  for (int c = 0; c < fr.size(); ++c)
    if (c != 0 && fr.is_central(c)) out.push_back(c);
  return out;
}

bool is_ca_plus_c(const CSubspace& s) {
  if (s.dimension() != 2) return false;
  const RingContext& rc = s.context();
  if (!s.contains(Matrix::identity(rc))) return false;
  for (const auto& b : s.basis())
    if (!is_central(b)) return square_central(b);
  return false;
}

Rng case_rng(const RunConfig& cfg, const std::string& label, long index) {
  return Rng::for_case(cfg.seed, label, static_cast<std::uint64_t>(index));
}

DerivationExpr make_derivation(const Scalar& c, const Matrix& a) {
  DerivationExpr inner = DerivationExpr::inner(a);
  if (c.is_zero()) return inner;
  DerivationExpr outer = c.is_one() ? DerivationExpr::dt() : DerivationExpr::scaled(c, DerivationExpr::dt());
  if (a.is_zero()) return outer;
  return DerivationExpr::sum(outer, inner);
}

std::vector<NamedSubgroup> poly_lie_ideal_catalog(const RingContext& ctx) {
  const Matrix one = Matrix::identity(ctx);
  const Matrix e11 = Matrix::unit(ctx, 1, 1);
  const Matrix e12 = Matrix::unit(ctx, 1, 2);
  const Matrix e21 = Matrix::unit(ctx, 2, 1);
  const Scalar t = Scalar(Poly::t());
  std::vector<NamedSubgroup> out;
  out.push_back({"[R,R]", commutator_subgroup(ctx)});
  AdditiveSubgroup ex4 = commutator_subgroup(ctx);
  ex4.add(TaggedGenerator::bits(e11));
  out.push_back({"[R,R]+Z2e11", ex4});
  out.push_back({"S1+S(e12+e21)",
                 AdditiveSubgroup(ctx, {TaggedGenerator::poly_full(one), TaggedGenerator::poly_full(e12 + e21)})});
  AdditiveSubgroup tcomm(ctx, {TaggedGenerator::poly_full(t * one), TaggedGenerator::poly_full(t * e12),
                               TaggedGenerator::poly_full(t * e21)});
  out.push_back({"t[R,R]", tcomm});
  AdditiveSubgroup tex4 = tcomm;
  tex4.add(TaggedGenerator::bits(t * e11));
  out.push_back({"t[R,R]+Z2te11", tex4});
  out.push_back({"R", whole_ring(ctx)});
  return out;
}

}  // namespace exrings::checks

namespace exrings::checks {

FiniteSubspace f_span(const FiniteRing& fr, std::vector<int> codes) {
  const auto scalars = scalar_codes(fr);
  const std::size_t n = codes.size();
  for (std::size_t i = 0; i < n; ++i)
    for (int s : scalars) codes.push_back(fr.mul(s, codes[i]));
  return fr.span(codes);
}

bool is_fa_plus_f(const FiniteRing& fr, const FiniteSubspace& a, bool need_square_central, bool need_trace_zero) {
  for (int x = 0; x < fr.size(); ++x) {
    if (!a.contains(x) || fr.is_central(x)) continue;
    if (need_square_central && !fr.is_central(fr.mul(x, x))) continue;
    if (need_trace_zero && !fr.trace_zero(x)) continue;
    if (f_span(fr, {x, fr.identity()}).members == a.members) return true;
  }
  return false;
}

std::vector<FiniteLieIdeal> noncentral_lie_ideals(const FiniteRing& fr) {
  std::vector<FiniteLieIdeal> out;
  for (const auto& l : fr.lie_ideals()) {
    if (fr.center().contains(l)) continue;
    FiniteLieIdeal f{l, fr.bracket_span(l, l).dimension() == 0, std::nullopt};
    if (fr.context().is_exceptional()) f.cls = classify_lie_ideal(fr.to_subgroup(l), 1);
    out.push_back(std::move(f));
  }
  return out;
}

FiniteSubspace finite_engel(const FiniteRing& fr, const FiniteSubspace& l, int m) {
  FiniteSubspace e = l;
  for (int i = 2; i <= m; ++i) e = fr.bracket_span(e, l);
  return e;
}

namespace {

/// Nonzero h of degree < W/2, ordered by degree, with t^j h g in slice(a, W)
/// for every generator g and every j <= W - W/2. Kernel of a linear map in
/// the coefficients of h; callers confirm the remaining shifts.
std::vector<Poly> multiplier_candidates(const TruncatedSlice& s, const std::vector<Matrix>& gens, int window) {
  const int d = (window + 1) / 2;
  const int shifts = window - d + 1;
  const int width = s.echelon().nbits();
  const int left = shifts * static_cast<int>(gens.size()) * width;
  const bool aug = s.context().restriction == Restriction::AugmentationIdeal;
  Gf2Echelon z(left + d);
  for (int k = aug ? 1 : 0; k < d; ++k) {
    BitVec row(left + d);
    int offset = 0;
    bool fits = true;
    for (int j = 0; j < shifts && fits; ++j)
      for (const auto& g : gens) {
        auto enc = s.encode((Scalar(Poly::monomial(k + j)) * g).lift_to(s.context()));
        if (!enc) {
          fits = false;
          break;
        }
        const BitVec r = s.echelon().reduce(*enc);
        for (int b = 0; b < width; ++b)
          if (r.get(b)) row.set(offset + b);
        offset += width;
      }
    if (!fits) continue;
    row.set(left + k);
    z.insert(row);
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < z.rows().size(); ++i) {
    if (z.pivots()[i] < left) continue;
    Poly h;
    for (int k = 0; k < d; ++k)
      if (z.rows()[i].get(left + k)) h += Poly::monomial(k);
    out.push_back(h);
  }
  std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) {
    return x.degree() != y.degree() ? x.degree() < y.degree() : x < y;
  });
  return out;
}

bool multiples_inside(const TruncatedSlice& s, const Poly& h, const std::vector<Matrix>& gens, int window) {
  for (int j = 0; h.degree() + j < window; ++j)
    for (const auto& g : gens) {
      Matrix m = (Scalar(h.shifted(j)) * g).lift_to(s.context());
      if (!s.contains(m)) return false;
    }
  return true;
}

std::optional<Poly> find_multiplier(const AdditiveSubgroup& a, const std::vector<Matrix>& gens, int window) {
  TruncatedSlice s = slice(a, window);
  for (const auto& h : multiplier_candidates(s, gens, window))
    if (multiples_inside(s, h, gens, window)) return h;
  return std::nullopt;
}

}  // namespace

std::optional<Poly> find_central_multiplier(const AdditiveSubgroup& a, int window) {
  return find_multiplier(a, {Matrix::identity(a.context().ambient())}, window);
}

AdditiveSubgroup commutator_multiple(const RingContext& ctx, const Poly& h) {
  const RingContext amb = ctx.ambient();
  const Scalar hs(h);
  return AdditiveSubgroup(ctx, {TaggedGenerator::poly_full((hs * Matrix::identity(amb)).lift_to(ctx)),
                                TaggedGenerator::poly_full((hs * Matrix::unit(amb, 1, 2)).lift_to(ctx)),
                                TaggedGenerator::poly_full((hs * Matrix::unit(amb, 2, 1)).lift_to(ctx))});
}

std::optional<Poly> find_commutator_multiple(const AdditiveSubgroup& a, int window) {
  const RingContext amb = a.context().ambient();
  return find_multiplier(a, {Matrix::identity(amb), Matrix::unit(amb, 1, 2), Matrix::unit(amb, 2, 1)}, window);
}

}  // namespace exrings::checks
