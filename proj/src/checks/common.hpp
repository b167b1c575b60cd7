#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exrings/derivation.hpp"
#include "exrings/finite_ring.hpp"
#include "exrings/linear_space.hpp"
#include "exrings/matrix.hpp"
#include "exrings/rng.hpp"
#include "exrings/sampling.hpp"
#include "exrings/subgroup.hpp"
#include "exrings/verdict.hpp"

namespace exrings::checks {

inline constexpr std::size_t kMaxRecords = 8;

/// Accumulates cases for one verdict.
class Tally {
 public:
  Tally(std::string theorem, VerifyMode mode, const RingContext& ctx, const RunConfig& cfg);

  /// Counts one case; records `detail` as a counterexample when !ok.
  bool expect(bool ok, const std::function<Json()>& detail);
  bool expect(bool ok, Json detail) {
    return expect(ok, [&] { return detail; });
  }
  void witness(Json w);
  /// Counts a failure when a hypothesis class was never exercised.
  void require_exercised(const std::string& label, long count);
  void set_mode(VerifyMode m) { v_.mode = m; }
  Json& config() { return v_.config; }
  const RunConfig& run_config() const { return cfg_; }
  long failed() const { return v_.cases_failed; }
  Verdict finish() { return std::move(v_); }

 private:
  Verdict v_;
  RunConfig cfg_;
};

std::string str(const Matrix& m);
Json mats(const std::vector<Matrix>& ms);

/// Random sampling budget: min(cfg.samples, cap), at least 1.
int budget(const RunConfig& cfg, int cap);

/// Element codes <-> matrices on finite rings.
const FiniteRing& finite(const RingContext& ctx);
/// C-span of a finite subspace viewed as an F-subspace of M2(F).
CSubspace finite_c_span(const FiniteRing& fr, const FiniteSubspace& s);
/// The nonzero scalars of the field, as element codes of scalar matrices.
std::vector<int> scalar_codes(const FiniteRing& fr);

/// A C-span of the form Ca + C with a^2 central (a noncentral).
bool is_ca_plus_c(const CSubspace& s);

/// Per-case stream for randomized checks.
Rng case_rng(const RunConfig& cfg, const std::string& label, long index);

/// c*dt + ad_a for random c (possibly zero) and a over the context.
DerivationExpr make_derivation(const Scalar& c, const Matrix& a);

/// Noncentral Lie ideals of M2(GF(2)[t]) used as fixtures: [R,R],
/// [R,R] + Z2 e11, S1 + S(e12+e21), t[R,R], t[R,R] + Z2 te11 and R.
struct NamedSubgroup {
  std::string name;
  AdditiveSubgroup group;
};
std::vector<NamedSubgroup> poly_lie_ideal_catalog(const RingContext& ctx);

}  // namespace exrings::checks

namespace exrings::checks {

/// F-span of element codes (closing under the nonzero scalars of F).
FiniteSubspace f_span(const FiniteRing& fr, std::vector<int> codes);
/// A = Fa + F for some a in A outside the centre (optionally requiring a^2
/// central or a trace-zero).
bool is_fa_plus_f(const FiniteRing& fr, const FiniteSubspace& a, bool need_square_central, bool need_trace_zero);
/// Noncentral Lie ideals of a finite ring, with their classes (empty class
/// list on GF(3), where the Type I / Type II split is not defined).
struct FiniteLieIdeal {
  FiniteSubspace space;
  bool abelian;
  std::optional<LieIdealClass> cls;
};
std::vector<FiniteLieIdeal> noncentral_lie_ideals(const FiniteRing& fr);
/// E_m(L)^+ inside a finite ring.
FiniteSubspace finite_engel(const FiniteRing& fr, const FiniteSubspace& l, int m);

/// A nonzero beta of degree < W/2 with t^j beta * 1 in slice(a, W) for every
/// j with deg beta + j < W.
std::optional<Poly> find_central_multiplier(const AdditiveSubgroup& a, int window);
/// A nonzero h of degree < W/2 with slice(h[R,R], W) inside slice(a, W).
std::optional<Poly> find_commutator_multiple(const AdditiveSubgroup& a, int window);
/// h[R,R] = [M2(hS), R] as a module-tagged subgroup.
AdditiveSubgroup commutator_multiple(const RingContext& ctx, const Poly& h);

}  // namespace exrings::checks
