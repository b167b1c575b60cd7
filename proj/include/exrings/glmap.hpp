#pragma once

// Generalized linear maps x -> sum a_i x b_i on RC, the involution
// x -> sum b_i x a_i, and the equivalence tests built on them.

#include <utility>
#include <vector>

#include "exrings/derivation.hpp"
#include "exrings/matrix.hpp"
#include "exrings/subgroup.hpp"

namespace exrings {

class GLMap {
 public:
  using Term = std::pair<Matrix, Matrix>;

  explicit GLMap(RingContext ctx, std::vector<Term> terms = {});

  static GLMap identity(const RingContext& ctx);
  /// ad_a as {(a, 1), (-1, a)}.
  static GLMap inner(const Matrix& a);
  /// x -> sum_ij e_ij x e_ji = tr(x) * 1.
  static GLMap trace_map(const RingContext& ctx);

  const RingContext& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }

  Matrix apply(const Matrix& x) const;
  GLMap star() const;
  /// (phi eta)(x) = phi(eta(x)).
  friend GLMap compose(const GLMap& phi, const GLMap& eta);
  friend GLMap operator+(const GLMap& a, const GLMap& b);

  /// Function equality on RC, decided on the four matrix units (both maps
  /// are C-linear).
  bool equals(const GLMap& other) const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  RingContext ctx_;
  std::vector<Term> terms_;
};

struct EquivalenceFlags {
  bool lhs = false;
  bool rhs = false;
};

/// lhs: phi([x, y]) = 0 on [RC, RC]; rhs: phi*(y) central for all y in RC.
EquivalenceFlags theorem32_equivalence(const GLMap& phi);

/// lhs: sum_j [a_j1, ..., a_jn, [x, y]] = 0 on [RC, RC];
/// rhs: sum_j (-1)^{n_j} [a_jn, ..., a_j1, z] central for all z in RC.
EquivalenceFlags lemma17_equivalence(const std::vector<std::vector<Matrix>>& families, const RingContext& ctx);

/// Noncentral abelian Lie ideals C(u + beta alpha_j v) + C of RC that are
/// not invariant under an X-outer derivation d.
struct AbelianFamily {
  Matrix u;
  Matrix v;
  Scalar beta;
  std::vector<Scalar> alphas;
  std::vector<Matrix> w;  ///< u + beta alpha_j v
  std::vector<AdditiveSubgroup> ideals;
};

/// Follows the constructive argument: u trace-zero with d(u^2) != 0, v with
/// [u, v] = 1, beta with d(beta) != 0, alpha_j among the squares of the
/// first k + 8 nonzero polynomials. DomainError when d is X-inner or the
/// bounded search fails.
AbelianFamily abelian_family(const DerivationExpr& d, int k, const RingContext& ctx);

}  // namespace exrings
