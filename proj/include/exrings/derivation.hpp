#pragma once

// Derivations of the matrix contexts: inner derivations, the entrywise
// t-derivative, scalings and sums, plus operator identities decided on a
// finite test set.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exrings/matrix.hpp"

namespace exrings {

class DerivationExpr {
 public:
  enum class Kind { Inner, Dt, Scaled, Sum };

  static DerivationExpr inner(Matrix a);
  static DerivationExpr dt();
  static DerivationExpr scaled(Scalar c, DerivationExpr d);
  static DerivationExpr sum(DerivationExpr a, DerivationExpr b);

  Kind kind() const;
  const Matrix& inner_element() const;
  const Scalar& scale() const;
  const DerivationExpr& left() const;   ///< operand of Scaled, or first summand
  const DerivationExpr& right() const;  ///< second summand

  /// Mini-language: "inner [[0,1],[0,0]]", "dt", "sum(dt, inner e11)",
  /// "scale (t) dt".
  std::string to_string() const;
  static DerivationExpr parse(const RingContext& ctx, std::string_view text);

 private:
  struct Node;
  explicit DerivationExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// D(x). The entrywise t-derivative raises DomainError on finite fields.
Matrix apply_derivation(const DerivationExpr& d, const Matrix& x);
/// D(beta) for a central scalar beta.
Scalar apply_scalar(const DerivationExpr& d, const Scalar& beta);

/// Every derivation here is c*dt + ad_a over RC.
struct DerivationNormalForm {
  Scalar c;
  Matrix a;
};
DerivationNormalForm normal_form(const DerivationExpr& d, const RingContext& ctx);

struct XInnerResult {
  bool inner = false;
  std::optional<Matrix> witness;  ///< a with D = ad_a on RC
  std::optional<Scalar> beta;     ///< central beta with D(beta) != 0
};
/// Skolem-Noether reduction: a derivation killing the centre is inner; the
/// witness comes from the 16-equation system D(e_ij) = [a, e_ij] over C.
XInnerResult is_x_inner(const DerivationExpr& d, const RingContext& ctx);

using Operator = std::function<Matrix(const Matrix&)>;

/// Elements on which operators built from derivations and left/right
/// multiplications are compared: the matrix units, and over GF(2)[t] or
/// GF(2)(t) also t times each unit and t*1. Compositions of derivations in
/// characteristic 2 satisfy P(f z) = f A(z) + f' B(z), so z and t z decide P.
std::vector<Matrix> operator_test_set(const RingContext& ctx);

bool operators_equal(const Operator& p, const Operator& q, const RingContext& ctx);
bool derivations_equal(const DerivationExpr& a, const DerivationExpr& b, const RingContext& ctx);
bool is_zero_derivation(const DerivationExpr& d, const RingContext& ctx);

/// True when P maps the C-span of `basis` into C. Tests z and t z for each
/// basis element z (exact by the identity above).
bool maps_into_center(const Operator& p, const std::vector<Matrix>& basis, const RingContext& ctx);
/// True when P vanishes on the C-span of `basis`.
bool vanishes_on(const Operator& p, const std::vector<Matrix>& basis, const RingContext& ctx);

Operator as_operator(const DerivationExpr& d);
Operator compose(Operator outer, Operator inner);

}  // namespace exrings
