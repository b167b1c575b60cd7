#pragma once

// 2x2 matrices over a scalar level, with the bracket operations used
// throughout: commutators, iterated brackets and Engel polynomials.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exrings/scalar.hpp"

namespace exrings {

enum class Restriction {
  Full,
  AugmentationIdeal,  ///< entries restricted to t*GF(2)[t]
};

/// Which ring R a matrix lives in. The central closure RC is the same
/// context over the fraction field (or the field itself for finite rings).
struct RingContext {
  FieldTag scalar = FieldTag::GF2;
  Restriction restriction = Restriction::Full;

  RingContext() = default;
  RingContext(FieldTag s, Restriction r = Restriction::Full);

  static RingContext parse(std::string_view spec);  ///< "m2-gf2", "m2-tpoly2", ...
  std::string to_string() const;

  /// RC: M2 over the extended centroid.
  RingContext central_closure() const;
  /// M2 over the ambient scalar ring, dropping any restriction.
  RingContext ambient() const { return {scalar, Restriction::Full}; }

  bool is_finite() const { return is_finite_field(scalar); }
  bool is_polynomial() const { return scalar == FieldTag::Poly2; }
  bool is_exceptional() const { return characteristic(scalar) == 2; }

  friend bool operator==(const RingContext&, const RingContext&) = default;
};

/// Join of two contexts: levels join (Poly2 v Rat2 = Rat2); the restriction
/// survives only if both operands carry it.
RingContext join(const RingContext& a, const RingContext& b);

class Matrix {
 public:
  /// Validates that every entry lives at the context's level and satisfies
  /// its restriction.
  Matrix(RingContext ctx, std::array<Scalar, 4> entries);

  static Matrix zero(RingContext ctx);
  static Matrix identity(RingContext ctx);
  /// Matrix unit e_ij with 1-based indices, in the ambient (unrestricted) ring.
  static Matrix unit(RingContext ctx, int i, int j);
  static Matrix scalar_matrix(RingContext ctx, const Scalar& c);

  const RingContext& context() const { return ctx_; }
  /// 0-based entry access; entry index k = 2*row + col.
  const Scalar& at(int row, int col) const { return e_[static_cast<std::size_t>(2 * row + col)]; }
  const Scalar& entry(int k) const { return e_[static_cast<std::size_t>(k)]; }
  const std::array<Scalar, 4>& entries() const { return e_; }

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& a);
  Matrix operator-() const;

  Scalar trace() const;
  Scalar det() const;
  bool is_zero() const;
  /// a = c*1 for a scalar c of the context.
  bool is_scalar() const;
  /// Largest entry degree (Poly2 only); -1 for the zero matrix.
  int degree() const;

  /// Re-expresses this matrix in ctx (Poly2 -> Rat2 promotion, or dropping /
  /// imposing the augmentation restriction with validation).
  Matrix lift_to(const RingContext& ctx) const;

  /// "[[a,b],[c,d]]"
  std::string to_string() const;
  /// Accepts "[[t, t],[t, t]]" literals and the shorthand "e11".."e22", "1", "0".
  static Matrix parse(const RingContext& ctx, std::string_view text);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  RingContext ctx_;
  std::array<Scalar, 4> e_;
};

/// ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

/// [a_1, ..., a_n, x] = ad_{a_1} ... ad_{a_n}(x); innermost bracket uses a_n.
Matrix iterated_bracket(std::span<const Matrix> coeffs, const Matrix& x);

/// E_1(x) = x, E_{k+1}(x_1..x_{k+1}) = [E_k(x_1..x_k), x_{k+1}].
Matrix engel(std::span<const Matrix> args);

/// a is a scalar multiple of the identity.
bool is_central(const Matrix& a);

/// a^2 is central (the square-central test).
bool square_central(const Matrix& a);

/// Membership in [RC, RC] by the trace criterion (tr a = 0). Requires a
/// characteristic-2 context; DomainError on GF(3).
bool in_commutator_space(const Matrix& a);

/// Independent oracle: a lies in the C-span of all commutators of RC,
/// decided by Gaussian elimination over the extended centroid.
bool in_commutator_span(const Matrix& a);

/// The four matrix units of RC (e11, e12, e21, e22).
std::vector<Matrix> matrix_units(const RingContext& ctx);

}  // namespace exrings
