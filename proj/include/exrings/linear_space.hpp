#pragma once

// Linear algebra over the extended centroid C (GF(2), GF(3), GF(4) or
// GF(2)(t)): C-spans of matrices inside RC and small linear solves.

#include <optional>
#include <span>
#include <vector>

#include "exrings/matrix.hpp"

namespace exrings {

/// A C-subspace of RC = M2(C), kept as a canonical reduced row-echelon basis
/// in the coordinates (e11, e12, e21, e22), so equality is a plain comparison.
class CSubspace {
 public:
  explicit CSubspace(RingContext rc);

  /// C-span of the given matrices (lifted into RC).
  static CSubspace span(const RingContext& ctx, std::span<const Matrix> generators);
  static CSubspace whole(const RingContext& ctx);
  /// [RC, RC]: the trace-zero matrices.
  static CSubspace commutators(const RingContext& ctx);
  static CSubspace center(const RingContext& ctx);

  const RingContext& context() const { return rc_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  std::vector<Matrix> basis() const;

  /// Adds v; returns true when the dimension grew.
  bool insert(const Matrix& v);
  bool contains(const Matrix& v) const;
  bool contains(const CSubspace& other) const;
  /// Coordinates of v in terms of basis(), if v lies in the span.
  std::optional<std::vector<Scalar>> coordinates(const Matrix& v) const;

  friend bool operator==(const CSubspace& a, const CSubspace& b);

 private:
  using Row = std::array<Scalar, 4>;
  Row to_row(const Matrix& m) const;
  /// Reduces r against the basis in place; returns the first nonzero column or -1.
  int reduce(Row& r) const;

  RingContext rc_;
  std::vector<Row> rows_;  // sorted by pivot, pivots normalised to 1
  std::vector<int> pivots_;
};

/// C-span of all [u, v] for u in U and v in V (exact, by bilinearity).
CSubspace bracket_span(const CSubspace& u, const CSubspace& v);

/// Solves A x = b over a field (A is rows x cols, row-major). Returns one
/// solution or nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const std::vector<std::vector<Scalar>>& a,
                                                const std::vector<Scalar>& b, FieldTag field);

}  // namespace exrings
