#pragma once

// Table-driven M2 over GF(2), GF(3) and GF(4) for exhaustive checks.
// Elements are small integer codes; subspaces are enumerated once each by
// their canonical reduced echelon form.

#include <bitset>
#include <functional>
#include <vector>

#include "exrings/matrix.hpp"
#include "exrings/subgroup.hpp"

namespace exrings {

/// An additive subgroup of a finite M2 ring, which is exactly a subspace
/// over the prime field.
struct FiniteSubspace {
  std::vector<int> basis;    ///< canonical echelon basis, as element codes
  std::bitset<256> members;  ///< membership by code
  int dimension() const { return static_cast<int>(basis.size()); }
  bool contains(int code) const { return members.test(static_cast<std::size_t>(code)); }
  bool contains(const FiniteSubspace& other) const { return (other.members & ~members).none(); }
};

class FiniteRing {
 public:
  /// Shared instance for GF2, GF3 or GF4 (thread-safe lazy construction).
  static const FiniteRing& get(FieldTag field);

  FieldTag field() const { return field_; }
  RingContext context() const { return RingContext(field_); }
  int prime() const { return p_; }
  /// Dimension over the prime field (4, 4 or 8).
  int dimension() const { return n_; }
  int size() const { return size_; }

  Matrix element(int code) const { return elements_[static_cast<std::size_t>(code)]; }
  int code(const Matrix& m) const;

  int add(int a, int b) const { return add_[index(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int mul(int a, int b) const { return mul_[index(a, b)]; }
  int bracket(int a, int b) const { return add(mul(a, b), neg(mul(b, a))); }
  int scale(int digit, int a) const;

  bool is_central(int a) const { return central_.test(static_cast<std::size_t>(a)); }
  bool trace_zero(int a) const { return trace_zero_.test(static_cast<std::size_t>(a)); }
  int zero() const { return 0; }
  int identity() const { return identity_; }

  /// Prime-field basis of the ring (the unit vectors of the code space).
  const std::vector<int>& additive_basis() const { return basis_; }
  const FiniteSubspace& whole() const { return whole_; }
  const FiniteSubspace& center() const { return center_sub_; }
  const FiniteSubspace& commutators() const { return commutators_; }

  /// Prime-field span of the given codes.
  FiniteSubspace span(const std::vector<int>& codes) const;

  /// Calls fn on every subspace exactly once, in a fixed order. With
  /// workers > 1 only subspaces whose ordinal is congruent to worker are
  /// visited. Returns the number of subspaces visited.
  long for_each_subspace(const std::function<void(const FiniteSubspace&)>& fn, int worker = 0, int workers = 1) const;

  /// Subring generated by the subspace (closure under products and sums).
  FiniteSubspace subring_closure(const FiniteSubspace& s) const;
  bool is_lie_ideal(const FiniteSubspace& s) const;
  bool is_subring(const FiniteSubspace& s) const;
  /// Prime-field span of all [a, b] with a in A, b in B.
  FiniteSubspace bracket_span(const FiniteSubspace& a, const FiniteSubspace& b) const;
  /// Every Lie ideal of the ring (cached).
  const std::vector<FiniteSubspace>& lie_ideals() const;

  AdditiveSubgroup to_subgroup(const FiniteSubspace& s) const;

 private:
  explicit FiniteRing(FieldTag field);
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(b); }

  FieldTag field_;
  int p_;
  int n_;
  int size_;
  int identity_ = 0;
  std::vector<Matrix> elements_;
  std::vector<int> add_;
  std::vector<int> neg_;
  std::vector<int> mul_;
  std::bitset<256> central_;
  std::bitset<256> trace_zero_;
  std::vector<int> basis_;
  FiniteSubspace whole_;
  FiniteSubspace center_sub_;
  FiniteSubspace commutators_;
};

}  // namespace exrings
