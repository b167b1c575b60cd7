#pragma once

// Dense GF(2) vectors and canonical reduced echelon bases.

#include <cstdint>
#include <vector>

namespace exrings {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int nbits) : nbits_(nbits), words_(static_cast<std::size_t>((nbits + 63) / 64), 0) {}

  int size() const { return nbits_; }
  bool get(int i) const { return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U; }
  void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void flip(int i) { words_[static_cast<std::size_t>(i >> 6)] ^= std::uint64_t{1} << (i & 63); }
  BitVec& operator^=(const BitVec& o);
  bool is_zero() const;
  /// Index of the lowest set bit, or -1.
  int lowest() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend bool operator<(const BitVec& a, const BitVec& b) { return a.words_ < b.words_; }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Subspace of GF(2)^n in canonical form: the pivot of a row is its lowest
/// set bit, every pivot column is zero in all other rows, rows are sorted by
/// pivot. Two subspaces are equal iff their echelon forms are equal.
class Gf2Echelon {
 public:
  Gf2Echelon() = default;
  explicit Gf2Echelon(int nbits) : nbits_(nbits) {}

  int nbits() const { return nbits_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Returns true when v enlarged the span.
  bool insert(const BitVec& v);
  /// v minus its projection on the span (zero iff v is in the span).
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return reduce(v).is_zero(); }
  bool contains(const Gf2Echelon& other) const;

  friend bool operator==(const Gf2Echelon& a, const Gf2Echelon& b) {
    return a.nbits_ == b.nbits_ && a.rows_ == b.rows_;
  }

 private:
  int nbits_ = 0;
  std::vector<BitVec> rows_;
  std::vector<int> pivots_;
};

}  // namespace exrings
