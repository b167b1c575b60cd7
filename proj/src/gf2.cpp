#include "exrings/gf2.hpp"

#include <bit>

namespace exrings {

BitVec& BitVec::operator^=(const BitVec& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVec::is_zero() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

int BitVec::lowest() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
  return -1;
}

BitVec Gf2Echelon::reduce(BitVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v ^= rows_[i];
  return v;
}

bool Gf2Echelon::insert(const BitVec& v) {
  BitVec r = reduce(v);
  int p = r.lowest();
  if (p < 0) return false;
  for (auto& row : rows_)
    if (row.get(p)) row ^= r;
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

bool Gf2Echelon::contains(const Gf2Echelon& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

}  // namespace exrings
