#include "exrings/linear_space.hpp"

namespace exrings {

CSubspace::CSubspace(RingContext rc) : rc_(rc.central_closure()) {}

CSubspace CSubspace::span(const RingContext& ctx, std::span<const Matrix> generators) {
  CSubspace s(ctx);
  for (const auto& g : generators) s.insert(g);
  return s;
}

CSubspace CSubspace::whole(const RingContext& ctx) {
  auto units = matrix_units(ctx.central_closure());
  return span(ctx, units);
}

CSubspace CSubspace::commutators(const RingContext& ctx) {
  RingContext rc = ctx.central_closure();
  std::vector<Matrix> gens;
  auto units = matrix_units(rc);
  for (const auto& x : units)
    for (const auto& y : units) gens.push_back(commutator(x, y));
  return span(ctx, gens);
}

CSubspace CSubspace::center(const RingContext& ctx) {
  std::vector<Matrix> one{Matrix::identity(ctx.central_closure())};
  return span(ctx, one);
}

CSubspace::Row CSubspace::to_row(const Matrix& m) const {
  Row r;
  for (int k = 0; k < 4; ++k) r[static_cast<std::size_t>(k)] = m.entry(k).lift_to(rc_.scalar);
  return r;
}

int CSubspace::reduce(Row& r) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto p = static_cast<std::size_t>(pivots_[i]);
    if (r[p].is_zero()) continue;
    Scalar f = r[p];
    for (std::size_t k = 0; k < 4; ++k)
      if (!rows_[i][k].is_zero()) r[k] = r[k] - f * rows_[i][k];
  }
  for (int k = 0; k < 4; ++k)
    if (!r[static_cast<std::size_t>(k)].is_zero()) return k;
  return -1;
}

bool CSubspace::insert(const Matrix& v) {
  Row r = to_row(v);
  int p = reduce(r);
  if (p < 0) return false;
  Scalar inv = r[static_cast<std::size_t>(p)].inverse();
  for (auto& x : r) x = x * inv;
  // Clear column p from the existing rows to stay fully reduced.
  for (auto& row : rows_) {
    const Scalar f = row[static_cast<std::size_t>(p)];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < 4; ++k) row[k] = row[k] - f * r[k];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), r);
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

bool CSubspace::contains(const Matrix& v) const {
  Row r = to_row(v);
  return reduce(r) < 0;
}

bool CSubspace::contains(const CSubspace& other) const {
  for (const auto& b : other.basis())
    if (!contains(b)) return false;
  return true;
}

std::optional<std::vector<Scalar>> CSubspace::coordinates(const Matrix& v) const {
  Row r = to_row(v);
  std::vector<Scalar> coords;
  for (std::size_t i = 0; i < rows_.size(); ++i) coords.push_back(r[static_cast<std::size_t>(pivots_[i])]);
  if (reduce(r) >= 0) return std::nullopt;
  return coords;
}

std::vector<Matrix> CSubspace::basis() const {
  std::vector<Matrix> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.emplace_back(rc_, r);
  return out;
}

bool operator==(const CSubspace& a, const CSubspace& b) {
  return a.rc_ == b.rc_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

CSubspace bracket_span(const CSubspace& u, const CSubspace& v) {
  CSubspace out(u.context());
  auto bu = u.basis();
  auto bv = v.basis();
  for (const auto& x : bu)
    for (const auto& y : bv) out.insert(commutator(x, y));
  return out;
}

std::optional<std::vector<Scalar>> solve_linear(const std::vector<std::vector<Scalar>>& a,
                                                const std::vector<Scalar>& b, FieldTag field) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  // Augmented matrix, Gauss-Jordan.
  std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols + 1, Scalar::zero(field)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j].lift_to(field);
    m[i][cols] = b[i].lift_to(field);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Scalar inv = m[r][c].inverse();
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!m[i][cols].is_zero()) return std::nullopt;
  std::vector<Scalar> x(cols, Scalar::zero(field));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][cols];
  return x;
}

}  // namespace exrings
