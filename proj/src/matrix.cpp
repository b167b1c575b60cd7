#include "exrings/matrix.hpp"

#include <cctype>

#include "exrings/linear_space.hpp"

namespace exrings {

RingContext::RingContext(FieldTag s, Restriction r) : scalar(s), restriction(r) {
  if (r == Restriction::AugmentationIdeal && s != FieldTag::Poly2)
    throw DomainError("the augmentation-ideal restriction requires GF(2)[t] scalars");
}

RingContext RingContext::parse(std::string_view spec) {
  if (spec == "m2-gf2") return {FieldTag::GF2};
  if (spec == "m2-gf3") return {FieldTag::GF3};
  if (spec == "m2-gf4") return {FieldTag::GF4};
  if (spec == "m2-poly2") return {FieldTag::Poly2};
  if (spec == "m2-tpoly2") return {FieldTag::Poly2, Restriction::AugmentationIdeal};
  if (spec == "m2-rat2") return {FieldTag::Rat2};
  throw ParseError("unknown ring spec '" + std::string(spec) + "'");
}

std::string RingContext::to_string() const {
  switch (scalar) {
    case FieldTag::GF2: return "m2-gf2";
    case FieldTag::GF3: return "m2-gf3";
    case FieldTag::GF4: return "m2-gf4";
    case FieldTag::Poly2: return restriction == Restriction::AugmentationIdeal ? "m2-tpoly2" : "m2-poly2";
    case FieldTag::Rat2: return "m2-rat2";
  }
  return "?";
}

RingContext RingContext::central_closure() const {
  if (scalar == FieldTag::Poly2) return {FieldTag::Rat2};
  return {scalar};
}

RingContext join(const RingContext& a, const RingContext& b) {
  if (a == b) return a;
  FieldTag level = join_levels(a.scalar, b.scalar);
  bool both_restricted =
      a.restriction == Restriction::AugmentationIdeal && b.restriction == Restriction::AugmentationIdeal;
  return {level, both_restricted ? Restriction::AugmentationIdeal : Restriction::Full};
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(RingContext ctx, std::array<Scalar, 4> entries) : ctx_(ctx), e_(std::move(entries)) {
  for (auto& s : e_) {
    if (s.tag() != ctx_.scalar) s = s.lift_to(ctx_.scalar);
    if (ctx_.restriction == Restriction::AugmentationIdeal && s.poly().coeff(0))
      throw DomainError("entry " + s.to_string() + " is not in t*GF(2)[t]");
  }
}

Matrix Matrix::zero(RingContext ctx) {
  Scalar z = Scalar::zero(ctx.scalar);
  return Matrix(ctx, {z, z, z, z});
}

Matrix Matrix::identity(RingContext ctx) { return scalar_matrix(ctx.ambient(), Scalar::one(ctx.scalar)); }

Matrix Matrix::unit(RingContext ctx, int i, int j) {
  if (i < 1 || i > 2 || j < 1 || j > 2) throw DomainError("matrix unit index out of range");
  Scalar z = Scalar::zero(ctx.scalar);
  std::array<Scalar, 4> e{z, z, z, z};
  e[static_cast<std::size_t>(2 * (i - 1) + (j - 1))] = Scalar::one(ctx.scalar);
  return Matrix(ctx.ambient(), std::move(e));
}

Matrix Matrix::scalar_matrix(RingContext ctx, const Scalar& c) {
  Scalar z = Scalar::zero(ctx.scalar);
  return Matrix(ctx, {c, z, z, c});
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  RingContext ctx = join(a.ctx_, b.ctx_);
  return Matrix(ctx, {a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2], a.e_[3] + b.e_[3]});
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  RingContext ctx = join(a.ctx_, b.ctx_);
  return Matrix(ctx, {a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2], a.e_[3] - b.e_[3]});
}

Matrix Matrix::operator-() const {
  return Matrix(ctx_, {-e_[0], -e_[1], -e_[2], -e_[3]});
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  RingContext ctx = join(a.ctx_, b.ctx_);
  const auto& x = a.e_;
  const auto& y = b.e_;
  return Matrix(ctx, {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                      x[2] * y[1] + x[3] * y[3]});
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  FieldTag level = join_levels(c.tag(), a.ctx_.scalar);
  RingContext ctx = a.ctx_;
  if (level != ctx.scalar) ctx = RingContext(level);
  // Scaling by a constant-term scalar may leave t*GF(2)[t]; the constructor
  // re-validates, so drop the restriction when c is not itself in the ideal.
  if (ctx.restriction == Restriction::AugmentationIdeal) ctx = ctx.ambient();
  return Matrix(ctx, {c * a.e_[0], c * a.e_[1], c * a.e_[2], c * a.e_[3]});
}

Scalar Matrix::trace() const { return e_[0] + e_[3]; }
Scalar Matrix::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

bool Matrix::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_scalar() const { return e_[1].is_zero() && e_[2].is_zero() && e_[0] == e_[3]; }

int Matrix::degree() const {
  int d = -1;
  for (const auto& s : e_) d = std::max(d, s.poly().degree());
  return d;
}

Matrix Matrix::lift_to(const RingContext& ctx) const {
  if (ctx == ctx_) return *this;
  return Matrix(ctx, e_);
}

std::string Matrix::to_string() const {
  return "[[" + e_[0].to_string() + "," + e_[1].to_string() + "],[" + e_[2].to_string() + "," + e_[3].to_string() +
         "]]";
}

namespace {

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

Matrix Matrix::parse(const RingContext& ctx, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() == 3 && s[0] == 'e' && (s[1] == '1' || s[1] == '2') && (s[2] == '1' || s[2] == '2')) {
    if (ctx.restriction == Restriction::AugmentationIdeal)
      throw ParseError("matrix unit " + s + " is not an element of M2(t*GF(2)[t])");
    return unit(ctx, s[1] - '0', s[2] - '0');
  }
  if (s == "0") return zero(ctx);
  if (s == "1") {
    if (ctx.restriction == Restriction::AugmentationIdeal)
      throw ParseError("the identity is not an element of M2(t*GF(2)[t])");
    return identity(ctx);
  }
  if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]")
    throw ParseError("malformed matrix literal: " + s);
  auto rows = split_top_level(s.substr(1, s.size() - 2), ',');
  if (rows.size() != 2) throw ParseError("matrix literal must have two rows: " + s);
  std::array<Scalar, 4> e;
  for (int r = 0; r < 2; ++r) {
    const std::string& row = rows[static_cast<std::size_t>(r)];
    if (row.size() < 2 || row.front() != '[' || row.back() != ']') throw ParseError("malformed matrix row: " + row);
    auto cells = split_top_level(row.substr(1, row.size() - 2), ',');
    if (cells.size() != 2) throw ParseError("matrix row must have two entries: " + row);
    for (int c = 0; c < 2; ++c)
      e[static_cast<std::size_t>(2 * r + c)] = Scalar::parse(ctx.scalar, cells[static_cast<std::size_t>(c)]);
  }
  try {
    return Matrix(ctx, std::move(e));
  } catch (const DomainError& err) {
    throw ParseError(err.what());
  }
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.ctx_.scalar == b.ctx_.scalar) return a.e_ == b.e_;
  for (int k = 0; k < 4; ++k)
    if (!(a.e_[static_cast<std::size_t>(k)] == b.e_[static_cast<std::size_t>(k)])) return false;
  return true;
}

bool operator<(const Matrix& a, const Matrix& b) { return a.e_ < b.e_; }

// ---------------------------------------------------------------- brackets

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.context().scalar != b.context().scalar) (void)join_levels(a.context().scalar, b.context().scalar);
  return a * b - b * a;
}

Matrix iterated_bracket(std::span<const Matrix> coeffs, const Matrix& x) {
  if (coeffs.empty()) throw DomainError("iterated bracket needs at least one coefficient");
  Matrix acc = x;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = commutator(coeffs[i], acc);
  return acc;
}

Matrix engel(std::span<const Matrix> args) {
  if (args.empty()) throw DomainError("Engel polynomial needs at least one argument");
  Matrix acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) acc = commutator(acc, args[i]);
  return acc;
}

bool is_central(const Matrix& a) { return a.is_scalar(); }

bool square_central(const Matrix& a) { return is_central(a * a); }

bool in_commutator_space(const Matrix& a) {
  if (!a.context().is_exceptional())
    throw DomainError("the trace criterion for [RC,RC] requires an exceptional (characteristic 2) context");
  return a.trace().is_zero();
}

bool in_commutator_span(const Matrix& a) {
  RingContext rc = a.context().central_closure();
  std::vector<Matrix> brackets;
  auto units = matrix_units(rc);
  for (const auto& x : units)
    for (const auto& y : units) brackets.push_back(commutator(x, y));
  return CSubspace::span(rc, brackets).contains(a);
}

std::vector<Matrix> matrix_units(const RingContext& ctx) {
  RingContext amb = ctx.ambient();
  return {Matrix::unit(amb, 1, 1), Matrix::unit(amb, 1, 2), Matrix::unit(amb, 2, 1), Matrix::unit(amb, 2, 2)};
}

}  // namespace exrings
