#include "exrings/derivation.hpp"

#include <cctype>

#include "exrings/linear_space.hpp"

namespace exrings {

struct DerivationExpr::Node {
  Kind kind;
  std::optional<Matrix> a;
  Scalar c;
  std::optional<DerivationExpr> left;
  std::optional<DerivationExpr> right;
};

DerivationExpr DerivationExpr::inner(Matrix a) {
  return DerivationExpr(std::make_shared<const Node>(Node{Kind::Inner, std::move(a), {}, std::nullopt, std::nullopt}));
}

DerivationExpr DerivationExpr::dt() {
  return DerivationExpr(std::make_shared<const Node>(Node{Kind::Dt, std::nullopt, {}, std::nullopt, std::nullopt}));
}

DerivationExpr DerivationExpr::scaled(Scalar c, DerivationExpr d) {
  return DerivationExpr(std::make_shared<const Node>(Node{Kind::Scaled, std::nullopt, std::move(c), std::move(d), std::nullopt}));
}

DerivationExpr DerivationExpr::sum(DerivationExpr a, DerivationExpr b) {
  return DerivationExpr(std::make_shared<const Node>(Node{Kind::Sum, std::nullopt, {}, std::move(a), std::move(b)}));
}

DerivationExpr::Kind DerivationExpr::kind() const { return node_->kind; }
const Matrix& DerivationExpr::inner_element() const { return *node_->a; }
const Scalar& DerivationExpr::scale() const { return node_->c; }
const DerivationExpr& DerivationExpr::left() const { return *node_->left; }
const DerivationExpr& DerivationExpr::right() const { return *node_->right; }

std::string DerivationExpr::to_string() const {
  switch (kind()) {
    case Kind::Inner: return "inner " + inner_element().to_string();
    case Kind::Dt: return "dt";
    case Kind::Scaled: return "scale (" + scale().to_string() + ") " + left().to_string();
    case Kind::Sum: return "sum(" + left().to_string() + ", " + right().to_string() + ")";
  }
  return {};
}

namespace {

class DerivationParser {
 public:
  DerivationParser(const RingContext& ctx, std::string_view text) : ctx_(ctx), s_(text) {}

  DerivationExpr parse_all() {
    DerivationExpr d = parse_expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("derivation spec: " + msg + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool keyword(std::string_view kw) {
    skip();
    if (s_.substr(pos_, kw.size()) != kw) return false;
    std::size_t end = pos_ + kw.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  /// Text up to the bracket matching the one at pos_ (inclusive).
  std::string balanced(char open, char close) {
    std::size_t start = pos_;
    int depth = 0;
    for (; pos_ < s_.size(); ++pos_) {
      if (s_[pos_] == open) ++depth;
      if (s_[pos_] == close && --depth == 0) {
        ++pos_;
        return std::string(s_.substr(start, pos_ - start));
      }
    }
    fail("unbalanced brackets");
  }

  DerivationExpr parse_expr() {
    skip();
    if (keyword("dt")) return DerivationExpr::dt();
    if (keyword("inner")) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '[') return DerivationExpr::inner(Matrix::parse(ctx_, balanced('[', ']')));
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a matrix");
      return DerivationExpr::inner(Matrix::parse(ctx_, s_.substr(start, pos_ - start)));
    }
    if (keyword("sum")) {
      expect('(');
      DerivationExpr a = parse_expr();
      expect(',');
      DerivationExpr b = parse_expr();
      expect(')');
      return DerivationExpr::sum(std::move(a), std::move(b));
    }
    if (keyword("scale")) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '(' after scale");
      std::string inside = balanced('(', ')');
      inside = inside.substr(1, inside.size() - 2);
      FieldTag level = ctx_.scalar == FieldTag::Poly2 ? FieldTag::Rat2 : ctx_.scalar;
      Scalar c = Scalar::parse(level, inside);
      return DerivationExpr::scaled(std::move(c), parse_expr());
    }
    fail("expected dt, inner, sum or scale");
  }

  RingContext ctx_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

DerivationExpr DerivationExpr::parse(const RingContext& ctx, std::string_view text) {
  return DerivationParser(ctx, text).parse_all();
}

Matrix apply_derivation(const DerivationExpr& d, const Matrix& x) {
  switch (d.kind()) {
    case DerivationExpr::Kind::Inner: return commutator(d.inner_element(), x);
    case DerivationExpr::Kind::Dt: {
      if (x.context().is_finite()) throw DomainError("the t-derivative is undefined over a finite field");
      const auto& e = x.entries();
      return Matrix(x.context().ambient(), {e[0].derivative(), e[1].derivative(), e[2].derivative(), e[3].derivative()});
    }
    case DerivationExpr::Kind::Scaled: return d.scale() * apply_derivation(d.left(), x);
    case DerivationExpr::Kind::Sum: return apply_derivation(d.left(), x) + apply_derivation(d.right(), x);
  }
  throw DomainError("bad derivation node");
}

Scalar apply_scalar(const DerivationExpr& d, const Scalar& beta) {
  switch (d.kind()) {
    case DerivationExpr::Kind::Inner: return Scalar::zero(beta.tag());
    case DerivationExpr::Kind::Dt: return beta.derivative();
    case DerivationExpr::Kind::Scaled: return d.scale() * apply_scalar(d.left(), beta);
    case DerivationExpr::Kind::Sum: return apply_scalar(d.left(), beta) + apply_scalar(d.right(), beta);
  }
  throw DomainError("bad derivation node");
}

DerivationNormalForm normal_form(const DerivationExpr& d, const RingContext& ctx) {
  const RingContext rc = ctx.central_closure();
  switch (d.kind()) {
    case DerivationExpr::Kind::Inner:
      return {Scalar::zero(rc.scalar), d.inner_element().lift_to(rc)};
    case DerivationExpr::Kind::Dt:
      if (rc.is_finite()) throw DomainError("the t-derivative is undefined over a finite field");
      return {Scalar::one(rc.scalar), Matrix::zero(rc)};
    case DerivationExpr::Kind::Scaled: {
      auto nf = normal_form(d.left(), ctx);
      Scalar s = d.scale().lift_to(rc.scalar);
      return {s * nf.c, (s * nf.a).lift_to(rc)};
    }
    case DerivationExpr::Kind::Sum: {
      auto l = normal_form(d.left(), ctx);
      auto r = normal_form(d.right(), ctx);
      return {l.c + r.c, (l.a + r.a).lift_to(rc)};
    }
  }
  throw DomainError("bad derivation node");
}

XInnerResult is_x_inner(const DerivationExpr& d, const RingContext& ctx) {
  const RingContext rc = ctx.central_closure();
  XInnerResult out;
  if (!rc.is_finite()) {
    // A derivation of M2(C) kills C iff it kills t (C = GF(2)(t) is generated by t).
    Scalar t = Scalar(Rat(Poly::t()));
    Scalar img = apply_scalar(d, t);
    if (!img.is_zero()) {
      out.beta = t;
      return out;
    }
  }
  auto units = matrix_units(rc);
  std::vector<std::vector<Scalar>> a;
  std::vector<Scalar> b;
  for (const auto& u : units) {
    Matrix target = apply_derivation(d, u).lift_to(rc);
    std::vector<Matrix> cols;
    for (const auto& e : units) cols.push_back(commutator(e, u));
    for (int k = 0; k < 4; ++k) {
      std::vector<Scalar> row;
      for (const auto& c : cols) row.push_back(c.entry(k));
      a.push_back(std::move(row));
      b.push_back(target.entry(k));
    }
  }
  auto sol = solve_linear(a, b, rc.scalar);
  if (!sol) return out;
  out.inner = true;
  out.witness = Matrix(rc, {(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]});
  return out;
}

std::vector<Matrix> operator_test_set(const RingContext& ctx) {
  const RingContext rc = ctx.central_closure();
  std::vector<Matrix> out = matrix_units(rc);
  if (!rc.is_finite()) {
    Scalar t = Scalar(Rat(Poly::t()));
    for (int k = 0; k < 4; ++k) out.push_back((t * out[static_cast<std::size_t>(k)]).lift_to(rc));
  }
  return out;
}

bool operators_equal(const Operator& p, const Operator& q, const RingContext& ctx) {
  for (const auto& z : operator_test_set(ctx))
    if (!(p(z) == q(z))) return false;
  return true;
}

bool derivations_equal(const DerivationExpr& a, const DerivationExpr& b, const RingContext& ctx) {
  return operators_equal(as_operator(a), as_operator(b), ctx);
}

bool is_zero_derivation(const DerivationExpr& d, const RingContext& ctx) {
  for (const auto& z : operator_test_set(ctx))
    if (!apply_derivation(d, z).is_zero()) return false;
  return true;
}

namespace {

std::vector<Matrix> with_t_multiples(const std::vector<Matrix>& basis, const RingContext& ctx) {
  const RingContext rc = ctx.central_closure();
  std::vector<Matrix> out;
  for (const auto& z : basis) {
    out.push_back(z.lift_to(rc));
    if (!rc.is_finite()) out.push_back((Scalar(Rat(Poly::t())) * z).lift_to(rc));
  }
  return out;
}

}  // namespace

bool maps_into_center(const Operator& p, const std::vector<Matrix>& basis, const RingContext& ctx) {
  for (const auto& z : with_t_multiples(basis, ctx))
    if (!is_central(p(z))) return false;
  return true;
}

bool vanishes_on(const Operator& p, const std::vector<Matrix>& basis, const RingContext& ctx) {
  for (const auto& z : with_t_multiples(basis, ctx))
    if (!p(z).is_zero()) return false;
  return true;
}

Operator as_operator(const DerivationExpr& d) {
  return [d](const Matrix& x) { return apply_derivation(d, x); };
}

Operator compose(Operator outer, Operator inner) {
  return [o = std::move(outer), i = std::move(inner)](const Matrix& x) { return o(i(x)); };
}

}  // namespace exrings
