#include "exrings/glmap.hpp"

#include "exrings/linear_space.hpp"

namespace exrings {

GLMap::GLMap(RingContext ctx, std::vector<Term> terms) : ctx_(ctx.central_closure()) {
  for (auto& [a, b] : terms) terms_.emplace_back(a.lift_to(ctx_), b.lift_to(ctx_));
}

GLMap GLMap::identity(const RingContext& ctx) {
  RingContext rc = ctx.central_closure();
  return GLMap(rc, {{Matrix::identity(rc), Matrix::identity(rc)}});
}

GLMap GLMap::inner(const Matrix& a) {
  RingContext rc = a.context().central_closure();
  Matrix one = Matrix::identity(rc);
  return GLMap(rc, {{a, one}, {-one, a}});
}

GLMap GLMap::trace_map(const RingContext& ctx) {
  RingContext rc = ctx.central_closure();
  std::vector<Term> terms;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) terms.emplace_back(Matrix::unit(rc, i, j), Matrix::unit(rc, j, i));
  return GLMap(rc, std::move(terms));
}

Matrix GLMap::apply(const Matrix& x) const {
  Matrix acc = Matrix::zero(ctx_);
  Matrix y = x.lift_to(ctx_);
  for (const auto& [a, b] : terms_) acc = acc + a * y * b;
  return acc;
}

GLMap GLMap::star() const {
  std::vector<Term> swapped;
  swapped.reserve(terms_.size());
  for (const auto& [a, b] : terms_) swapped.emplace_back(b, a);
  return GLMap(ctx_, std::move(swapped));
}

GLMap compose(const GLMap& phi, const GLMap& eta) {
  std::vector<GLMap::Term> terms;
  for (const auto& [a, b] : phi.terms_)
    for (const auto& [c, d] : eta.terms_) terms.emplace_back(a * c, d * b);
  return GLMap(join(phi.ctx_, eta.ctx_), std::move(terms));
}

GLMap operator+(const GLMap& a, const GLMap& b) {
  std::vector<GLMap::Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return GLMap(join(a.ctx_, b.ctx_), std::move(terms));
}

bool GLMap::equals(const GLMap& other) const {
  for (const auto& u : matrix_units(ctx_))
    if (!(apply(u) == other.apply(u))) return false;
  return true;
}

bool GLMap::is_zero() const {
  for (const auto& u : matrix_units(ctx_))
    if (!apply(u).is_zero()) return false;
  return true;
}

std::string GLMap::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += ", ";
    s += "(" + terms_[i].first.to_string() + ", " + terms_[i].second.to_string() + ")";
  }
  return s + "}";
}

EquivalenceFlags theorem32_equivalence(const GLMap& phi) {
  EquivalenceFlags f{true, true};
  for (const auto& z : CSubspace::commutators(phi.context()).basis())
    if (!phi.apply(z).is_zero()) f.lhs = false;
  GLMap s = phi.star();
  for (const auto& y : matrix_units(phi.context()))
    if (!is_central(s.apply(y))) f.rhs = false;
  return f;
}

EquivalenceFlags lemma17_equivalence(const std::vector<std::vector<Matrix>>& families, const RingContext& ctx) {
  const RingContext rc = ctx.central_closure();
  EquivalenceFlags f{true, true};
  for (const auto& z : CSubspace::commutators(rc).basis()) {
    Matrix acc = Matrix::zero(rc);
    for (const auto& fam : families)
      if (!fam.empty()) acc = acc + iterated_bracket(fam, z);
    if (!acc.is_zero()) f.lhs = false;
  }
  for (const auto& z : matrix_units(rc)) {
    Matrix acc = Matrix::zero(rc);
    for (const auto& fam : families) {
      if (fam.empty()) continue;
      std::vector<Matrix> rev(fam.rbegin(), fam.rend());
      Matrix term = iterated_bracket(rev, z);
      if (fam.size() % 2 == 1) term = -term;
      acc = acc + term;
    }
    if (!is_central(acc)) f.rhs = false;
  }
  return f;
}

AbelianFamily abelian_family(const DerivationExpr& d, int k, const RingContext& ctx) {
  const RingContext rc = ctx.central_closure();
  if (rc.scalar != FieldTag::Rat2) throw DomainError("abelian families are built over M2(GF(2)(t))");
  if (k < 1) throw DomainError("family size must be positive");
  if (is_x_inner(d, rc).inner) throw DomainError("the derivation is X-inner");
  const Matrix e12 = Matrix::unit(rc, 1, 2);
  const Matrix e21 = Matrix::unit(rc, 2, 1);
  constexpr std::uint64_t kSearch = 64;

  std::optional<Matrix> u;
  for (std::uint64_t m = 1; m < kSearch && !u; ++m) {
    Matrix cand = e12 + Scalar(Rat(Poly::from_bits(m))) * e21;
    if (!apply_derivation(d, cand * cand).is_zero()) u = cand.lift_to(rc);
  }
  if (!u) throw DomainError("no trace-zero u with d(u^2) != 0 in the search range");

  // v in [RC, RC] with [u, v] = 1.
  auto tz = CSubspace::commutators(rc).basis();
  std::vector<std::vector<Scalar>> a(4);
  std::vector<Scalar> b;
  const Matrix one = Matrix::identity(rc);
  for (int row = 0; row < 4; ++row) {
    for (const auto& bz : tz) a[static_cast<std::size_t>(row)].push_back(commutator(*u, bz).entry(row));
    b.push_back(one.entry(row));
  }
  auto sol = solve_linear(a, b, rc.scalar);
  if (!sol) throw DomainError("no v with [u, v] = 1");
  Matrix v = Matrix::zero(rc);
  for (std::size_t i = 0; i < tz.size(); ++i) v = v + (*sol)[i] * tz[i];
  v = v.lift_to(rc);

  std::optional<Scalar> beta;
  for (std::uint64_t m = 2; m < kSearch && !beta; ++m) {
    Scalar cand = Scalar(Rat(Poly::from_bits(m)));
    if (!apply_scalar(d, cand).is_zero()) beta = cand;
  }
  if (!beta) throw DomainError("no central beta with d(beta) != 0 in the search range");

  AbelianFamily fam{*u, v, *beta, {}, {}, {}};
  for (int m = 1; m <= k + 8 && static_cast<int>(fam.alphas.size()) < k; ++m) {
    Poly p = Poly::from_bits(static_cast<std::uint64_t>(m));
    Scalar alpha = Scalar(Rat(p * p));
    Matrix w = (*u + (*beta * alpha) * v).lift_to(rc);
    if (apply_derivation(d, w * w).is_zero()) continue;
    fam.alphas.push_back(alpha);
    fam.w.push_back(w);
    fam.ideals.emplace_back(rc, std::vector<TaggedGenerator>{TaggedGenerator::bits(w), TaggedGenerator::bits(one)});
  }
  if (static_cast<int>(fam.alphas.size()) < k)
    throw DomainError("bounded search found only " + std::to_string(fam.alphas.size()) + " of " + std::to_string(k) +
                      " family members");
  return fam;
}

}  // namespace exrings
