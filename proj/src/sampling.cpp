#include "exrings/sampling.hpp"

namespace exrings {

Poly random_poly(Rng& rng, int max_degree) {
  const int bits = max_degree + 1;
  std::uint64_t mask = bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  return Poly::from_bits(rng.next() & mask);
}

Poly random_nonzero_poly(Rng& rng, int max_degree) {
  for (;;) {
    Poly p = random_poly(rng, max_degree);
    if (!p.is_zero()) return p;
  }
}

Scalar random_scalar(Rng& rng, FieldTag tag, int max_degree) {
  switch (tag) {
    case FieldTag::GF2: return Scalar::from_code(tag, rng.below(2));
    case FieldTag::GF3: return Scalar::from_code(tag, rng.below(3));
    case FieldTag::GF4: return Scalar::from_code(tag, rng.below(4));
    case FieldTag::Poly2: return Scalar(random_poly(rng, max_degree));
    case FieldTag::Rat2: {
      Poly num = random_poly(rng, max_degree);
      Poly den = random_nonzero_poly(rng, max_degree);
      return Scalar(Rat(num, den));
    }
  }
  return Scalar::zero(tag);
}

Scalar random_nonzero_scalar(Rng& rng, FieldTag tag, int max_degree) {
  for (;;) {
    Scalar s = random_scalar(rng, tag, max_degree);
    if (!s.is_zero()) return s;
  }
}

namespace {

Scalar entry_for(Rng& rng, const RingContext& ctx, int max_degree) {
  if (ctx.restriction == Restriction::AugmentationIdeal)
    return Scalar(random_poly(rng, std::max(0, max_degree - 1)).shifted(1));
  return random_scalar(rng, ctx.scalar, max_degree);
}

}  // namespace

Matrix random_matrix(Rng& rng, const RingContext& ctx, int max_degree) {
  std::array<Scalar, 4> e;
  for (auto& s : e) s = entry_for(rng, ctx, max_degree);
  return Matrix(ctx, std::move(e));
}

Matrix random_trace_zero(Rng& rng, const RingContext& ctx, int max_degree) {
  Scalar a = entry_for(rng, ctx, max_degree);
  Scalar b = entry_for(rng, ctx, max_degree);
  Scalar c = entry_for(rng, ctx, max_degree);
  return Matrix(ctx, {a, b, c, -a});
}

Matrix random_noncentral(Rng& rng, const RingContext& ctx, bool trace_zero, int max_degree) {
  for (;;) {
    Matrix m = trace_zero ? random_trace_zero(rng, ctx, max_degree) : random_matrix(rng, ctx, max_degree);
    if (m.is_scalar()) continue;
    if (!trace_zero && m.trace().is_zero()) continue;
    return m;
  }
}

}  // namespace exrings
