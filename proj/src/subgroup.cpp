#include "exrings/subgroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace exrings {

namespace {

bool is_poly_context(const RingContext& ctx) { return ctx.scalar == FieldTag::Poly2; }

bool has_gf2_coordinates(const RingContext& ctx) {
  return ctx.scalar == FieldTag::GF2 || ctx.scalar == FieldTag::GF4 || ctx.scalar == FieldTag::Poly2;
}

void require_gf2_coordinates(const RingContext& ctx) {
  if (!has_gf2_coordinates(ctx))
    throw DomainError("additive subgroups of " + ctx.to_string() + " have no GF(2) slice");
}

Matrix times_poly(const Poly& p, const Matrix& m) { return (Scalar(p) * m).lift_to(m.context()); }

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

using PolyRow = std::array<Poly, 4>;

int row_degree(const PolyRow& r) {
  int d = -1;
  for (const auto& p : r) d = std::max(d, p.degree());
  return d;
}

int leading_position(const PolyRow& r) {
  int d = row_degree(r);
  for (int j = 3; j >= 0; --j)
    if (r[static_cast<std::size_t>(j)].degree() == d) return j;
  return -1;
}

}  // namespace

// ------------------------------------------------------------ generators

Matrix TaggedGenerator::base() const {
  if (domain == MultiplierDomain::PolyIdeal) return times_poly(ideal, element);
  return element;
}

std::string TaggedGenerator::to_string() const {
  switch (domain) {
    case MultiplierDomain::Bits: return "bits " + element.to_string();
    case MultiplierDomain::PolyFull: return "poly-full " + element.to_string();
    case MultiplierDomain::PolyIdeal: return "poly-ideal " + ideal.to_string() + " " + element.to_string();
  }
  return {};
}

AdditiveSubgroup::AdditiveSubgroup(RingContext ctx, std::vector<TaggedGenerator> generators) : ctx_(ctx) {
  for (auto& g : generators) add(std::move(g));
}

void AdditiveSubgroup::add(TaggedGenerator g) {
  if (g.is_module() && !is_poly_context(ctx_))
    throw DomainError("polynomial multiplier tags require a GF(2)[t] context");
  if (g.domain == MultiplierDomain::PolyIdeal && g.ideal.is_zero())
    throw DomainError("poly-ideal generator needs a nonzero polynomial");
  g.element = g.element.lift_to(ctx_);
  gens_.push_back(std::move(g));
}

AdditiveSubgroup AdditiveSubgroup::parse(const RingContext& ctx, std::string_view text) {
  AdditiveSubgroup out(ctx);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(std::string_view(line).substr(0, line.find('#')));
    if (s.empty()) continue;
    auto sp = s.find_first_of(" \t");
    if (sp == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": missing matrix");
    std::string kw = s.substr(0, sp);
    std::string rest = trim(std::string_view(s).substr(sp));
    try {
      if (kw == "bits") {
        out.add(TaggedGenerator::bits(Matrix::parse(ctx, rest)));
      } else if (kw == "poly-full") {
        out.add(TaggedGenerator::poly_full(Matrix::parse(ctx, rest)));
      } else if (kw == "poly-ideal") {
        auto sp2 = rest.find_first_of(" \t");
        if (sp2 == std::string::npos) throw ParseError("poly-ideal needs a polynomial and a matrix");
        Poly g = Poly::parse(rest.substr(0, sp2));
        out.add(TaggedGenerator::poly_ideal(g, Matrix::parse(ctx, trim(std::string_view(rest).substr(sp2)))));
      } else {
        throw ParseError("unknown generator tag '" + kw + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const DomainError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string AdditiveSubgroup::to_string() const {
  std::string s;
  for (const auto& g : gens_) s += g.to_string() + "\n";
  return s;
}

std::vector<Matrix> AdditiveSubgroup::bit_elements() const {
  std::vector<Matrix> out;
  for (const auto& g : gens_)
    if (!g.is_module()) out.push_back(g.element);
  return out;
}

std::vector<Matrix> AdditiveSubgroup::module_elements() const {
  std::vector<Matrix> out;
  for (const auto& g : gens_)
    if (g.is_module()) out.push_back(g.base());
  return out;
}

AdditiveSubgroup AdditiveSubgroup::module_part() const {
  AdditiveSubgroup out(ctx_);
  for (const auto& g : gens_)
    if (g.is_module()) out.add(g);
  return out;
}

bool AdditiveSubgroup::is_central() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const TaggedGenerator& g) { return g.element.is_scalar(); });
}

bool AdditiveSubgroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!commutator(gens_[i].element, gens_[j].element).is_zero()) return false;
  return true;
}

int AdditiveSubgroup::max_degree() const {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, g.base().degree());
  return d;
}

// ------------------------------------------------------------ standard subgroups

std::vector<Matrix> ring_generators(const RingContext& ctx) {
  std::vector<Matrix> units;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) units.push_back(Matrix::unit(ctx, i, j));
  if (ctx.scalar == FieldTag::GF4) {
    Scalar u = Scalar::from_code(FieldTag::GF4, 2);
    for (int k = 0; k < 4; ++k) units.push_back(u * units[static_cast<std::size_t>(k)]);
  }
  if (ctx.restriction == Restriction::AugmentationIdeal) {
    for (auto& m : units) m = times_poly(Poly::t(), m).lift_to(ctx);
  }
  return units;
}

namespace {

std::vector<Matrix> central_basis(const RingContext& ctx) {
  RingContext amb = ctx.ambient();
  std::vector<Matrix> out{Matrix::identity(amb)};
  if (ctx.scalar == FieldTag::GF4) out.push_back(Matrix::scalar_matrix(amb, Scalar::from_code(FieldTag::GF4, 2)));
  return out;
}

std::vector<Matrix> trace_zero_basis(const RingContext& ctx) {
  RingContext amb = ctx.ambient();
  Scalar one = Scalar::one(ctx.scalar);
  Scalar zero = Scalar::zero(ctx.scalar);
  std::vector<Matrix> base{Matrix(amb, {one, zero, zero, -one}), Matrix::unit(amb, 1, 2), Matrix::unit(amb, 2, 1)};
  if (ctx.scalar == FieldTag::GF4) {
    Scalar u = Scalar::from_code(FieldTag::GF4, 2);
    for (int k = 0; k < 3; ++k) base.push_back(u * base[static_cast<std::size_t>(k)]);
  }
  return base;
}

AdditiveSubgroup from_elements(const RingContext& ctx, const std::vector<Matrix>& elems, Poly scale) {
  AdditiveSubgroup out(ctx);
  for (const auto& m : elems) {
    if (is_poly_context(ctx))
      out.add(TaggedGenerator::poly_full(times_poly(scale, m).lift_to(ctx)));
    else
      out.add(TaggedGenerator::bits(m));
  }
  return out;
}

Poly restriction_scale(const RingContext& ctx, int power) {
  return ctx.restriction == Restriction::AugmentationIdeal ? Poly::monomial(power) : Poly::one();
}

}  // namespace

AdditiveSubgroup whole_ring(const RingContext& ctx) {
  RingContext amb = ctx.ambient();
  std::vector<Matrix> gens = ring_generators(amb);
  return from_elements(ctx, gens, restriction_scale(ctx, 1));
}

AdditiveSubgroup center_subgroup(const RingContext& ctx) {
  return from_elements(ctx, central_basis(ctx), restriction_scale(ctx, 1));
}

AdditiveSubgroup commutator_subgroup(const RingContext& ctx) {
  // [tS, tS] = t^2 [S, S].
  return from_elements(ctx, trace_zero_basis(ctx), restriction_scale(ctx, 2));
}

AdditiveSubgroup principal_ideal(const RingContext& ctx, const Poly& g) {
  if (!is_poly_context(ctx)) throw DomainError("principal ideals are only modelled over GF(2)[t]");
  if (ctx.restriction == Restriction::AugmentationIdeal && g.coeff(0))
    throw DomainError("an ideal of M2(t*GF(2)[t]) needs t | g");
  AdditiveSubgroup out(ctx);
  for (const auto& u : ring_generators(ctx.ambient())) out.add(TaggedGenerator::poly_full(times_poly(g, u).lift_to(ctx)));
  return out;
}

// ------------------------------------------------------------ slices

TruncatedSlice::TruncatedSlice(RingContext ctx, int degree_bound) : ctx_(ctx), n_(degree_bound) {
  require_gf2_coordinates(ctx_);
  if (!is_poly_context(ctx_)) n_ = 1;
  if (n_ < 1) throw DomainError("the degree bound must be at least 1");
  basis_ = Gf2Echelon(4 * width());
}

int TruncatedSlice::width() const {
  switch (ctx_.scalar) {
    case FieldTag::GF2: return 1;
    case FieldTag::GF4: return 2;
    default: return n_;
  }
}

std::optional<BitVec> TruncatedSlice::encode(const Matrix& m) const {
  const int w = width();
  BitVec v(4 * w);
  for (int k = 0; k < 4; ++k) {
    const Scalar s = m.entry(k).lift_to(ctx_.scalar);
    switch (ctx_.scalar) {
      case FieldTag::GF2:
        if (!s.is_zero()) v.set(k);
        break;
      case FieldTag::GF4: {
        auto code = std::get<Gf4>(s.storage()).v;
        if (code & 1U) v.set(2 * k);
        if (code & 2U) v.set(2 * k + 1);
        break;
      }
      default: {
        const Poly& p = s.poly();
        if (p.degree() >= w) return std::nullopt;
        for (int d = 0; d <= p.degree(); ++d)
          if (p.coeff(d)) v.set(k * w + d);
      }
    }
  }
  return v;
}

Matrix TruncatedSlice::decode(const BitVec& v) const {
  const int w = width();
  std::array<Scalar, 4> e;
  for (int k = 0; k < 4; ++k) {
    std::uint64_t bits = 0;
    std::vector<std::uint64_t> words(static_cast<std::size_t>((w + 63) / 64), 0);
    for (int d = 0; d < w; ++d)
      if (v.get(k * w + d)) words[static_cast<std::size_t>(d >> 6)] |= std::uint64_t{1} << (d & 63);
    bits = words.empty() ? 0 : words[0];
    switch (ctx_.scalar) {
      case FieldTag::GF2: e[static_cast<std::size_t>(k)] = Scalar::from_code(FieldTag::GF2, bits); break;
      case FieldTag::GF4: e[static_cast<std::size_t>(k)] = Scalar::from_code(FieldTag::GF4, bits); break;
      default: e[static_cast<std::size_t>(k)] = Scalar(Poly::from_words(std::move(words)));
    }
  }
  return Matrix(ctx_, std::move(e));
}

std::vector<Matrix> TruncatedSlice::basis() const {
  std::vector<Matrix> out;
  out.reserve(basis_.rows().size());
  for (const auto& r : basis_.rows()) out.push_back(decode(r));
  return out;
}

bool TruncatedSlice::contains(const Matrix& x) const {
  auto v = encode(x);
  if (!v) throw DomainError("element " + x.to_string() + " exceeds the degree window " + std::to_string(n_));
  return basis_.contains(*v);
}

bool TruncatedSlice::contains(const TruncatedSlice& other) const {
  if (other.ctx_.scalar != ctx_.scalar || other.n_ > n_) {
    for (const auto& m : other.basis())
      if (!contains(m)) return false;
    return true;
  }
  if (other.n_ == n_) return basis_.contains(other.basis_);
  for (const auto& m : other.basis())
    if (!contains(m)) return false;
  return true;
}

void TruncatedSlice::insert(const Matrix& x) {
  auto v = encode(x);
  if (!v) throw DomainError("element " + x.to_string() + " exceeds the degree window " + std::to_string(n_));
  basis_.insert(*v);
}

std::vector<Matrix> reduced_module_basis(const RingContext& ctx, const std::vector<Matrix>& rows) {
  std::vector<PolyRow> r;
  for (const auto& m : rows) {
    PolyRow p;
    for (int k = 0; k < 4; ++k) p[static_cast<std::size_t>(k)] = m.entry(k).lift_to(FieldTag::Poly2).poly();
    if (row_degree(p) >= 0) r.push_back(std::move(p));
  }
  // Mulders-Storjohann simple transformations until leading positions differ.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < r.size() && !changed; ++i) {
      for (std::size_t j = 0; j < r.size() && !changed; ++j) {
        if (i == j || leading_position(r[i]) != leading_position(r[j])) continue;
        const int di = row_degree(r[i]);
        const int dj = row_degree(r[j]);
        if (di < dj) continue;
        for (std::size_t k = 0; k < 4; ++k) r[i][k] += r[j][k].shifted(di - dj);
        if (row_degree(r[i]) < 0) r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      }
    }
  }
  std::sort(r.begin(), r.end(), [](const PolyRow& a, const PolyRow& b) {
    return leading_position(a) < leading_position(b);
  });
  std::vector<Matrix> out;
  for (auto& p : r) out.emplace_back(ctx, std::array<Scalar, 4>{Scalar(p[0]), Scalar(p[1]), Scalar(p[2]), Scalar(p[3])});
  return out;
}

TruncatedSlice slice(const AdditiveSubgroup& a, int degree_bound) {
  const RingContext& ctx = a.context();
  TruncatedSlice out(ctx, degree_bound);
  if (!is_poly_context(ctx)) {
    for (const auto& g : a.generators()) out.insert(g.element);
    return out;
  }
  const int n = out.n_;
  std::vector<Matrix> mods = reduced_module_basis(ctx, a.module_elements());
  std::vector<Matrix> bits = a.bit_elements();
  int wide = n;
  for (const auto& b : bits) wide = std::max(wide, b.degree() + 1);
  const int high = wide - n;
  // High-degree coordinates come first so that rows pivoting in the low part
  // span exactly the degree-< N intersection.
  auto index = [&](int e, int d) { return d >= n ? e * high + (d - n) : 4 * high + e * n + d; };
  auto encode_wide = [&](const Matrix& m, int shift) {
    BitVec v(4 * wide);
    for (int e = 0; e < 4; ++e) {
      const Poly& p = m.entry(e).poly();
      for (int d = 0; d <= p.degree(); ++d)
        if (p.coeff(d)) v.set(index(e, d + shift));
    }
    return v;
  };
  Gf2Echelon ext(4 * wide);
  for (const auto& b : mods)
    for (int k = 0; k + b.degree() < wide; ++k) ext.insert(encode_wide(b, k));
  for (const auto& b : bits) ext.insert(encode_wide(b, 0));
  const int cut = 4 * high;
  for (std::size_t i = 0; i < ext.rows().size(); ++i) {
    if (ext.pivots()[i] < cut) continue;
    BitVec w(4 * n);
    const BitVec& row = ext.rows()[i];
    for (int idx = cut; idx < 4 * wide; ++idx)
      if (row.get(idx)) w.set(idx - cut);
    out.basis_.insert(w);
  }
  return out;
}

bool contains(const AdditiveSubgroup& a, const Matrix& x, int degree_bound) {
  return slice(a, degree_bound).contains(x);
}

bool contains(const AdditiveSubgroup& a, const Matrix& x) {
  if (x.is_zero()) return true;
  int n = is_poly_context(a.context()) ? x.degree() + 1 : 1;
  return slice(a, n).contains(x);
}

// ------------------------------------------------------------ operations

namespace {

/// Drops zero generators, puts module generators in weak Popov form and
/// removes GF(2) generators already in the span of the others.
AdditiveSubgroup normalize(const RingContext& ctx, const std::vector<Matrix>& bits, const std::vector<Matrix>& mods) {
  AdditiveSubgroup out(ctx);
  if (!has_gf2_coordinates(ctx)) {
    for (const auto& m : mods)
      if (!m.is_zero()) out.add(TaggedGenerator::poly_full(m));
    for (const auto& b : bits)
      if (!b.is_zero()) out.add(TaggedGenerator::bits(b));
    return out;
  }
  for (auto& m : reduced_module_basis(ctx, mods)) out.add(TaggedGenerator::poly_full(m));
  int n = 1;
  for (const auto& b : bits) n = std::max(n, b.degree() + 1);
  TruncatedSlice acc = slice(out, n);
  for (const auto& b : bits) {
    if (b.is_zero() || acc.contains(b)) continue;
    acc.insert(b);
    out.add(TaggedGenerator::bits(b));
  }
  return out;
}

template <typename Op>
AdditiveSubgroup combine(const AdditiveSubgroup& a, const AdditiveSubgroup& b, Op op) {
  RingContext ctx = join(a.context(), b.context());
  std::vector<Matrix> bits;
  std::vector<Matrix> mods;
  for (const auto& ga : a.generators()) {
    for (const auto& gb : b.generators()) {
      Matrix c = op(ga.base(), gb.base());
      if (c.is_zero()) continue;
      if (ga.is_module() || gb.is_module())
        mods.push_back(c.lift_to(ctx));
      else
        bits.push_back(c.lift_to(ctx));
    }
  }
  return normalize(ctx, bits, mods);
}

}  // namespace

AdditiveSubgroup bracket_subgroup(const AdditiveSubgroup& a, const AdditiveSubgroup& b, int /*degree_bound*/) {
  return combine(a, b, [](const Matrix& x, const Matrix& y) { return commutator(x, y); });
}

AdditiveSubgroup product_subgroup(const AdditiveSubgroup& a, const AdditiveSubgroup& b, int /*degree_bound*/) {
  return combine(a, b, [](const Matrix& x, const Matrix& y) { return x * y; });
}

AdditiveSubgroup sum(const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
  AdditiveSubgroup out(join(a.context(), b.context()));
  for (const auto& g : a.generators()) out.add(g);
  for (const auto& g : b.generators()) out.add(g);
  return out;
}

CSubspace c_span(const AdditiveSubgroup& a) {
  CSubspace s(a.context());
  for (const auto& g : a.generators()) s.insert(g.base());
  return s;
}

LieIdealCheck check_lie_ideal(const AdditiveSubgroup& l, int degree_bound) {
  const RingContext& ctx = l.context();
  require_gf2_coordinates(ctx);
  LieIdealCheck result;
  if (!is_poly_context(ctx)) {
    TruncatedSlice s = slice(l, 1);
    for (const auto& x : s.basis())
      for (const auto& r : ring_generators(ctx)) {
        if (s.contains(commutator(x, r))) continue;
        result.is_lie_ideal = false;
        result.witness = std::make_pair(x, r);
        return result;
      }
    return result;
  }
  const int n = degree_bound;
  TruncatedSlice full = slice(l, n);
  std::vector<std::optional<TruncatedSlice>> by_bound(static_cast<std::size_t>(n + 1));
  for (const auto& r : slice(whole_ring(ctx), n).basis()) {
    const int k = r.degree();
    if (n - k < 1) continue;
    auto& lk = by_bound[static_cast<std::size_t>(n - k)];
    if (!lk) lk = slice(l, n - k);
    for (const auto& x : lk->basis()) {
      if (full.contains(commutator(x, r))) continue;
      result.is_lie_ideal = false;
      result.witness = std::make_pair(x, r);
      return result;
    }
  }
  return result;
}

bool is_lie_ideal(const AdditiveSubgroup& l, int degree_bound) { return check_lie_ideal(l, degree_bound).is_lie_ideal; }

std::string_view to_string(LieIdealClass c) {
  switch (c) {
    case LieIdealClass::Central: return "Central";
    case LieIdealClass::AbelianNoncentral: return "AbelianNoncentral";
    case LieIdealClass::TypeI: return "TypeI";
    case LieIdealClass::TypeII: return "TypeII";
  }
  return "?";
}

LieIdealClass classify_lie_ideal(const AdditiveSubgroup& l, int degree_bound) {
  auto chk = check_lie_ideal(l, degree_bound);
  if (!chk.is_lie_ideal) {
    const auto& [x, r] = *chk.witness;
    throw ClassificationError(ClassificationError::Kind::NotLieIdeal,
                              "not a Lie ideal: [" + x.to_string() + ", " + r.to_string() + "] = " +
                                  commutator(x, r).to_string() + " escapes");
  }
  if (l.is_central()) return LieIdealClass::Central;
  CSubspace cs = c_span(l);
  const RingContext rc = l.context().central_closure();
  if (l.is_abelian()) {
    bool ok = cs.dimension() == 2 && cs.contains(Matrix::identity(rc));
    for (const auto& b : cs.basis()) ok = ok && square_central(b);
    if (!ok)
      throw ClassificationError(ClassificationError::Kind::Falsification,
                                "abelian noncentral Lie ideal whose C-span is not Ca + C with a^2 central (dim " +
                                    std::to_string(cs.dimension()) + ")");
    return LieIdealClass::AbelianNoncentral;
  }
  if (cs.dimension() == 4) return LieIdealClass::TypeII;
  if (cs.dimension() == 3 && cs == CSubspace::commutators(rc)) return LieIdealClass::TypeI;
  throw ClassificationError(ClassificationError::Kind::Falsification,
                            "nonabelian Lie ideal whose C-span is neither [RC,RC] nor RC (dim " +
                                std::to_string(cs.dimension()) + ")");
}

AdditiveSubgroup engel_subgroup(const AdditiveSubgroup& l, int m, int degree_bound) {
  if (m < 1) throw DomainError("Engel index must be at least 1");
  AdditiveSubgroup e = l;
  for (int i = 2; i <= m; ++i) e = bracket_subgroup(l, e, degree_bound);
  return e;
}

AdditiveSubgroup generated_ideal_window(const AdditiveSubgroup& l, int degree_bound) {
  const RingContext& ctx = l.context();
  AdditiveSubgroup ll = bracket_subgroup(l, l, degree_bound);
  std::vector<Matrix> rg = ring_generators(ctx);
  std::vector<Matrix> bits;
  std::vector<Matrix> mods;
  for (const auto& g : ll.generators()) {
    Matrix c = g.base();
    for (const auto& r : rg)
      for (const auto& s : rg) {
        Matrix p = (r * c * s).lift_to(ctx);
        if (p.is_zero()) continue;
        (is_poly_context(ctx) ? mods : bits).push_back(p);
      }
  }
  return normalize(ctx, bits, mods);
}

AdditiveSubgroup lie_ideal_closure(const RingContext& ctx, const std::vector<Matrix>& seeds) {
  require_gf2_coordinates(ctx);
  std::vector<Matrix> rg = ring_generators(ctx);
  if (!is_poly_context(ctx)) {
    AdditiveSubgroup out(ctx);
    TruncatedSlice acc(ctx, 1);
    std::vector<Matrix> frontier;
    for (const auto& s : seeds)
      if (!acc.contains(s)) {
        acc.insert(s);
        out.add(TaggedGenerator::bits(s));
        frontier.push_back(s);
      }
    while (!frontier.empty()) {
      std::vector<Matrix> next;
      for (const auto& f : frontier)
        for (const auto& r : rg) {
          Matrix y = commutator(f, r);
          if (acc.contains(y)) continue;
          acc.insert(y);
          out.add(TaggedGenerator::bits(y));
          next.push_back(y);
        }
      frontier = std::move(next);
    }
    return out;
  }
  AdditiveSubgroup mod(ctx);
  std::vector<Matrix> frontier(seeds.begin(), seeds.end());
  for (int depth = 0; depth < 16 && !frontier.empty(); ++depth) {
    std::vector<Matrix> next;
    for (const auto& f : frontier)
      for (const auto& r : rg) {
        Matrix y = commutator(f, r).lift_to(ctx);
        if (contains(mod, y)) continue;
        mod.add(TaggedGenerator::poly_full(y));
        next.push_back(y);
      }
    frontier = std::move(next);
  }
  if (!frontier.empty()) throw DomainError("Lie ideal closure did not stabilise");
  std::vector<Matrix> bits;
  for (const auto& s : seeds) bits.push_back(s.lift_to(ctx));
  return normalize(ctx, bits, mod.module_elements());
}

ClosureResult invariant_closure(const RingContext& ctx, const std::vector<Matrix>& seeds, const AdditiveSubgroup& l,
                                int degree_bound) {
  require_gf2_coordinates(ctx);
  const int cap = 4 * degree_bound;
  AdditiveSubgroup acc(ctx);
  struct Item {
    Matrix m;
    bool module;
  };
  std::vector<Item> frontier;
  for (const auto& s : seeds) {
    Matrix x = s.lift_to(ctx);
    if (contains(acc, x)) continue;
    acc.add(TaggedGenerator::bits(x));
    frontier.push_back({x, false});
  }
  bool truncated = false;
  for (int round = 0; round < 32 && !frontier.empty(); ++round) {
    std::vector<Item> next;
    for (const auto& it : frontier)
      for (const auto& g : l.generators()) {
        Matrix y = commutator(it.m, g.base()).lift_to(ctx);
        if (y.is_zero()) continue;
        const bool module = it.module || g.is_module();
        if (module) {
          if (contains(acc.module_part(), y)) continue;
          acc.add(TaggedGenerator::poly_full(y));
        } else {
          if (is_poly_context(ctx) && y.degree() >= cap) {
            truncated = true;
            continue;
          }
          if (contains(acc, y)) continue;
          acc.add(TaggedGenerator::bits(y));
        }
        next.push_back({y, module});
      }
    frontier = std::move(next);
  }
  ClosureResult out{normalize(ctx, acc.bit_elements(), acc.module_elements()), frontier.empty() && !truncated};
  return out;
}

ClosureResult subring_closure(const AdditiveSubgroup& a, int degree_bound) {
  const RingContext& ctx = a.context();
  require_gf2_coordinates(ctx);
  AdditiveSubgroup acc(ctx);
  for (const auto& g : a.generators()) acc.add(g);
  bool truncated = false;
  for (int round = 0; round < 32; ++round) {
    bool grew = false;
    const auto gens = acc.generators();
    for (const auto& x : gens)
      for (const auto& y : gens) {
        Matrix p = (x.base() * y.base()).lift_to(ctx);
        if (p.is_zero()) continue;
        if (x.is_module() || y.is_module()) {
          if (contains(acc.module_part(), p)) continue;
          acc.add(TaggedGenerator::poly_full(p));
        } else {
          if (is_poly_context(ctx) && p.degree() >= degree_bound) {
            truncated = true;
            continue;
          }
          if (contains(acc, p)) continue;
          acc.add(TaggedGenerator::bits(p));
        }
        grew = true;
      }
    if (!grew) return {normalize(ctx, acc.bit_elements(), acc.module_elements()), !truncated};
  }
  return {normalize(ctx, acc.bit_elements(), acc.module_elements()), false};
}

}  // namespace exrings
