#pragma once

// Finitely generated additive subgroups of M2 rings, their degree-truncated
// GF(2) slices, bracket subgroups, C-spans and Lie-ideal classification.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exrings/gf2.hpp"
#include "exrings/linear_space.hpp"
#include "exrings/matrix.hpp"

namespace exrings {

enum class MultiplierDomain {
  Bits,       ///< GF(2)-multiples of the element only
  PolyFull,   ///< GF(2)[t] * element
  PolyIdeal,  ///< g * GF(2)[t] * element
};

struct TaggedGenerator {
  Matrix element;
  MultiplierDomain domain = MultiplierDomain::Bits;
  Poly ideal;  ///< g for PolyIdeal, unused otherwise

  static TaggedGenerator bits(Matrix m) { return {std::move(m), MultiplierDomain::Bits, {}}; }
  static TaggedGenerator poly_full(Matrix m) { return {std::move(m), MultiplierDomain::PolyFull, {}}; }
  static TaggedGenerator poly_ideal(Poly g, Matrix m) { return {std::move(m), MultiplierDomain::PolyIdeal, std::move(g)}; }

  bool is_module() const { return domain != MultiplierDomain::Bits; }
  /// The smallest element the tag multiplies: g*element for PolyIdeal.
  Matrix base() const;
  /// One line of the generator-file format.
  std::string to_string() const;
};

class AdditiveSubgroup {
 public:
  explicit AdditiveSubgroup(RingContext ctx, std::vector<TaggedGenerator> generators = {});

  /// Parses the generator-file format, one generator per line:
  ///   poly-full [[1,0],[0,1]]
  ///   bits [[0,1],[0,0]]
  ///   poly-ideal t^2 [[0,0],[1,0]]
  /// Blank lines and lines starting with '#' are ignored.
  static AdditiveSubgroup parse(const RingContext& ctx, std::string_view text);
  std::string to_string() const;

  const RingContext& context() const { return ctx_; }
  const std::vector<TaggedGenerator>& generators() const { return gens_; }
  void add(TaggedGenerator g);

  /// Generator bases split by tag kind.
  std::vector<Matrix> bit_elements() const;
  std::vector<Matrix> module_elements() const;
  /// The subgroup generated by the module-tagged generators only.
  AdditiveSubgroup module_part() const;

  bool is_central() const;   ///< every generator is central
  bool is_abelian() const;   ///< generators pairwise commute
  int max_degree() const;    ///< over generator bases (polynomial contexts)

 private:
  RingContext ctx_;
  std::vector<TaggedGenerator> gens_;
};

/// R, Z(R) and [R, R] for a context.
AdditiveSubgroup whole_ring(const RingContext& ctx);
AdditiveSubgroup center_subgroup(const RingContext& ctx);
AdditiveSubgroup commutator_subgroup(const RingContext& ctx);
/// The ideal M2(g*GF(2)[t]) of M2(GF(2)[t]) (or of M2(t*GF(2)[t]) when t | g).
AdditiveSubgroup principal_ideal(const RingContext& ctx, const Poly& g);
/// Additive generators of R over GF(2) up to module tags: e_ij (and u*e_ij
/// over GF(4)); t*e_ij under the augmentation restriction.
std::vector<Matrix> ring_generators(const RingContext& ctx);

/// Degree-< N window of a subgroup: a canonical GF(2) echelon basis in the
/// coordinates (entry-major, then degree). For GF(2) and GF(4) the window is
/// the whole ring and N is ignored.
class TruncatedSlice {
 public:
  TruncatedSlice(RingContext ctx, int degree_bound);

  const RingContext& context() const { return ctx_; }
  int degree_bound() const { return n_; }
  int dimension() const { return basis_.rank(); }
  const Gf2Echelon& echelon() const { return basis_; }
  std::vector<Matrix> basis() const;

  /// nullopt when some entry has degree >= N.
  std::optional<BitVec> encode(const Matrix& m) const;
  Matrix decode(const BitVec& v) const;

  /// Throws DomainError when x does not fit in the window.
  bool contains(const Matrix& x) const;
  bool contains(const TruncatedSlice& other) const;
  void insert(const Matrix& x);

  friend bool operator==(const TruncatedSlice& a, const TruncatedSlice& b) {
    return a.ctx_ == b.ctx_ && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  friend TruncatedSlice slice(const AdditiveSubgroup& a, int degree_bound);
  int width() const;

  RingContext ctx_;
  int n_;
  Gf2Echelon basis_;
};

TruncatedSlice slice(const AdditiveSubgroup& a, int degree_bound);
/// Membership in slice(a, N); DomainError if x exceeds the window.
bool contains(const AdditiveSubgroup& a, const Matrix& x, int degree_bound);
/// Membership without a caller-chosen window (window = deg x + 1).
bool contains(const AdditiveSubgroup& a, const Matrix& x);

/// A module basis in weak Popov form for the GF(2)[t]-module spanned by the
/// rows; slices of such a basis are exact by the predictable-degree property.
std::vector<Matrix> reduced_module_basis(const RingContext& ctx, const std::vector<Matrix>& rows);

/// Generated by all [a, b]; module tags wherever a module operand is involved
/// (S[g, h] = [Sg, h]), GF(2) tags otherwise. Exact on generators.
AdditiveSubgroup bracket_subgroup(const AdditiveSubgroup& a, const AdditiveSubgroup& b, int degree_bound);
/// Generated by all products ab, with the same tag rules.
AdditiveSubgroup product_subgroup(const AdditiveSubgroup& a, const AdditiveSubgroup& b, int degree_bound);
AdditiveSubgroup sum(const AdditiveSubgroup& a, const AdditiveSubgroup& b);

/// C-span over the extended centroid.
CSubspace c_span(const AdditiveSubgroup& a);

struct LieIdealCheck {
  bool is_lie_ideal = true;
  /// (x, r) with [x, r] outside L when the check fails.
  std::optional<std::pair<Matrix, Matrix>> witness;
};

/// [x, r] in slice(L, N) for every r in the R-window basis of degree k and
/// every x in the basis of slice(L, N - k). Exact for finite rings.
LieIdealCheck check_lie_ideal(const AdditiveSubgroup& l, int degree_bound);
bool is_lie_ideal(const AdditiveSubgroup& l, int degree_bound);

enum class LieIdealClass { Central, AbelianNoncentral, TypeI, TypeII };
std::string_view to_string(LieIdealClass c);

class ClassificationError : public std::runtime_error {
 public:
  enum class Kind { NotLieIdeal, Falsification };
  ClassificationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Throws ClassificationError(NotLieIdeal) when L fails the window check, and
/// ClassificationError(Falsification) if the C-span contradicts the
/// structure theory (dimension 2 with a noncentral square, and so on).
LieIdealClass classify_lie_ideal(const AdditiveSubgroup& l, int degree_bound);

/// E_1(L)^+ = L, E_m(L)^+ = [L, E_{m-1}(L)^+].
AdditiveSubgroup engel_subgroup(const AdditiveSubgroup& l, int m, int degree_bound);

/// I = R[L, L]R.
AdditiveSubgroup generated_ideal_window(const AdditiveSubgroup& l, int degree_bound);

/// Lie ideal of R generated by the seeds (exact: GF(2) seeds plus the module
/// generated by their iterated brackets with R).
AdditiveSubgroup lie_ideal_closure(const RingContext& ctx, const std::vector<Matrix>& seeds);

struct ClosureResult {
  AdditiveSubgroup subgroup;
  bool converged = false;
};

/// Smallest subgroup containing the seeds with [A, L] inside A. Module-tagged
/// growth is exact; GF(2)-tagged growth is kept below degree 4N.
ClosureResult invariant_closure(const RingContext& ctx, const std::vector<Matrix>& seeds,
                                const AdditiveSubgroup& l, int degree_bound);

/// Subring generated by A, grown until products leave the degree-< N window.
ClosureResult subring_closure(const AdditiveSubgroup& a, int degree_bound);

}  // namespace exrings
