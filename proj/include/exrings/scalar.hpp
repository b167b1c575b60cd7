#pragma once

// Exact scalar arithmetic: GF(2), GF(3), GF(4), GF(2)[t] and GF(2)(t).

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace exrings {

/// Raised for operations outside an algebraic domain (division by zero,
/// mixing incompatible scalar levels, derivatives over finite fields, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when textual input cannot be parsed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FieldTag { GF2, GF3, GF4, Poly2, Rat2 };

std::string_view field_name(FieldTag tag);
int characteristic(FieldTag tag);
bool is_finite_field(FieldTag tag);

/// Polynomial over GF(2), stored densely as packed 64-bit words.
/// Canonical form: the last word is nonzero; the zero polynomial has no words.
class Poly {
 public:
  Poly() = default;

  static Poly zero() { return {}; }
  static Poly one() { return from_bits(1); }
  static Poly t() { return monomial(1); }
  static Poly monomial(int degree);
  /// Low 64 coefficients given as a bit mask (bit k is the coefficient of t^k).
  static Poly from_bits(std::uint64_t bits);
  static Poly from_words(std::vector<std::uint64_t> words);

  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  bool coeff(int k) const;
  const std::vector<std::uint64_t>& words() const { return words_; }
  /// Bit mask of the low 64 coefficients.
  std::uint64_t low_bits() const { return words_.empty() ? 0 : words_[0]; }

  Poly& operator+=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly shifted(int k) const;  // multiply by t^k

  /// (q, r) with *this = q*g + r and deg r < deg g.
  std::pair<Poly, Poly> divmod(const Poly& g) const;
  static Poly gcd(Poly a, Poly b);
  /// Exact quotient; throws if g does not divide *this.
  Poly exact_div(const Poly& g) const;

  /// Formal derivative: (t^n)' = n t^(n-1), n reduced mod 2.
  Poly derivative() const;

  std::string to_string() const;
  static Poly parse(std::string_view text);

  friend bool operator==(const Poly&, const Poly&) = default;
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  explicit Poly(std::vector<std::uint64_t> w) : words_(std::move(w)) { trim(); }
  void trim();
  std::vector<std::uint64_t> words_;
};

/// Element of GF(2)(t) in lowest terms: gcd(num, den) = 1, den != 0.
/// Over GF(2) every nonzero polynomial is monic, so (num, den) is unique.
class Rat {
 public:
  Rat() : num_(), den_(Poly::one()) {}
  Rat(Poly num);  // NOLINT(google-explicit-constructor)
  Rat(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b) { return a + b; }
  friend Rat operator*(const Rat& a, const Rat& b);
  Rat inverse() const;
  friend Rat operator/(const Rat& a, const Rat& b) { return a * b.inverse(); }

  /// Quotient rule; (f/g)' = (f'g + fg') / g^2 in characteristic 2.
  Rat derivative() const;

  std::string to_string() const;
  static Rat parse(std::string_view text);

  friend bool operator==(const Rat&, const Rat&) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  Poly num_;
  Poly den_;
};

// Finite fields are tiny value types over a byte.

struct Gf2 {
  std::uint8_t v = 0;
  friend bool operator==(Gf2, Gf2) = default;
  friend auto operator<=>(Gf2, Gf2) = default;
};
struct Gf3 {
  std::uint8_t v = 0;
  friend bool operator==(Gf3, Gf3) = default;
  friend auto operator<=>(Gf3, Gf3) = default;
};
/// GF(4) = GF(2)[u]/(u^2+u+1); bit 0 is the 1-coefficient, bit 1 the u-coefficient.
struct Gf4 {
  std::uint8_t v = 0;
  friend bool operator==(Gf4, Gf4) = default;
  friend auto operator<=>(Gf4, Gf4) = default;
};

std::uint8_t gf4_mul(std::uint8_t a, std::uint8_t b);

/// A value at one of the scalar levels. Binary operations require equal
/// levels, except Poly2 and Rat2 which meet in Rat2 (the fraction field).
class Scalar {
 public:
  using Storage = std::variant<Gf2, Gf3, Gf4, Poly, Rat>;

  Scalar() : value_(Gf2{}) {}
  Scalar(Gf2 v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Gf3 v) : value_(v) {}  // NOLINT
  Scalar(Gf4 v) : value_(v) {}  // NOLINT
  Scalar(Poly v) : value_(std::move(v)) {}  // NOLINT
  Scalar(Rat v) : value_(std::move(v)) {}  // NOLINT

  static Scalar zero(FieldTag tag);
  static Scalar one(FieldTag tag);
  /// Small-integer constructor: residue for GF(p), code 0..3 for GF(4),
  /// coefficient bit mask for Poly2/Rat2.
  static Scalar from_code(FieldTag tag, std::uint64_t code);

  FieldTag tag() const;
  const Storage& storage() const { return value_; }
  const Poly& poly() const;  // throws unless Poly2
  const Rat& rat() const;    // throws unless Rat2

  bool is_zero() const;
  bool is_one() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar inverse() const;
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  /// Formal d/dt for Poly2 and Rat2; DomainError on finite fields.
  Scalar derivative() const;
  /// Poly2 -> Rat2; identity elsewhere.
  Scalar to_fraction_field() const;
  Scalar lift_to(FieldTag target) const;

  std::string to_string() const;
  static Scalar parse(FieldTag tag, std::string_view text);

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  Storage value_;
};

/// Join of two scalar levels (Poly2 v Rat2 = Rat2); DomainError otherwise.
FieldTag join_levels(FieldTag a, FieldTag b);

}  // namespace exrings
