#include "exrings/scalar.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace exrings {

std::string_view field_name(FieldTag tag) {
  switch (tag) {
    case FieldTag::GF2: return "GF2";
    case FieldTag::GF3: return "GF3";
    case FieldTag::GF4: return "GF4";
    case FieldTag::Poly2: return "Poly2";
    case FieldTag::Rat2: return "Rat2";
  }
  return "?";
}

int characteristic(FieldTag tag) { return tag == FieldTag::GF3 ? 3 : 2; }

bool is_finite_field(FieldTag tag) {
  return tag == FieldTag::GF2 || tag == FieldTag::GF3 || tag == FieldTag::GF4;
}

// ---------------------------------------------------------------- Poly

void Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly Poly::monomial(int degree) {
  if (degree < 0) throw DomainError("negative monomial degree");
  std::vector<std::uint64_t> w(static_cast<std::size_t>(degree / 64) + 1, 0);
  w.back() = std::uint64_t{1} << (degree % 64);
  return Poly(std::move(w));
}

Poly Poly::from_bits(std::uint64_t bits) {
  if (bits == 0) return {};
  return Poly(std::vector<std::uint64_t>{bits});
}

Poly Poly::from_words(std::vector<std::uint64_t> words) { return Poly(std::move(words)); }

int Poly::degree() const {
  if (words_.empty()) return -1;
  return static_cast<int>(words_.size() - 1) * 64 + (63 - std::countl_zero(words_.back()));
}

bool Poly::coeff(int k) const {
  if (k < 0) return false;
  auto w = static_cast<std::size_t>(k / 64);
  if (w >= words_.size()) return false;
  return (words_[w] >> (k % 64)) & 1U;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

namespace {

// 64x64 -> 128 carry-less product.
inline void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
  lo = 0;
  hi = 0;
  while (a != 0) {
    int i = std::countr_zero(a);
    a &= a - 1;
    lo ^= b << i;
    if (i != 0) hi ^= b >> (64 - i);
  }
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint64_t> out(a.words_.size() + b.words_.size(), 0);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if (a.words_[i] == 0) continue;
    for (std::size_t j = 0; j < b.words_.size(); ++j) {
      std::uint64_t lo = 0;
      std::uint64_t hi = 0;
      clmul64(a.words_[i], b.words_[j], lo, hi);
      out[i + j] ^= lo;
      out[i + j + 1] ^= hi;
    }
  }
  return Poly(std::move(out));
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw DomainError("negative shift");
  if (is_zero() || k == 0) return *this;
  std::size_t ws = static_cast<std::size_t>(k / 64);
  int bs = k % 64;
  std::vector<std::uint64_t> out(words_.size() + ws + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out[i + ws] ^= words_[i] << bs;
    if (bs != 0) out[i + ws + 1] ^= words_[i] >> (64 - bs);
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  Poly r = *this;
  Poly q;
  const int dg = g.degree();
  std::vector<std::uint64_t> qw;
  while (!r.is_zero() && r.degree() >= dg) {
    int shift = r.degree() - dg;
    auto w = static_cast<std::size_t>(shift / 64);
    if (qw.size() <= w) qw.resize(w + 1, 0);
    qw[w] ^= std::uint64_t{1} << (shift % 64);
    r += g.shifted(shift);
  }
  return {Poly(std::move(qw)), std::move(r)};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;  // monic automatically over GF(2)
}

Poly Poly::exact_div(const Poly& g) const {
  auto [q, r] = divmod(g);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

Poly Poly::derivative() const {
  // Keep odd-degree coefficients, shifted down by one.
  constexpr std::uint64_t kOdd = 0xAAAAAAAAAAAAAAAAULL;
  std::vector<std::uint64_t> out(words_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t odd = words_[i] & kOdd;
    out[i] |= odd >> 1;
    // bit 0 of word i+1 has odd degree only if 64(i+1) is odd: never.
  }
  return Poly(std::move(out));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    if (!coeff(k)) continue;
    if (!s.empty()) s += '+';
    if (k == 0) {
      s += '1';
    } else if (k == 1) {
      s += 't';
    } else {
      s += "t^" + std::to_string(k);
    }
  }
  return s;
}

Poly Poly::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty polynomial");
  Poly result;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('+', pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (term.empty()) throw ParseError("malformed polynomial: " + std::string(text));
    if (term == "0") {
      // contributes nothing
    } else if (term == "1") {
      result += Poly::one();
    } else if (term == "t") {
      result += Poly::t();
    } else if (term.size() > 2 && term[0] == 't' && term[1] == '^') {
      const std::string digits = term.substr(2);
      if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("malformed exponent in: " + std::string(text));
      result += Poly::monomial(std::stoi(digits));
    } else {
      throw ParseError("malformed polynomial term '" + term + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return result;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
  for (std::size_t i = a.words_.size(); i-- > 0;)
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Rat

Rat::Rat(Poly num) : num_(std::move(num)), den_(Poly::one()) {}

Rat::Rat(Poly num, Poly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::one();
    return;
  }
  Poly g = Poly::gcd(num, den);
  if (g.is_one()) {
    num_ = std::move(num);
    den_ = std::move(den);
  } else {
    num_ = num.exact_div(g);
    den_ = den.exact_div(g);
  }
}

Rat operator+(const Rat& a, const Rat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return Rat(a.num_ + b.num_, a.den_);
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return Rat(a.num_ * b.num_);
  // Cross-cancel before multiplying to keep the operands small.
  Poly g1 = Poly::gcd(a.num_, b.den_);
  Poly g2 = Poly::gcd(b.num_, a.den_);
  Rat r;
  r.num_ = a.num_.exact_div(g1) * b.num_.exact_div(g2);
  r.den_ = a.den_.exact_div(g2) * b.den_.exact_div(g1);
  return r;
}

Rat Rat::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in GF(2)(t)");
  Rat r;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

Rat Rat::derivative() const {
  if (is_polynomial()) return Rat(num_.derivative());
  return Rat(num_.derivative() * den_ + num_ * den_.derivative(), den_ * den_);
}

std::string Rat::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

std::string strip_parens(const std::string& s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  // A top-level '/' separates numerator and denominator.
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0) {
      if (slash != std::string::npos) throw ParseError("multiple '/' in rational: " + s);
      slash = i;
    }
  }
  if (slash == std::string::npos) return Rat(Poly::parse(strip_parens(s)));
  Poly num = Poly::parse(strip_parens(s.substr(0, slash)));
  Poly den = Poly::parse(strip_parens(s.substr(slash + 1)));
  if (den.is_zero()) throw ParseError("zero denominator: " + s);
  return Rat(std::move(num), std::move(den));
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

// ---------------------------------------------------------------- finite fields

std::uint8_t gf4_mul(std::uint8_t a, std::uint8_t b) {
  // (a0 + a1 u)(b0 + b1 u) with u^2 = u + 1.
  const unsigned a0 = a & 1U, a1 = (a >> 1) & 1U, b0 = b & 1U, b1 = (b >> 1) & 1U;
  const unsigned hi = a1 & b1;
  const unsigned c0 = (a0 & b0) ^ hi;
  const unsigned c1 = (a0 & b1) ^ (a1 & b0) ^ hi;
  return static_cast<std::uint8_t>(c0 | (c1 << 1));
}

namespace {

std::uint8_t gf4_inv(std::uint8_t a) {
  for (std::uint8_t b = 1; b < 4; ++b)
    if (gf4_mul(a, b) == 1) return b;
  throw DomainError("inverse of zero in GF(4)");
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

[[noreturn]] void level_mismatch(FieldTag a, FieldTag b) {
  throw DomainError("scalar level mismatch: " + std::string(field_name(a)) + " vs " + std::string(field_name(b)));
}

}  // namespace

// ---------------------------------------------------------------- Scalar

FieldTag join_levels(FieldTag a, FieldTag b) {
  if (a == b) return a;
  if ((a == FieldTag::Poly2 && b == FieldTag::Rat2) || (a == FieldTag::Rat2 && b == FieldTag::Poly2))
    return FieldTag::Rat2;
  level_mismatch(a, b);
}

Scalar Scalar::zero(FieldTag tag) { return from_code(tag, 0); }
Scalar Scalar::one(FieldTag tag) { return from_code(tag, 1); }

Scalar Scalar::from_code(FieldTag tag, std::uint64_t code) {
  switch (tag) {
    case FieldTag::GF2: return Gf2{static_cast<std::uint8_t>(code & 1U)};
    case FieldTag::GF3: return Gf3{static_cast<std::uint8_t>(code % 3)};
    case FieldTag::GF4: return Gf4{static_cast<std::uint8_t>(code & 3U)};
    case FieldTag::Poly2: return Poly::from_bits(code);
    case FieldTag::Rat2: return Rat(Poly::from_bits(code));
  }
  throw DomainError("unknown field tag");
}

FieldTag Scalar::tag() const {
  return std::visit(Overloaded{[](const Gf2&) { return FieldTag::GF2; },
                               [](const Gf3&) { return FieldTag::GF3; },
                               [](const Gf4&) { return FieldTag::GF4; },
                               [](const Poly&) { return FieldTag::Poly2; },
                               [](const Rat&) { return FieldTag::Rat2; }},
                    value_);
}

const Poly& Scalar::poly() const {
  if (const auto* p = std::get_if<Poly>(&value_)) return *p;
  throw DomainError("scalar is not a polynomial");
}

const Rat& Scalar::rat() const {
  if (const auto* r = std::get_if<Rat>(&value_)) return *r;
  throw DomainError("scalar is not a rational function");
}

bool Scalar::is_zero() const {
  return std::visit(Overloaded{[](const Gf2& x) { return x.v == 0; }, [](const Gf3& x) { return x.v == 0; },
                               [](const Gf4& x) { return x.v == 0; }, [](const Poly& x) { return x.is_zero(); },
                               [](const Rat& x) { return x.is_zero(); }},
                    value_);
}

bool Scalar::is_one() const {
  return std::visit(Overloaded{[](const Gf2& x) { return x.v == 1; }, [](const Gf3& x) { return x.v == 1; },
                               [](const Gf4& x) { return x.v == 1; }, [](const Poly& x) { return x.is_one(); },
                               [](const Rat& x) { return x.is_one(); }},
                    value_);
}

Scalar Scalar::to_fraction_field() const {
  if (const auto* p = std::get_if<Poly>(&value_)) return Rat(*p);
  return *this;
}

Scalar Scalar::lift_to(FieldTag target) const {
  FieldTag own = tag();
  if (own == target) return *this;
  if (own == FieldTag::Poly2 && target == FieldTag::Rat2) return to_fraction_field();
  level_mismatch(own, target);
}

namespace {

// Brings a and b to a common level (possibly promoting Poly2 to Rat2).
std::pair<Scalar, Scalar> unify(const Scalar& a, const Scalar& b) {
  FieldTag j = join_levels(a.tag(), b.tag());
  return {a.lift_to(j), b.lift_to(j)};
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.tag() != b.tag()) {
    auto [x, y] = unify(a, b);
    return x + y;
  }
  return std::visit(
      Overloaded{[&](const Gf2& x) -> Scalar { return Gf2{static_cast<std::uint8_t>(x.v ^ std::get<Gf2>(b.value_).v)}; },
                 [&](const Gf3& x) -> Scalar {
                   return Gf3{static_cast<std::uint8_t>((x.v + std::get<Gf3>(b.value_).v) % 3)};
                 },
                 [&](const Gf4& x) -> Scalar { return Gf4{static_cast<std::uint8_t>(x.v ^ std::get<Gf4>(b.value_).v)}; },
                 [&](const Poly& x) -> Scalar { return x + std::get<Poly>(b.value_); },
                 [&](const Rat& x) -> Scalar { return x + std::get<Rat>(b.value_); }},
      a.value_);
}

Scalar Scalar::operator-() const {
  if (const auto* g = std::get_if<Gf3>(&value_)) return Gf3{static_cast<std::uint8_t>((3 - g->v) % 3)};
  return *this;  // characteristic 2
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.tag() != b.tag()) {
    auto [x, y] = unify(a, b);
    return x * y;
  }
  return std::visit(
      Overloaded{[&](const Gf2& x) -> Scalar { return Gf2{static_cast<std::uint8_t>(x.v & std::get<Gf2>(b.value_).v)}; },
                 [&](const Gf3& x) -> Scalar {
                   return Gf3{static_cast<std::uint8_t>((x.v * std::get<Gf3>(b.value_).v) % 3)};
                 },
                 [&](const Gf4& x) -> Scalar { return Gf4{gf4_mul(x.v, std::get<Gf4>(b.value_).v)}; },
                 [&](const Poly& x) -> Scalar { return x * std::get<Poly>(b.value_); },
                 [&](const Rat& x) -> Scalar { return x * std::get<Rat>(b.value_); }},
      a.value_);
}

Scalar Scalar::inverse() const {
  return std::visit(Overloaded{[](const Gf2& x) -> Scalar {
                                 if (x.v == 0) throw DomainError("inverse of zero in GF(2)");
                                 return x;
                               },
                               [](const Gf3& x) -> Scalar {
                                 if (x.v == 0) throw DomainError("inverse of zero in GF(3)");
                                 return x;  // 1*1 = 1, 2*2 = 4 = 1
                               },
                               [](const Gf4& x) -> Scalar { return Gf4{gf4_inv(x.v)}; },
                               [](const Poly& x) -> Scalar {
                                 if (!x.is_one()) throw DomainError("GF(2)[t] is not a field: only 1 is invertible");
                                 return x;
                               },
                               [](const Rat& x) -> Scalar { return x.inverse(); }},
                    value_);
}

Scalar Scalar::derivative() const {
  return std::visit(Overloaded{[](const Poly& x) -> Scalar { return x.derivative(); },
                               [](const Rat& x) -> Scalar { return x.derivative(); },
                               [](const auto&) -> Scalar {
                                 throw DomainError("formal derivative is defined only over GF(2)[t] and GF(2)(t)");
                               }},
                    value_);
}

std::string Scalar::to_string() const {
  return std::visit(Overloaded{[](const Gf2& x) { return std::to_string(x.v); },
                               [](const Gf3& x) { return std::to_string(x.v); },
                               [](const Gf4& x) -> std::string {
                                 switch (x.v) {
                                   case 0: return "0";
                                   case 1: return "1";
                                   case 2: return "u";
                                   default: return "u+1";
                                 }
                               },
                               [](const Poly& x) { return x.to_string(); },
                               [](const Rat& x) { return x.to_string(); }},
                    value_);
}

Scalar Scalar::parse(FieldTag tag, std::string_view text) {
  std::string s = strip_spaces(text);
  switch (tag) {
    case FieldTag::GF2:
      if (s == "0" || s == "1") return Gf2{static_cast<std::uint8_t>(s[0] - '0')};
      break;
    case FieldTag::GF3:
      if (s == "0" || s == "1" || s == "2") return Gf3{static_cast<std::uint8_t>(s[0] - '0')};
      break;
    case FieldTag::GF4:
      if (s == "0") return Gf4{0};
      if (s == "1") return Gf4{1};
      if (s == "u") return Gf4{2};
      if (s == "u+1" || s == "1+u") return Gf4{3};
      break;
    case FieldTag::Poly2: return Poly::parse(strip_parens(s));
    case FieldTag::Rat2: return Rat::parse(s);
  }
  throw ParseError("cannot parse '" + s + "' as " + std::string(field_name(tag)));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.tag() != b.tag()) {
    if (is_finite_field(a.tag()) || is_finite_field(b.tag())) return false;
    return a.to_fraction_field().value_ == b.to_fraction_field().value_;
  }
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.tag() != b.tag()) return a.value_.index() <=> b.value_.index();
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        return x <=> std::get<T>(b.value_);
      },
      a.value_);
}

}  // namespace exrings
