#include "exrings/finite_ring.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

namespace exrings {

namespace {

using Digits = std::vector<int>;

}  // namespace

FiniteRing::FiniteRing(FieldTag field) : field_(field) {
  switch (field) {
    case FieldTag::GF2: p_ = 2, n_ = 4; break;
    case FieldTag::GF3: p_ = 3, n_ = 4; break;
    case FieldTag::GF4: p_ = 2, n_ = 8; break;
    default: throw DomainError("finite tables exist only for GF(2), GF(3) and GF(4)");
  }
  size_ = 1;
  for (int i = 0; i < n_; ++i) size_ *= p_;
  RingContext ctx(field_);
  elements_.reserve(static_cast<std::size_t>(size_));
  for (int c = 0; c < size_; ++c) {
    std::array<Scalar, 4> e;
    int rest = c;
    if (field_ == FieldTag::GF4) {
      for (int k = 0; k < 4; ++k) e[static_cast<std::size_t>(k)] = Scalar::from_code(field_, static_cast<std::uint64_t>((c >> (2 * k)) & 3));
    } else {
      for (int k = 0; k < 4; ++k) {
        e[static_cast<std::size_t>(k)] = Scalar::from_code(field_, static_cast<std::uint64_t>(rest % p_));
        rest /= p_;
      }
    }
    elements_.emplace_back(ctx, std::move(e));
  }
  const auto sz = static_cast<std::size_t>(size_);
  add_.resize(sz * sz);
  mul_.resize(sz * sz);
  neg_.resize(sz);
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      add_[index(a, b)] = code(elements_[static_cast<std::size_t>(a)] + elements_[static_cast<std::size_t>(b)]);
      mul_[index(a, b)] = code(elements_[static_cast<std::size_t>(a)] * elements_[static_cast<std::size_t>(b)]);
    }
    neg_[static_cast<std::size_t>(a)] = code(-elements_[static_cast<std::size_t>(a)]);
    central_.set(static_cast<std::size_t>(a), elements_[static_cast<std::size_t>(a)].is_scalar());
    trace_zero_.set(static_cast<std::size_t>(a), elements_[static_cast<std::size_t>(a)].trace().is_zero());
  }
  identity_ = code(Matrix::identity(ctx));
  for (int i = 0, pw = 1; i < n_; ++i, pw *= p_) basis_.push_back(pw);
  whole_ = span(basis_);
  std::vector<int> z;
  std::vector<int> tz;
  for (int a = 0; a < size_; ++a) {
    if (is_central(a)) z.push_back(a);
    for (int b = 0; b < size_; ++b) tz.push_back(bracket(a, b));
  }
  center_sub_ = span(z);
  commutators_ = span(tz);
}

const FiniteRing& FiniteRing::get(FieldTag field) {
  switch (field) {
    case FieldTag::GF2: {
      static const FiniteRing r(FieldTag::GF2);
      return r;
    }
    case FieldTag::GF3: {
      static const FiniteRing r(FieldTag::GF3);
      return r;
    }
    case FieldTag::GF4: {
      static const FiniteRing r(FieldTag::GF4);
      return r;
    }
    default: throw DomainError("no finite table for " + std::string(field_name(field)));
  }
}

int FiniteRing::code(const Matrix& m) const {
  int c = 0;
  if (field_ == FieldTag::GF4) {
    for (int k = 0; k < 4; ++k) c |= std::get<Gf4>(m.entry(k).lift_to(field_).storage()).v << (2 * k);
    return c;
  }
  for (int k = 3; k >= 0; --k) {
    const Scalar s = m.entry(k).lift_to(field_);
    int digit = field_ == FieldTag::GF2 ? std::get<Gf2>(s.storage()).v : std::get<Gf3>(s.storage()).v;
    c = c * p_ + digit;
  }
  return c;
}

int FiniteRing::scale(int digit, int a) const {
  int out = 0;
  for (int i = 0; i < digit; ++i) out = add(out, a);
  return out;
}

namespace {

Digits to_digits(int code, int p, int n) {
  Digits d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    d[static_cast<std::size_t>(i)] = code % p;
    code /= p;
  }
  return d;
}

int from_digits(const Digits& d, int p) {
  int c = 0;
  for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
  return c;
}

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  return 0;
}

}  // namespace

FiniteSubspace FiniteRing::span(const std::vector<int>& codes) const {
  // Canonical echelon form over GF(p): pivot = lowest nonzero digit, pivot
  // digit 1, pivot columns cleared elsewhere, rows sorted by pivot.
  std::vector<Digits> rows;
  std::vector<int> pivots;
  for (int c : codes) {
    Digits v = to_digits(c, p_, n_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      int f = v[static_cast<std::size_t>(pivots[i])];
      if (!f) continue;
      for (int j = 0; j < n_; ++j)
        v[static_cast<std::size_t>(j)] = ((v[static_cast<std::size_t>(j)] - f * rows[i][static_cast<std::size_t>(j)]) % p_ + p_) % p_;
    }
    int piv = -1;
    for (int j = 0; j < n_ && piv < 0; ++j)
      if (v[static_cast<std::size_t>(j)]) piv = j;
    if (piv < 0) continue;
    int inv = inverse_mod(v[static_cast<std::size_t>(piv)], p_);
    for (auto& x : v) x = (x * inv) % p_;
    for (auto& r : rows) {
      int f = r[static_cast<std::size_t>(piv)];
      if (!f) continue;
      for (int j = 0; j < n_; ++j)
        r[static_cast<std::size_t>(j)] = ((r[static_cast<std::size_t>(j)] - f * v[static_cast<std::size_t>(j)]) % p_ + p_) % p_;
    }
    std::size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < piv) ++pos;
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), v);
    pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), piv);
  }
  FiniteSubspace s;
  for (const auto& r : rows) s.basis.push_back(from_digits(r, p_));
  s.members.set(0);
  for (int b : s.basis) {
    std::bitset<256> next = s.members;
    for (int m = 0; m < size_; ++m) {
      if (!s.members.test(static_cast<std::size_t>(m))) continue;
      int acc = m;
      for (int j = 1; j < p_; ++j) {
        acc = add(acc, b);
        next.set(static_cast<std::size_t>(acc));
      }
    }
    s.members = next;
  }
  return s;
}

long FiniteRing::for_each_subspace(const std::function<void(const FiniteSubspace&)>& fn, int worker, int workers) const {
  long ordinal = 0;
  long visited = 0;
  for (int k = 0; k <= n_; ++k) {
    for (unsigned mask = 0; mask < (1U << n_); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::vector<int> piv;
      for (int j = 0; j < n_; ++j)
        if (mask & (1U << j)) piv.push_back(j);
      // Free slots: (row, column) with column > pivot and not a pivot column.
      std::vector<std::pair<int, int>> free;
      for (int i = 0; i < k; ++i)
        for (int j = piv[static_cast<std::size_t>(i)] + 1; j < n_; ++j)
          if (!(mask & (1U << j))) free.emplace_back(i, j);
      long combos = 1;
      for (std::size_t f = 0; f < free.size(); ++f) combos *= p_;
      for (long a = 0; a < combos; ++a, ++ordinal) {
        if (workers > 1 && ordinal % workers != worker) continue;
        std::vector<Digits> rows(static_cast<std::size_t>(k), Digits(static_cast<std::size_t>(n_), 0));
        for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = 1;
        long rest = a;
        for (const auto& [i, j] : free) {
          rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(rest % p_);
          rest /= p_;
        }
        FiniteSubspace s;
        for (const auto& r : rows) s.basis.push_back(from_digits(r, p_));
        s.members.set(0);
        for (int b : s.basis) {
          std::bitset<256> next = s.members;
          for (int m = 0; m < size_; ++m) {
            if (!s.members.test(static_cast<std::size_t>(m))) continue;
            int acc = m;
            for (int j = 1; j < p_; ++j) {
              acc = add(acc, b);
              next.set(static_cast<std::size_t>(acc));
            }
          }
          s.members = next;
        }
        fn(s);
        ++visited;
      }
    }
  }
  return visited;
}

FiniteSubspace FiniteRing::subring_closure(const FiniteSubspace& s) const {
  FiniteSubspace cur = s;
  for (;;) {
    std::vector<int> gens = cur.basis;
    for (int a : cur.basis)
      for (int b : cur.basis) gens.push_back(mul(a, b));
    FiniteSubspace next = span(gens);
    if (next.members == cur.members) return cur;
    cur = next;
  }
}

bool FiniteRing::is_lie_ideal(const FiniteSubspace& s) const {
  for (int a : s.basis)
    for (int r : basis_)
      if (!s.contains(bracket(a, r))) return false;
  return true;
}

bool FiniteRing::is_subring(const FiniteSubspace& s) const {
  for (int a : s.basis)
    for (int b : s.basis)
      if (!s.contains(mul(a, b))) return false;
  return true;
}

FiniteSubspace FiniteRing::bracket_span(const FiniteSubspace& a, const FiniteSubspace& b) const {
  std::vector<int> gens;
  for (int x : a.basis)
    for (int y : b.basis) gens.push_back(bracket(x, y));
  return span(gens);
}

const std::vector<FiniteSubspace>& FiniteRing::lie_ideals() const {
  static std::mutex mu;
  static std::vector<FiniteSubspace> cache[3];
  static bool done[3] = {false, false, false};
  const int slot = field_ == FieldTag::GF2 ? 0 : field_ == FieldTag::GF3 ? 1 : 2;
  std::lock_guard<std::mutex> lock(mu);
  if (!done[slot]) {
    for_each_subspace([&](const FiniteSubspace& s) {
      if (is_lie_ideal(s)) cache[slot].push_back(s);
    });
    done[slot] = true;
  }
  return cache[slot];
}

AdditiveSubgroup FiniteRing::to_subgroup(const FiniteSubspace& s) const {
  AdditiveSubgroup out(context());
  for (int b : s.basis) out.add(TaggedGenerator::bits(element(b)));
  return out;
}

}  // namespace exrings
