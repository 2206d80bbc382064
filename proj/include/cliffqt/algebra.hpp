#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cliffqt/errors.hpp"
#include "cliffqt/scalar.hpp"

namespace cliffqt {

inline constexpr int kMaxGenerators = 62;

/// Nondegenerate diagonal metric diag(+1 x p, -1 x q). Generators are
/// numbered 1..n; the first p square to +1, the remaining q to -1.
class Signature {
 public:
  Signature(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0) throw UsageError("signature counts must be non-negative");
    if (p + q < 1) throw UsageError("signature must have n = p + q >= 1");
    if (p + q > kMaxGenerators)
      throw UsageError("signature n = p + q exceeds " + std::to_string(kMaxGenerators));
  }

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }

  // Generator index a is 1-based.
  int eta(int a) const { return a <= p_ ? 1 : -1; }

  // Bits of generators squaring to -1.
  std::uint64_t negative_mask() const {
    return ((std::uint64_t{1} << n()) - 1) & ~((std::uint64_t{1} << p_) - 1);
  }
  std::uint64_t full_mask() const { return (std::uint64_t{1} << n()) - 1; }

  std::string to_string() const {
    return std::to_string(p_) + "," + std::to_string(q_);
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

/// Basis element e^{a1...ak}, generator a stored at bit (a - 1).
class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint64_t mask) : mask_(mask) {}

  static Blade identity() { return Blade{}; }
  static Blade generator(int a) { return Blade{std::uint64_t{1} << (a - 1)}; }

  // Indices must be strictly increasing and >= 1.
  static Blade from_indices(std::span<const int> indices) {
    std::uint64_t mask = 0;
    int prev = 0;
    for (int a : indices) {
      if (a <= prev || a > kMaxGenerators)
        throw UsageError("blade indices must be strictly increasing in 1.." +
                         std::to_string(kMaxGenerators));
      mask |= std::uint64_t{1} << (a - 1);
      prev = a;
    }
    return Blade{mask};
  }
  static Blade from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int rank() const { return std::popcount(mask_); }
  constexpr bool contains(int a) const { return (mask_ >> (a - 1)) & 1U; }
  bool valid_for(const Signature& sig) const { return (mask_ & ~sig.full_mask()) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(rank());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend constexpr auto operator<=>(const Blade&, const Blade&) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Canonical display order: by rank, then lexicographically by index list.
inline bool canonical_less(Blade a, Blade b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  // Same rank: the lowest differing generator decides, the blade owning it
  // comes first.
  std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  return (a.mask() >> std::countr_zero(diff)) & 1U;
}

struct SignedBlade {
  int sign;
  Blade blade;
  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// Product of two basis blades: reordering sign times metric contraction of
/// the shared generators.
inline SignedBlade blade_mul(Blade a, Blade b, const Signature& sig) {
  const std::uint64_t am = a.mask();
  const std::uint64_t bm = b.mask();
  // Count pairs (i in a, j in b) with i > j: each is one transposition.
  int swaps = 0;
  for (std::uint64_t shifted = am >> 1; shifted != 0; shifted >>= 1)
    swaps += std::popcount(shifted & bm);
  swaps += std::popcount(am & bm & sig.negative_mask());
  return {(swaps & 1) ? -1 : 1, Blade{am ^ bm}};
}

template <Scalar S>
class Multivector {
 public:
  using Coef = Coefficient<S>;
  using Term = std::pair<Blade, Coef>;

  Multivector(Signature sig, Field field) : sig_(sig), field_(field) {}

  /// Builds from arbitrary terms: duplicate blades are summed, zeros pruned.
  static Multivector from_terms(Signature sig, Field field, std::vector<Term> terms) {
    Multivector out(sig, field);
    for (const auto& [blade, coef] : terms) {
      if (!blade.valid_for(sig))
        throw UsageError("blade uses a generator beyond n = " + std::to_string(sig.n()));
      if (field == Field::Real && !coef.is_real())
        throw UsageError("real multivector cannot carry an imaginary coefficient");
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    for (auto& term : terms) {
      if (!out.terms_.empty() && out.terms_.back().first == term.first)
        out.terms_.back().second += term.second;
      else
        out.terms_.push_back(std::move(term));
    }
    out.prune();
    return out;
  }

  static Multivector scalar(Signature sig, Field field, Coef c) {
    return from_terms(sig, field, {{Blade::identity(), std::move(c)}});
  }
  static Multivector blade(Signature sig, Field field, Blade b, Coef c = Coef(S(1))) {
    return from_terms(sig, field, {{b, std::move(c)}});
  }

  const Signature& signature() const { return sig_; }
  Field field() const { return field_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coef coefficient(Blade b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, Blade key) { return t.first < key; });
    if (it != terms_.end() && it->first == b) return it->second;
    return Coef{};
  }

  bool compatible(const Multivector& o) const { return sig_ == o.sig_ && field_ == o.field_; }

  // Exact equality of term maps; floats compare bitwise (use approx_equal).
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.compatible(b) && a.terms_ == b.terms_;
  }

  /// Scales each term by a sign chosen from its blade (used by the grade
  /// automorphisms) and optionally conjugates coefficients.
  template <class SignFn>
  Multivector map_terms(SignFn&& sign_of, bool conjugate = false) const {
    Multivector out(sig_, field_);
    out.terms_.reserve(terms_.size());
    for (const auto& [blade, coef] : terms_) {
      Coef c = conjugate ? coef.conj() : coef;
      out.terms_.emplace_back(blade, sign_of(blade) < 0 ? -c : c);
    }
    return out;
  }

  template <class Pred>
  Multivector filter(Pred&& keep) const {
    Multivector out(sig_, field_);
    for (const auto& t : terms_)
      if (keep(t.first)) out.terms_.push_back(t);
    return out;
  }

  // Terms must already be sorted by blade with no duplicates; zeros are pruned.
  static Multivector adopt_sorted(Signature sig, Field field, std::vector<Term> terms) {
    Multivector out(sig, field);
    out.terms_ = std::move(terms);
    out.prune();
    return out;
  }

 private:
  void prune() {
    std::erase_if(terms_, [](const Term& t) { return t.second.is_zero(); });
  }

  Signature sig_;
  Field field_;
  std::vector<Term> terms_;  // sorted by blade mask, no zero coefficients
};

namespace detail {

template <Scalar S>
void require_compatible(const Multivector<S>& a, const Multivector<S>& b) {
  if (a.signature() != b.signature())
    throw UsageError("signature mismatch: (" + a.signature().to_string() + ") vs (" +
                     b.signature().to_string() + ")");
  if (a.field() != b.field()) throw UsageError("field mismatch");
}

template <Scalar S>
void require_complex(const Multivector<S>& a, const char* op) {
  if (a.field() != Field::Complex)
    throw UsageError(std::string(op) + " is defined only over the complex field");
}

template <Scalar S>
Multivector<S> merge(const Multivector<S>& a, const Multivector<S>& b, bool subtract) {
  require_compatible(a, b);
  using Term = typename Multivector<S>::Term;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      out.emplace_back(ib->first, subtract ? -ib->second : ib->second);
      ++ib;
    } else {
      out.emplace_back(ia->first, subtract ? ia->second - ib->second : ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return Multivector<S>::adopt_sorted(a.signature(), a.field(), std::move(out));
}

inline int reversion_sign(int rank) { return ((rank * (rank - 1) / 2) & 1) ? -1 : 1; }
inline int involution_sign(int rank) { return (rank & 1) ? -1 : 1; }

}  // namespace detail

template <Scalar S>
Multivector<S> operator+(const Multivector<S>& a, const Multivector<S>& b) {
  return detail::merge(a, b, false);
}

template <Scalar S>
Multivector<S> operator-(const Multivector<S>& a, const Multivector<S>& b) {
  return detail::merge(a, b, true);
}

template <Scalar S>
Multivector<S> operator-(const Multivector<S>& a) {
  return a.map_terms([](Blade) { return -1; });
}

template <Scalar S>
Multivector<S> scalar_mul(const Coefficient<S>& c, const Multivector<S>& a) {
  if (a.field() == Field::Real && !c.is_real())
    throw UsageError("imaginary scalar applied to a real multivector");
  using Term = typename Multivector<S>::Term;
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& [blade, coef] : a.terms()) out.emplace_back(blade, c * coef);
  return Multivector<S>::adopt_sorted(a.signature(), a.field(), std::move(out));
}

template <Scalar S>
Multivector<S> add(const Multivector<S>& a, const Multivector<S>& b) { return a + b; }

template <Scalar S>
Multivector<S> neg(const Multivector<S>& a) { return -a; }

/// Bilinear extension of blade_mul. Dense accumulation for small n, hashed
/// accumulation otherwise so high-dimensional sparse inputs stay sparse.
template <Scalar S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
  detail::require_compatible(a, b);
  using Coef = Coefficient<S>;
  using Term = typename Multivector<S>::Term;
  const Signature& sig = a.signature();
  const bool real = a.field() == Field::Real;

  auto accumulate = [&](Coef& slot, const Coef& x, const Coef& y, int sign) {
    if (real) {
      if (sign > 0) slot.re += x.re * y.re;
      else slot.re -= x.re * y.re;
    } else {
      Coef prod = x * y;
      if (sign > 0) slot += prod;
      else slot -= prod;
    }
  };

  std::vector<Term> out;
  if (sig.n() <= 10) {
    std::vector<Coef> dense(std::size_t{1} << sig.n());
    std::vector<char> touched(dense.size(), 0);
    for (const auto& [ba, ca] : a.terms())
      for (const auto& [bb, cb] : b.terms()) {
        auto [sign, blade] = blade_mul(ba, bb, sig);
        accumulate(dense[blade.mask()], ca, cb, sign);
        touched[blade.mask()] = 1;
      }
    for (std::size_t m = 0; m < dense.size(); ++m)
      if (touched[m]) out.emplace_back(Blade{m}, std::move(dense[m]));
  } else {
    std::unordered_map<std::uint64_t, Coef> acc;
    acc.reserve(a.size() * b.size() / 2 + 1);
    for (const auto& [ba, ca] : a.terms())
      for (const auto& [bb, cb] : b.terms()) {
        auto [sign, blade] = blade_mul(ba, bb, sig);
        accumulate(acc[blade.mask()], ca, cb, sign);
      }
    out.reserve(acc.size());
    for (auto& [mask, coef] : acc) out.emplace_back(Blade{mask}, std::move(coef));
    std::sort(out.begin(), out.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
  }
  return Multivector<S>::adopt_sorted(sig, a.field(), std::move(out));
}

template <Scalar S>
Multivector<S> operator*(const Multivector<S>& a, const Multivector<S>& b) {
  return geometric_product(a, b);
}

template <Scalar S>
Multivector<S> grade_project(const Multivector<S>& a, int k) {
  if (k < 0 || k > a.signature().n())
    throw UsageError("rank " + std::to_string(k) + " outside 0.." +
                     std::to_string(a.signature().n()));
  return a.filter([k](Blade b) { return b.rank() == k; });
}

/// U~ : rank-k part scaled by (-1)^{k(k-1)/2}.
template <Scalar S>
Multivector<S> reversion(const Multivector<S>& a) {
  return a.map_terms([](Blade b) { return detail::reversion_sign(b.rank()); });
}

/// U^ : rank-k part scaled by (-1)^k.
template <Scalar S>
Multivector<S> grade_involution(const Multivector<S>& a) {
  return a.map_terms([](Blade b) { return detail::involution_sign(b.rank()); });
}

template <Scalar S>
Multivector<S> complex_conjugate(const Multivector<S>& a) {
  detail::require_complex(a, "complex conjugation");
  return a.map_terms([](Blade) { return 1; }, true);
}

/// U‡ = conjugate of the reversion.
template <Scalar S>
Multivector<S> pseudo_hermitian(const Multivector<S>& a) {
  detail::require_complex(a, "pseudo-Hermitian conjugation");
  return a.map_terms([](Blade b) { return detail::reversion_sign(b.rank()); }, true);
}

template <Scalar S>
Multivector<S> commutator(const Multivector<S>& a, const Multivector<S>& b) {
  return a * b - b * a;
}

template <Scalar S>
Multivector<S> anticommutator(const Multivector<S>& a, const Multivector<S>& b) {
  return a * b + b * a;
}

template <Scalar S>
Multivector<S> even_part(const Multivector<S>& a) {
  return a.filter([](Blade b) { return b.rank() % 2 == 0; });
}

template <Scalar S>
Multivector<S> odd_part(const Multivector<S>& a) {
  return a.filter([](Blade b) { return b.rank() % 2 == 1; });
}

template <Scalar S>
double max_abs_coefficient(const Multivector<S>& a) {
  double m = 0.0;
  for (const auto& [blade, c] : a.terms())
    m = std::max({m, ScalarTraits<S>::magnitude(c.re), ScalarTraits<S>::magnitude(c.im)});
  return m;
}

/// Float-backend comparison: every coefficient of a - b within rel_tol of the
/// larger operand's max-abs coefficient.
template <Scalar S>
bool approx_equal(const Multivector<S>& a, const Multivector<S>& b, double rel_tol = 1e-9) {
  const auto diff = a - b;
  const double scale = std::max({max_abs_coefficient(a), max_abs_coefficient(b), 1e-300});
  return max_abs_coefficient(diff) <= rel_tol * scale;
}

template <Scalar S>
Multivector<S> convert_rational(const Multivector<Rational>& a) {
  using Term = typename Multivector<S>::Term;
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& [blade, c] : a.terms())
    out.emplace_back(blade, Coefficient<S>(ScalarTraits<S>::from_rational(c.re),
                                           ScalarTraits<S>::from_rational(c.im)));
  return Multivector<S>::adopt_sorted(a.signature(), a.field(), std::move(out));
}

using ExactMultivector = Multivector<Rational>;
using FloatMultivector = Multivector<double>;

}  // namespace cliffqt
