#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliffqt/algebra.hpp"

namespace cliffqt {

/// The four main quaternion types: k̄ collects ranks k, k+4, k+8, ...
enum class MainType : std::uint8_t { T0 = 0, T1 = 1, T2 = 2, T3 = 3 };

inline constexpr int index(MainType t) { return static_cast<int>(t); }
inline constexpr MainType main_type(int k) { return static_cast<MainType>(k & 3); }
inline constexpr MainType main_type_of_rank(int rank) { return main_type(rank % 4); }

inline constexpr std::array<MainType, 4> kMainTypes = {MainType::T0, MainType::T1,
                                                       MainType::T2, MainType::T3};

struct TypeAtom {
  MainType main = MainType::T0;
  bool imaginary = false;

  constexpr int bit() const { return index(main) + (imaginary ? 4 : 0); }
  friend constexpr bool operator==(const TypeAtom&, const TypeAtom&) = default;
};

/// A direct sum of atom subspaces, as a bit set: bits 0..3 are the real atoms
/// 0̄..3̄, bits 4..7 the imaginary atoms i0̄..i3̄. Empty denotes {0}.
class TypeSet {
 public:
  constexpr TypeSet() = default;
  static constexpr TypeSet from_bits(std::uint8_t bits) {
    TypeSet t;
    t.bits_ = bits;
    return t;
  }
  static constexpr TypeSet of(std::initializer_list<TypeAtom> atoms) {
    TypeSet t;
    for (const auto& a : atoms) t.bits_ |= static_cast<std::uint8_t>(1U << a.bit());
    return t;
  }
  static constexpr TypeSet of(std::initializer_list<int> real_main_types) {
    TypeSet t;
    for (int k : real_main_types) t.bits_ |= static_cast<std::uint8_t>(1U << (k & 3));
    return t;
  }
  static constexpr TypeSet full(Field field) {
    return from_bits(field == Field::Real ? 0x0F : 0xFF);
  }

  /// Accepts "01", "23", "0123", "01+i23", "i0123", "∅" and "0set".
  static TypeSet parse(std::string_view text);

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(TypeAtom a) const { return (bits_ >> a.bit()) & 1U; }
  constexpr bool subset_of(TypeSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool has_imaginary() const { return (bits_ & 0xF0) != 0; }
  constexpr int count() const { return std::popcount(bits_); }

  constexpr TypeSet real_part() const { return from_bits(bits_ & 0x0F); }
  constexpr TypeSet imaginary_part() const { return from_bits(bits_ & 0xF0); }

  /// Multiplication by i: real atoms become imaginary and vice versa.
  constexpr TypeSet times_i() const {
    return from_bits(static_cast<std::uint8_t>(((bits_ & 0x0F) << 4) | (bits_ >> 4)));
  }

  std::vector<TypeAtom> atoms() const {
    std::vector<TypeAtom> out;
    for (int b = 0; b < 8; ++b)
      if ((bits_ >> b) & 1U) out.push_back({main_type(b), b >= 4});
    return out;
  }

  std::string to_string() const {
    if (empty()) return "∅";
    std::string real, imag;
    for (int k = 0; k < 4; ++k) {
      if ((bits_ >> k) & 1U) real += static_cast<char>('0' + k);
      if ((bits_ >> (k + 4)) & 1U) imag += static_cast<char>('0' + k);
    }
    if (imag.empty()) return real;
    if (real.empty()) return "i" + imag;
    return real + "+i" + imag;
  }

  constexpr TypeSet& operator|=(TypeSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr TypeSet& operator&=(TypeSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend constexpr TypeSet operator|(TypeSet a, TypeSet b) { return a |= b; }
  friend constexpr TypeSet operator&(TypeSet a, TypeSet b) { return a &= b; }
  friend constexpr bool operator==(TypeSet, TypeSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

inline TypeSet TypeSet::parse(std::string_view text) {
  auto fail = [&](std::size_t at, const std::string& why) -> TypeSet {
    throw ParseError("invalid type set '" + std::string(text) + "': " + why, 1, at + 1);
  };
  if (text == "∅" || text == "0set") return TypeSet{};
  if (text.empty()) return fail(0, "empty");
  std::size_t i = 0;
  std::uint8_t bits = 0;
  auto digits = [&](int shift) {
    const std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '3') {
      bits |= static_cast<std::uint8_t>(1U << (text[i] - '0' + shift));
      ++i;
    }
    if (i == start) fail(i, "expected digits 0-3");
  };
  if (text[0] == 'i') {
    ++i;
    digits(4);
  } else {
    digits(0);
    if (i < text.size()) {
      if (text[i] != '+') return fail(i, "expected '+i'");
      ++i;
      if (i >= text.size() || text[i] != 'i') return fail(i, "expected 'i'");
      ++i;
      digits(4);
    }
  }
  if (i != text.size()) return fail(i, "trailing characters");
  return from_bits(bits);
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(c);
}

/// Sum of C(n, r) over ranks r ≡ k (mod 4): the dimension of k̄ in Cl(p,q).
inline std::uint64_t type_dimension(int n, MainType k) {
  std::uint64_t d = 0;
  for (int r = index(k); r <= n; r += 4) d += binomial(n, r);
  return d;
}

// ---------------------------------------------------------------------------
// Conjugations
// ---------------------------------------------------------------------------

/// One of the seven nontrivial compositions of reversion (~), grade
/// involution (^) and complex conjugation (−). All three commute and are
/// involutions, so a composition is a set of flags.
class Conjugation {
 public:
  static constexpr std::uint8_t kRev = 1;
  static constexpr std::uint8_t kGri = 2;
  static constexpr std::uint8_t kCc = 4;

  constexpr Conjugation() = default;
  constexpr explicit Conjugation(std::uint8_t flags) : flags_(flags & 7) {}

  static constexpr Conjugation reversion() { return Conjugation(kRev); }
  static constexpr Conjugation grade_involution() { return Conjugation(kGri); }
  static constexpr Conjugation gri_rev() { return Conjugation(kGri | kRev); }
  static constexpr Conjugation complex_conj() { return Conjugation(kCc); }
  static constexpr Conjugation pseudo_hermitian() { return Conjugation(kCc | kRev); }
  static constexpr Conjugation gri_conj() { return Conjugation(kGri | kCc); }
  static constexpr Conjugation gri_pseudo_hermitian() { return Conjugation(kGri | kCc | kRev); }

  constexpr std::uint8_t flags() const { return flags_; }
  constexpr bool identity() const { return flags_ == 0; }
  constexpr bool reverses() const { return flags_ & kRev; }
  constexpr bool involutes() const { return flags_ & kGri; }
  constexpr bool conjugates() const { return flags_ & kCc; }
  /// Anti-automorphisms reverse factor order.
  constexpr bool is_anti() const { return reverses(); }
  constexpr bool complex_only() const { return conjugates(); }

  constexpr Conjugation then(Conjugation o) const { return Conjugation(flags_ ^ o.flags_); }

  std::string name() const {
    switch (flags_) {
      case 0: return "id";
      case kRev: return "~";
      case kGri: return "^";
      case kGri | kRev: return "^~";
      case kCc: return "-";
      case kCc | kRev: return "‡";
      case kGri | kCc: return "^-";
      default: return "^‡";
    }
  }

  /// Eigenvalue on an atom: (−1)^k for ^, (−1)^{k(k−1)/2} for ~, −1 on
  /// imaginary atoms for −.
  constexpr int sign_on(TypeAtom a) const {
    const int k = index(a.main);
    int s = 1;
    if (involutes() && (k & 1)) s = -s;
    if (reverses() && ((k * (k - 1) / 2) & 1)) s = -s;
    if (conjugates() && a.imaginary) s = -s;
    return s;
  }

  friend constexpr bool operator==(Conjugation, Conjugation) = default;

 private:
  std::uint8_t flags_ = 0;
};

/// The conjugations meaningful over a field: 3 real, 7 complex.
inline std::vector<Conjugation> conjugations(Field field) {
  std::vector<Conjugation> out;
  for (std::uint8_t f = 1; f < 8; ++f) {
    Conjugation c(f);
    if (field == Field::Complex || !c.complex_only()) out.push_back(c);
  }
  return out;
}

template <Scalar S>
Multivector<S> apply_conjugation(const Multivector<S>& u, Conjugation c) {
  if (c.complex_only() && u.field() != Field::Complex)
    throw UsageError("conjugation " + c.name() + " is defined only over the complex field");
  return u.map_terms(
      [c](Blade b) { return c.sign_on({main_type_of_rank(b.rank()), false}); }, c.conjugates());
}

/// Per-atom eigenvalue table of a conjugation. Real fields report the four
/// real atoms; imaginary entries are 0 there.
struct AtomSigns {
  std::array<int, 8> sign{};
  int at(TypeAtom a) const { return sign[a.bit()]; }
};

inline AtomSigns conjugation_action(Conjugation c, Field field) {
  if (c.identity()) throw UsageError("identity is not a conjugation");
  if (c.complex_only() && field != Field::Complex)
    throw UsageError("conjugation " + c.name() + " is defined only over the complex field");
  AtomSigns out;
  for (const auto& a : TypeSet::full(field).atoms()) out.sign[a.bit()] = c.sign_on(a);
  return out;
}

/// {U : c(U) = sign·U} as a type set.
inline TypeSet eigenspace(Conjugation c, int sign, Field field) {
  if (sign != 1 && sign != -1) throw UsageError("eigenvalue must be +1 or -1");
  const AtomSigns signs = conjugation_action(c, field);
  TypeSet out;
  for (const auto& a : TypeSet::full(field).atoms())
    if (signs.at(a) == sign) out |= TypeSet::of({a});
  return out;
}

// ---------------------------------------------------------------------------
// Closure tables for [·,·] and {·,·}
// ---------------------------------------------------------------------------

enum class Bracket { Commutator, Anticommutator };

inline std::string_view to_string(Bracket b) {
  return b == Bracket::Commutator ? "commutator" : "anticommutator";
}

using AtomTable = std::array<std::array<MainType, 4>, 4>;

struct ClosureTables {
  AtomTable commutator;
  AtomTable anticommutator;

  const AtomTable& table(Bracket b) const {
    return b == Bracket::Commutator ? commutator : anticommutator;
  }
  AtomTable& table(Bracket b) { return b == Bracket::Commutator ? commutator : anticommutator; }

  static ClosureTables hard_coded() {
    using enum MainType;
    ClosureTables t;
    // [k,k] -> 2; [k,2] -> k; [0,1] -> 3; [0,3] -> 1; [1,3] -> 0.
    t.commutator = {{{T2, T3, T0, T1},
                     {T3, T2, T1, T0},
                     {T0, T1, T2, T3},
                     {T1, T0, T3, T2}}};
    // {k,k} -> 0; {k,0} -> k; {1,2} -> 3; {1,3} -> 2; {2,3} -> 1.
    t.anticommutator = {{{T0, T1, T2, T3},
                         {T1, T0, T3, T2},
                         {T2, T3, T0, T1},
                         {T3, T2, T1, T0}}};
    return t;
  }

  friend bool operator==(const ClosureTables&, const ClosureTables&) = default;
};

using DerivedAtomTable = std::array<std::array<TypeSet, 4>, 4>;

/// Main-type tables realised by the basis blades of one signature: entry
/// (k,l) is the union of rank types of every nonzero [u,v] (or {u,v}) with
/// u ∈ k̄, v ∈ l̄.
inline std::array<DerivedAtomTable, 2> derive_tables_from_blades(const Signature& sig) {
  std::array<DerivedAtomTable, 2> out{};
  const std::uint64_t count = std::uint64_t{1} << sig.n();
  for (std::uint64_t a = 0; a < count; ++a)
    for (std::uint64_t b = 0; b < count; ++b) {
      const auto uv = blade_mul(Blade{a}, Blade{b}, sig);
      const auto vu = blade_mul(Blade{b}, Blade{a}, sig);
      const int ka = index(main_type_of_rank(Blade{a}.rank()));
      const int kb = index(main_type_of_rank(Blade{b}.rank()));
      const TypeSet result = TypeSet::of({index(main_type_of_rank(uv.blade.rank()))});
      if (uv.sign - vu.sign != 0) out[0][ka][kb] |= result;
      if (uv.sign + vu.sign != 0) out[1][ka][kb] |= result;
    }
  return out;
}

inline bool tables_agree(const AtomTable& table, const DerivedAtomTable& derived) {
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l)
      if (derived[k][l] != TypeSet::of({index(table[k][l])})) return false;
  return true;
}

/// The hard-coded tables, re-derived once from the blades of Cl(3,2) before
/// first use. A disagreement is a programming error.
inline const ClosureTables& checked_tables() {
  static const ClosureTables tables = [] {
    ClosureTables t = ClosureTables::hard_coded();
    const auto derived = derive_tables_from_blades(Signature(3, 2));
    if (!tables_agree(t.commutator, derived[0]) || !tables_agree(t.anticommutator, derived[1]))
      throw std::logic_error("closure tables disagree with blade arithmetic at n = 5");
    return t;
  }();
  return tables;
}

/// Bilinear lift of the single-atom table: union over atom pairs, imaginary
/// flags combine by XOR (i·i = −1 stays real).
inline TypeSet bracket_type(Bracket op, TypeSet a, TypeSet b,
                            const ClosureTables& tables = checked_tables()) {
  TypeSet out;
  const AtomTable& t = tables.table(op);
  for (const auto& x : a.atoms())
    for (const auto& y : b.atoms())
      out |= TypeSet::of({TypeAtom{t[index(x.main)][index(y.main)], x.imaginary != y.imaginary}});
  return out;
}

inline TypeSet commutator_type(TypeSet a, TypeSet b,
                               const ClosureTables& tables = checked_tables()) {
  return bracket_type(Bracket::Commutator, a, b, tables);
}

inline TypeSet anticommutator_type(TypeSet a, TypeSet b,
                                   const ClosureTables& tables = checked_tables()) {
  return bracket_type(Bracket::Anticommutator, a, b, tables);
}

// UV = ([U,V] + {U,V}) / 2
inline TypeSet product_type(TypeSet a, TypeSet b, const ClosureTables& tables = checked_tables()) {
  return commutator_type(a, b, tables) | anticommutator_type(a, b, tables);
}

// ---------------------------------------------------------------------------
// Classification and projection
// ---------------------------------------------------------------------------

inline constexpr double kDefaultRelTol = 1e-9;

namespace detail {

// Magnitude above which a float coefficient counts as nonzero. Exact
// backend: any nonzero value.
template <Scalar S>
struct NonzeroTest {
  double threshold = 0.0;
  NonzeroTest(const Multivector<S>& u, double rel_tol) {
    if constexpr (ScalarTraits<S>::backend == Backend::Float)
      threshold = rel_tol * max_abs_coefficient(u);
  }
  bool operator()(const S& x) const {
    if constexpr (ScalarTraits<S>::backend == Backend::Exact)
      return !ScalarTraits<S>::is_zero(x);
    else
      return ScalarTraits<S>::magnitude(x) > threshold;
  }
};

}  // namespace detail

/// Minimal type set containing U, read off blade ranks mod 4; real and
/// imaginary coefficient parts map to separate atoms. classify(0) = ∅.
template <Scalar S>
TypeSet classify_by_rank(const Multivector<S>& u, double rel_tol = kDefaultRelTol) {
  const detail::NonzeroTest<S> nonzero(u, rel_tol);
  TypeSet out;
  for (const auto& [blade, c] : u.terms()) {
    const MainType k = main_type_of_rank(blade.rank());
    if (nonzero(c.re)) out |= TypeSet::of({TypeAtom{k, false}});
    if (nonzero(c.im)) out |= TypeSet::of({TypeAtom{k, true}});
  }
  return out;
}

/// P_k(U) = ¼(U + s1·U^ + s2·U~ + s3·U^~), with s1 = (−1)^k, s2 = (−1)^{k(k−1)/2},
/// s3 = s1·s2. Never inspects blade ranks directly.
template <Scalar S>
Multivector<S> qtype_project(const Multivector<S>& u, MainType k) {
  const TypeAtom atom{k, false};
  const int s1 = Conjugation::grade_involution().sign_on(atom);
  const int s2 = Conjugation::reversion().sign_on(atom);
  auto signed_term = [](int s, const Multivector<S>& x) { return s > 0 ? x : -x; };
  const auto hat = grade_involution(u);
  const auto sum = u + signed_term(s1, hat) + signed_term(s2, reversion(u)) +
                   signed_term(s1 * s2, reversion(hat));
  return scalar_mul(Coefficient<S>(S(1) / S(4)), sum);
}

/// Same answer as classify_by_rank, computed through the conjugation
/// projectors instead of blade ranks.
template <Scalar S>
TypeSet classify_by_conjugation(const Multivector<S>& u, double rel_tol = kDefaultRelTol) {
  const detail::NonzeroTest<S> nonzero(u, rel_tol);
  TypeSet out;
  for (MainType k : kMainTypes) {
    const auto part = qtype_project(u, k);
    for (const auto& [blade, c] : part.terms()) {
      if (nonzero(c.re)) out |= TypeSet::of({TypeAtom{k, false}});
      if (nonzero(c.im)) out |= TypeSet::of({TypeAtom{k, true}});
    }
  }
  return out;
}

/// U ∈ t. Exact backend: strict containment of the minimal type. Float
/// backend: every coefficient outside t is below rel_tol·max|U|.
template <Scalar S>
bool member(const Multivector<S>& u, TypeSet t, double rel_tol = kDefaultRelTol) {
  return classify_by_rank(u, rel_tol).subset_of(t);
}

}  // namespace cliffqt
