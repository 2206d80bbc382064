#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffqt/dsl/ast.hpp"

namespace cliffqt::dsl {

/// A symbol decorated with the conjugations applied to it.
struct Letter {
  std::string symbol;
  std::uint8_t flags = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;
using GaussianRational = Coefficient<Rational>;

/// Expression expanded into the free associative algebra over decorated
/// symbols: a finite sum of coefficient × word, with products kept in order.
/// Two expressions with equal polynomials are equal for every binding, which
/// is what the eigenspace refinement relies on.
class Polynomial {
 public:
  static constexpr std::size_t kMaxTerms = 1U << 14;

  static Polynomial symbol(const std::string& name) {
    Polynomial p;
    p.terms_[Word{Letter{name, 0}}] = GaussianRational(Rational(1));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Word, GaussianRational>& terms() const { return terms_; }

  Polynomial scaled(const GaussianRational& c) const {
    Polynomial out;
    for (const auto& [w, k] : terms_) out.accumulate(w, c * k);
    return out;
  }

  Polynomial operator-() const { return scaled(GaussianRational(Rational(-1))); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [w, k] : b.terms_) out.accumulate(w, k);
    return out;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [wa, ka] : a.terms_)
      for (const auto& [wb, kb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.accumulate(w, ka * kb);
      }
    return out;
  }

  /// Pushes a conjugation down to the letters: anti-automorphisms reverse
  /// each word, complex conjugation conjugates the coefficients.
  Polynomial conjugated(Conjugation c) const {
    Polynomial out;
    for (const auto& [w, k] : terms_) {
      Word image;
      image.reserve(w.size());
      for (const auto& letter : w)
        image.push_back(Letter{letter.symbol, static_cast<std::uint8_t>(letter.flags ^ c.flags())});
      if (c.is_anti()) std::reverse(image.begin(), image.end());
      out.accumulate(image, c.conjugates() ? k.conj() : k);
    }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void accumulate(const Word& w, const GaussianRational& k) {
    auto [it, inserted] = terms_.try_emplace(w, k);
    if (!inserted) it->second += k;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<Word, GaussianRational> terms_;
};

/// Form of a non-symbol node from its children's forms (`b` is null for
/// unary nodes); nullopt past kMaxTerms words.
inline std::optional<Polynomial> combine(const Expr& node, const Polynomial& a,
                                         const Polynomial* b) {
  std::optional<Polynomial> out;
  switch (node.kind) {
    case NodeKind::Sym: return Polynomial::symbol(node.name);
    case NodeKind::Neg: out = -a; break;
    case NodeKind::ScalarMul: out = a.scaled(GaussianRational(node.scalar)); break;
    case NodeKind::IMul: out = a.scaled(GaussianRational::imaginary_unit()); break;
    case NodeKind::Conj: out = a.conjugated(node.conj); break;
    case NodeKind::Add: out = a + *b; break;
    default:
      if (a.size() * b->size() * 2 > Polynomial::kMaxTerms) return std::nullopt;
      if (node.kind == NodeKind::Prod) out = a * *b;
      else if (node.kind == NodeKind::Comm) out = a * *b - *b * a;
      else out = a * *b + *b * a;
  }
  if (out->size() > Polynomial::kMaxTerms) return std::nullopt;
  return out;
}

/// Expands `e`; nullopt when the expansion would exceed kMaxTerms words.
inline std::optional<Polynomial> normal_form(const Expr& e) {
  if (e.kind == NodeKind::Sym) return Polynomial::symbol(e.name);
  auto a = normal_form(*e.lhs);
  if (!a) return std::nullopt;
  std::optional<Polynomial> b;
  if (e.rhs) {
    b = normal_form(*e.rhs);
    if (!b) return std::nullopt;
  }
  return combine(e, *a, b ? &*b : nullptr);
}

}  // namespace cliffqt::dsl
