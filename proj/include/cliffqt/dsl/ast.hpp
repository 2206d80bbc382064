#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>

#include "cliffqt/qtype.hpp"

namespace cliffqt::dsl {

enum class NodeKind { Sym, Add, Neg, ScalarMul, IMul, Prod, Comm, AntiComm, Conj };

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression node. Which fields are meaningful depends on `kind`:
/// Sym uses `name`, ScalarMul uses `scalar`, Conj uses `conj`; unary nodes
/// use `lhs`, binary nodes `lhs` and `rhs`.
struct Expr {
  NodeKind kind = NodeKind::Sym;
  std::string name;
  Rational scalar;
  Conjugation conj;
  ExprPtr lhs;
  ExprPtr rhs;
  SourcePos pos;
};

inline ExprPtr make_node(NodeKind kind, ExprPtr lhs, ExprPtr rhs = nullptr, SourcePos pos = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  e->pos = pos;
  return e;
}

inline ExprPtr sym(std::string name, SourcePos pos = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = NodeKind::Sym;
  e->name = std::move(name);
  e->pos = pos;
  return e;
}
inline ExprPtr add(ExprPtr a, ExprPtr b, SourcePos pos = {}) {
  return make_node(NodeKind::Add, std::move(a), std::move(b), pos);
}
inline ExprPtr neg(ExprPtr a, SourcePos pos = {}) {
  return make_node(NodeKind::Neg, std::move(a), nullptr, pos);
}
inline ExprPtr imul(ExprPtr a, SourcePos pos = {}) {
  return make_node(NodeKind::IMul, std::move(a), nullptr, pos);
}
inline ExprPtr prod(ExprPtr a, ExprPtr b, SourcePos pos = {}) {
  return make_node(NodeKind::Prod, std::move(a), std::move(b), pos);
}
inline ExprPtr comm(ExprPtr a, ExprPtr b, SourcePos pos = {}) {
  return make_node(NodeKind::Comm, std::move(a), std::move(b), pos);
}
inline ExprPtr anticomm(ExprPtr a, ExprPtr b, SourcePos pos = {}) {
  return make_node(NodeKind::AntiComm, std::move(a), std::move(b), pos);
}
inline ExprPtr scalar_mul(Rational r, ExprPtr a, SourcePos pos = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = NodeKind::ScalarMul;
  e->scalar = std::move(r);
  e->lhs = std::move(a);
  e->pos = pos;
  return e;
}
inline ExprPtr conj(Conjugation c, ExprPtr a, SourcePos pos = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = NodeKind::Conj;
  e->conj = c;
  e->lhs = std::move(a);
  e->pos = pos;
  return e;
}

/// Structural equality; source positions are ignored.
inline bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Sym: return a.name == b.name;
    case NodeKind::ScalarMul:
      return a.scalar == b.scalar && same_tree(*a.lhs, *b.lhs);
    case NodeKind::Conj: return a.conj == b.conj && same_tree(*a.lhs, *b.lhs);
    case NodeKind::Neg:
    case NodeKind::IMul: return same_tree(*a.lhs, *b.lhs);
    default: return same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
  }
}

inline void collect_symbols(const Expr& e, std::set<std::string>& out) {
  if (e.kind == NodeKind::Sym) {
    out.insert(e.name);
    return;
  }
  if (e.lhs) collect_symbols(*e.lhs, out);
  if (e.rhs) collect_symbols(*e.rhs, out);
}

inline std::set<std::string> free_symbols(const Expr& e) {
  std::set<std::string> out;
  collect_symbols(e, out);
  return out;
}

/// Source keyword of a single conjugation node.
inline std::string conjugation_keyword(Conjugation c) {
  if (c == Conjugation::reversion()) return "rev";
  if (c == Conjugation::grade_involution()) return "gri";
  if (c == Conjugation::complex_conj()) return "conj";
  if (c == Conjugation::pseudo_hermitian()) return "phc";
  throw UsageError("conjugation " + c.name() + " has no single keyword; nest rev/gri/conj");
}

/// Symbol → declared type. Symbols never declared are unconstrained.
class TypeEnv {
 public:
  explicit TypeEnv(Field field = Field::Real) : field_(field) {}

  Field field() const { return field_; }

  void declare(const std::string& name, TypeSet t) {
    if (field_ == Field::Real && t.has_imaginary())
      throw UsageError("imaginary type atoms require the complex field");
    if (!types_.emplace(name, t).second)
      throw UsageError("symbol '" + name + "' declared twice");
  }
  // Overwrites; used to widen or narrow a binding programmatically.
  void set(const std::string& name, TypeSet t) { types_[name] = t; }

  bool declared(const std::string& name) const { return types_.contains(name); }
  TypeSet lookup(const std::string& name) const {
    auto it = types_.find(name);
    return it == types_.end() ? TypeSet::full(field_) : it->second;
  }
  const std::map<std::string, TypeSet>& declarations() const { return types_; }

 private:
  Field field_;
  std::map<std::string, TypeSet> types_;
};

struct Program {
  TypeEnv env;
  ExprPtr expr;
};

namespace detail {

enum class Prec { Sum = 0, Prod = 1, Unary = 2 };

inline std::string format_at(const Expr& e, Prec ctx);

inline std::string wrap(const std::string& s, bool parens) { return parens ? "(" + s + ")" : s; }

inline std::string format_at(const Expr& e, Prec ctx) {
  switch (e.kind) {
    case NodeKind::Sym: return e.name;
    case NodeKind::Add: {
      std::string rhs = e.rhs->kind == NodeKind::Neg
                            ? " - " + format_at(*e.rhs->lhs, Prec::Unary)
                            : " + " + format_at(*e.rhs, Prec::Prod);
      return wrap(format_at(*e.lhs, Prec::Sum) + rhs, ctx > Prec::Sum);
    }
    case NodeKind::Prod:
      return wrap(format_at(*e.lhs, Prec::Prod) + "*" + format_at(*e.rhs, Prec::Unary),
                  ctx > Prec::Prod);
    case NodeKind::Neg: return "-" + format_at(*e.lhs, Prec::Unary);
    case NodeKind::ScalarMul: return e.scalar.get_str() + "*" + format_at(*e.lhs, Prec::Unary);
    case NodeKind::IMul: return "i*" + format_at(*e.lhs, Prec::Unary);
    case NodeKind::Comm:
      return "[" + format_at(*e.lhs, Prec::Sum) + ", " + format_at(*e.rhs, Prec::Sum) + "]";
    case NodeKind::AntiComm:
      return "{" + format_at(*e.lhs, Prec::Sum) + ", " + format_at(*e.rhs, Prec::Sum) + "}";
    case NodeKind::Conj:
      return conjugation_keyword(e.conj) + "(" + format_at(*e.lhs, Prec::Sum) + ")";
  }
  return {};
}

}  // namespace detail

/// Source text that parses back to the same tree.
inline std::string format_expr(const Expr& e) { return detail::format_at(e, detail::Prec::Sum); }

inline std::string format_program(const Program& p) {
  std::string out;
  for (const auto& [name, t] : p.env.declarations()) out += "let " + name + ":" + t.to_string() + "; ";
  return out + format_expr(*p.expr);
}

}  // namespace cliffqt::dsl
