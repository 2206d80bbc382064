#pragma once

#include <map>
#include <optional>
#include <string>

#include "cliffqt/dsl/ast.hpp"
#include "cliffqt/mv_io.hpp"

namespace cliffqt::dsl {

template <Scalar S>
using Bindings = std::map<std::string, Multivector<S>>;

namespace detail {

template <Scalar S>
Multivector<S> evaluate(const Expr& e, const Bindings<S>& bindings) {
  switch (e.kind) {
    case NodeKind::Sym: return bindings.at(e.name);
    case NodeKind::Add: return evaluate(*e.lhs, bindings) + evaluate(*e.rhs, bindings);
    case NodeKind::Neg: return -evaluate(*e.lhs, bindings);
    case NodeKind::ScalarMul:
      return scalar_mul(Coefficient<S>(ScalarTraits<S>::from_rational(e.scalar)),
                        evaluate(*e.lhs, bindings));
    case NodeKind::IMul:
      return scalar_mul(Coefficient<S>::imaginary_unit(), evaluate(*e.lhs, bindings));
    case NodeKind::Prod: return evaluate(*e.lhs, bindings) * evaluate(*e.rhs, bindings);
    case NodeKind::Comm: return commutator(evaluate(*e.lhs, bindings), evaluate(*e.rhs, bindings));
    case NodeKind::AntiComm:
      return anticommutator(evaluate(*e.lhs, bindings), evaluate(*e.rhs, bindings));
    case NodeKind::Conj: return apply_conjugation(evaluate(*e.lhs, bindings), e.conj);
  }
  throw std::logic_error("unhandled expression node");
}

}  // namespace detail

/// Concrete value of `e`. Every free symbol must be bound, with a value of
/// the environment's field whose type lies inside its declared type.
template <Scalar S>
Multivector<S> eval_expr(const Expr& e, const TypeEnv& env, const Bindings<S>& bindings,
                         double rel_tol = kDefaultRelTol) {
  std::optional<Signature> sig;
  for (const auto& name : free_symbols(e)) {
    auto it = bindings.find(name);
    if (it == bindings.end()) throw PreconditionError("unbound symbol '" + name + "'");
    const auto& value = it->second;
    if (value.field() != env.field())
      throw UsageError("binding for '" + name + "' has the wrong field");
    if (sig && *sig != value.signature())
      throw UsageError("bindings disagree on the signature");
    sig = value.signature();
    const TypeSet declared = env.lookup(name);
    if (!member(value, declared, rel_tol))
      throw PreconditionError("binding for '" + name + "' has type " +
                              classify_by_rank(value, rel_tol).to_string() +
                              ", outside declared " + declared.to_string());
  }
  return detail::evaluate(e, bindings);
}

}  // namespace cliffqt::dsl
