#pragma once

#include <optional>

#include "cliffqt/dsl/ast.hpp"
#include "cliffqt/dsl/normal_form.hpp"

namespace cliffqt::dsl {

namespace detail {

struct Inferred {
  TypeSet type;
  std::optional<Polynomial> nf;
};

/// Narrows `t` using every conjugation that fixes or negates the node's
/// normal form. An identically zero node has type ∅.
inline TypeSet refine(TypeSet t, const std::optional<Polynomial>& nf, Field field) {
  if (!nf) return t;
  if (nf->is_zero()) return TypeSet{};
  const Polynomial negated = -*nf;
  for (const Conjugation c : conjugations(field)) {
    const Polynomial image = nf->conjugated(c);
    if (image == *nf)
      t &= eigenspace(c, +1, field);
    else if (image == negated)
      t &= eigenspace(c, -1, field);
  }
  return t;
}

inline Inferred infer(const Expr& e, const TypeEnv& env, const ClosureTables& tables) {
  const Field field = env.field();
  if (e.kind == NodeKind::Sym) return {env.lookup(e.name), Polynomial::symbol(e.name)};

  const Inferred a = infer(*e.lhs, env, tables);
  std::optional<Inferred> b;
  if (e.rhs) b = infer(*e.rhs, env, tables);

  TypeSet t;
  switch (e.kind) {
    case NodeKind::Add: t = a.type | b->type; break;
    case NodeKind::Neg:
    case NodeKind::ScalarMul: t = a.type; break;
    case NodeKind::IMul: t = a.type.times_i(); break;
    case NodeKind::Prod: t = product_type(a.type, b->type, tables); break;
    case NodeKind::Comm: t = commutator_type(a.type, b->type, tables); break;
    case NodeKind::AntiComm: t = anticommutator_type(a.type, b->type, tables); break;
    // Every conjugation maps each atom subspace onto itself.
    case NodeKind::Conj: t = a.type; break;
    case NodeKind::Sym: break;
  }
  if (e.kind == NodeKind::ScalarMul && sgn(e.scalar) == 0) t = TypeSet{};

  std::optional<Polynomial> nf;
  if (a.nf && (!b || b->nf)) nf = combine(e, *a.nf, b ? &*b->nf : nullptr);
  return {refine(t, nf, field), std::move(nf)};
}

}  // namespace detail

/// Sound over-approximation of the quaternion type of `e`: closure tables
/// compose child types bottom-up, then each node is intersected with the
/// eigenspace of any conjugation under which its expansion is invariant or
/// anti-invariant.
inline TypeSet infer_type(const Expr& e, const TypeEnv& env,
                          const ClosureTables& tables = checked_tables()) {
  return detail::infer(e, env, tables).type;
}

/// Compositional pass only, without eigenspace refinement.
inline TypeSet infer_type_compositional(const Expr& e, const TypeEnv& env,
                                        const ClosureTables& tables = checked_tables()) {
  if (e.kind == NodeKind::Sym) return env.lookup(e.name);
  const TypeSet a = infer_type_compositional(*e.lhs, env, tables);
  const TypeSet b = e.rhs ? infer_type_compositional(*e.rhs, env, tables) : TypeSet{};
  switch (e.kind) {
    case NodeKind::Add: return a | b;
    case NodeKind::IMul: return a.times_i();
    case NodeKind::Prod: return product_type(a, b, tables);
    case NodeKind::Comm: return commutator_type(a, b, tables);
    case NodeKind::AntiComm: return anticommutator_type(a, b, tables);
    case NodeKind::ScalarMul: return sgn(e.scalar) == 0 ? TypeSet{} : a;
    default: return a;
  }
}

}  // namespace cliffqt::dsl
