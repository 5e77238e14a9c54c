#pragma once

// Random generators shared by the test suites. Every generator takes the
// engine by reference and is deterministic for a fixed seed. Symbols come
// from a fixed table with one arity each, so generated formulas always have
// a consistent signature: constants c d, functions f/1 g/2, predicates
// p/1 q/2 r/0.

#include <random>
#include <string>
#include <vector>

#include "tableaux/extended.hpp"
#include "tableaux/semantics.hpp"
#include "tableaux/syntax.hpp"

namespace tableaux::testgen {

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline const std::vector<std::string>& var_pool() {
  static const std::vector<std::string> pool{"X", "Y", "Z", "U", "V", "W"};
  return pool;
}

// Terms with bound indices below `binders`, so binders = 0 gives locally
// closed terms.
inline Term random_term(Rng& rng, std::size_t depth, std::size_t binders,
                        const std::vector<std::string>& vars) {
  std::size_t leaf_kinds = 1 + (vars.empty() ? 0 : 1) + (binders > 0 ? 1 : 0);
  if (depth == 0 || chance(rng, 0.4)) {
    std::size_t which = pick(rng, leaf_kinds);
    if (which == 0) return Term::fun(chance(rng, 0.5) ? "c" : "d");
    if (which == 1 && !vars.empty()) return Term::free(vars[pick(rng, vars.size())]);
    return Term::bound(pick(rng, binders));
  }
  if (chance(rng, 0.5)) return Term::fun("f", {random_term(rng, depth - 1, binders, vars)});
  return Term::fun("g", {random_term(rng, depth - 1, binders, vars),
                         random_term(rng, depth - 1, binders, vars)});
}

inline Form random_atom(Rng& rng, std::size_t depth, std::size_t binders,
                        const std::vector<std::string>& vars) {
  switch (pick(rng, 4)) {
    case 0:
      return Form::bot();
    case 1:
      return Form::pred("r");
    case 2:
      return Form::pred("p", {random_term(rng, depth, binders, vars)});
    default:
      return Form::pred("q", {random_term(rng, depth, binders, vars),
                              random_term(rng, depth, binders, vars)});
  }
}

// Formulas whose dangling indices stay below `binders`; locally closed when
// binders = 0.
inline Form random_form(Rng& rng, std::size_t depth, std::size_t binders,
                        const std::vector<std::string>& vars) {
  if (depth == 0 || chance(rng, 0.3)) return random_atom(rng, 2, binders, vars);
  switch (pick(rng, 3)) {
    case 0:
      return Form::neg(random_form(rng, depth - 1, binders, vars));
    case 1:
      return Form::disj(random_form(rng, depth - 1, binders, vars),
                        random_form(rng, depth - 1, binders, vars));
    default:
      return Form::all(random_form(rng, depth - 1, binders + 1, vars));
  }
}

inline Form random_closed_form(Rng& rng, std::size_t depth) {
  return random_form(rng, depth, 0, {});
}

// Substitution binding a random subset of names to locally closed terms.
inline Substitution random_subst(Rng& rng, const std::vector<std::string>& names,
                                 const std::vector<std::string>& range_vars) {
  Substitution sigma;
  for (const std::string& name : names)
    if (chance(rng, 0.7)) sigma.bind(name, random_term(rng, 2, 0, range_vars));
  return sigma;
}

// Replaces the free variable by the index that open would put there: the
// inverse of opening, used to build binders over existing formulas.
inline Term abstract_var(const Term& t, const std::string& name, std::size_t j) {
  switch (t.kind()) {
    case TermKind::Bound:
      return t;
    case TermKind::Free:
      return t.name() == name ? Term::bound(j) : t;
    case TermKind::Fun: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& arg : t.args()) args.push_back(abstract_var(arg, name, j));
      return Term::fun(t.symbol(), std::move(args));
    }
  }
  return t;
}

inline Form abstract_var(const Form& f, const std::string& name, std::size_t j) {
  switch (f.kind()) {
    case FormKind::Bot:
      return f;
    case FormKind::Pred: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const Term& arg : f.args()) args.push_back(abstract_var(arg, name, j));
      return Form::pred(f.symbol(), std::move(args));
    }
    case FormKind::Neg:
      return Form::neg(abstract_var(f.child(), name, j));
    case FormKind::Or:
      return Form::disj(abstract_var(f.left(), name, j), abstract_var(f.right(), name, j));
    case FormKind::All:
      return Form::all(abstract_var(f.child(), name, j + 1));
  }
  return f;
}

// A random model interpreting the given signature, tables uniform.
inline FiniteModel random_model(Rng& rng, const Signature& sig, std::size_t size) {
  FiniteModel m(size);
  for (const auto& [symbol, arity] : sig.funcs) {
    std::size_t length = 1;
    for (std::size_t i = 0; i < arity; ++i) length *= size;
    std::vector<std::size_t> table(length);
    for (auto& entry : table) entry = pick(rng, size);
    m.set_fun(symbol, arity, std::move(table));
  }
  for (const auto& [symbol, arity] : sig.preds) {
    std::size_t length = 1;
    for (std::size_t i = 0; i < arity; ++i) length *= size;
    std::vector<bool> table(length);
    for (std::size_t i = 0; i < length; ++i) table[i] = chance(rng, 0.5);
    m.set_pred(symbol, arity, std::move(table));
  }
  return m;
}

inline FreeEnv random_env(Rng& rng, const std::set<std::string>& vars, std::size_t size) {
  FreeEnv env(0);
  for (const std::string& name : vars) env.set(name, pick(rng, size));
  return env;
}

// Extended syntax, for the translation suites. Binder names reuse the free
// variable pool, so shadowing happens regularly.
inline ETerm random_eterm(Rng& rng, std::size_t depth, const std::vector<std::string>& vars) {
  if (depth == 0 || chance(rng, 0.4)) {
    if (!vars.empty() && chance(rng, 0.6)) return ETerm::var(vars[pick(rng, vars.size())]);
    return ETerm::fun(chance(rng, 0.5) ? "c" : "d", {});
  }
  if (chance(rng, 0.5)) return ETerm::fun("f", {random_eterm(rng, depth - 1, vars)});
  return ETerm::fun("g", {random_eterm(rng, depth - 1, vars), random_eterm(rng, depth - 1, vars)});
}

inline EForm random_eform(Rng& rng, std::size_t depth, std::vector<std::string> vars) {
  if (depth == 0 || chance(rng, 0.25)) {
    switch (pick(rng, 5)) {
      case 0:
        return EForm::bot();
      case 1:
        return EForm::top();
      case 2:
        return EForm::pred("r", {});
      case 3:
        return EForm::pred("p", {random_eterm(rng, 2, vars)});
      default:
        return EForm::pred("q", {random_eterm(rng, 2, vars), random_eterm(rng, 2, vars)});
    }
  }
  switch (pick(rng, 6)) {
    case 0:
      return EForm::neg(random_eform(rng, depth - 1, vars));
    case 1:
      return EForm::conj(random_eform(rng, depth - 1, vars), random_eform(rng, depth - 1, vars));
    case 2:
      return EForm::disj(random_eform(rng, depth - 1, vars), random_eform(rng, depth - 1, vars));
    case 3:
      return EForm::imp(random_eform(rng, depth - 1, vars), random_eform(rng, depth - 1, vars));
    case 4:
      return EForm::iff(random_eform(rng, depth - 1, vars), random_eform(rng, depth - 1, vars));
    default: {
      std::string var = var_pool()[pick(rng, var_pool().size())];
      std::vector<std::string> inner = vars;
      inner.push_back(var);
      EForm body = random_eform(rng, depth - 1, std::move(inner));
      return chance(rng, 0.5) ? EForm::all(var, std::move(body))
                              : EForm::ex(var, std::move(body));
    }
  }
}

}  // namespace tableaux::testgen
