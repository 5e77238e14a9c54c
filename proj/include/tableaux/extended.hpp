#pragma once

#include <string>
#include <vector>

#include "tableaux/semantics.hpp"
#include "tableaux/syntax.hpp"

namespace tableaux {

// Surface syntax with named binders and the full connective set. Binder
// names may shadow each other; the innermost occurrence wins.

enum class ETermKind { Var, Fun };

class ETerm {
 public:
  static ETerm var(std::string name) {
    ETerm t(ETermKind::Var);
    t.symbol_ = std::move(name);
    return t;
  }
  static ETerm fun(std::string symbol, std::vector<ETerm> args = {}) {
    ETerm t(ETermKind::Fun);
    t.symbol_ = std::move(symbol);
    t.args_ = std::move(args);
    return t;
  }

  ETermKind kind() const { return kind_; }
  const std::string& name() const { return symbol_; }
  const std::string& symbol() const { return symbol_; }
  const std::vector<ETerm>& args() const { return args_; }

  bool operator==(const ETerm&) const = default;

 private:
  explicit ETerm(ETermKind kind) : kind_(kind) {}

  ETermKind kind_;
  std::string symbol_;
  std::vector<ETerm> args_;
};

enum class EFormKind { Bot, Top, Pred, Neg, And, Or, Imp, Iff, All, Ex };

class EForm {
 public:
  static EForm bot() { return EForm(EFormKind::Bot); }
  static EForm top() { return EForm(EFormKind::Top); }
  static EForm pred(std::string symbol, std::vector<ETerm> args = {}) {
    EForm f(EFormKind::Pred);
    f.symbol_ = std::move(symbol);
    f.args_ = std::move(args);
    return f;
  }
  static EForm neg(EForm inner) { return unary(EFormKind::Neg, std::move(inner)); }
  static EForm conj(EForm lhs, EForm rhs) {
    return binary(EFormKind::And, std::move(lhs), std::move(rhs));
  }
  static EForm disj(EForm lhs, EForm rhs) {
    return binary(EFormKind::Or, std::move(lhs), std::move(rhs));
  }
  static EForm imp(EForm lhs, EForm rhs) {
    return binary(EFormKind::Imp, std::move(lhs), std::move(rhs));
  }
  static EForm iff(EForm lhs, EForm rhs) {
    return binary(EFormKind::Iff, std::move(lhs), std::move(rhs));
  }
  static EForm all(std::string var, EForm body) {
    EForm f = unary(EFormKind::All, std::move(body));
    f.symbol_ = std::move(var);
    return f;
  }
  static EForm ex(std::string var, EForm body) {
    EForm f = unary(EFormKind::Ex, std::move(body));
    f.symbol_ = std::move(var);
    return f;
  }

  EFormKind kind() const { return kind_; }
  const std::string& symbol() const { return symbol_; }
  const std::string& var() const { return symbol_; }
  const std::vector<ETerm>& args() const { return args_; }
  const EForm& child() const { return children_[0]; }
  const EForm& body() const { return children_[0]; }
  const EForm& left() const { return children_[0]; }
  const EForm& right() const { return children_[1]; }

  bool operator==(const EForm&) const = default;

 private:
  explicit EForm(EFormKind kind) : kind_(kind) {}
  static EForm unary(EFormKind kind, EForm inner) {
    EForm f(kind);
    f.children_.push_back(std::move(inner));
    return f;
  }
  static EForm binary(EFormKind kind, EForm lhs, EForm rhs) {
    EForm f(kind);
    f.children_.push_back(std::move(lhs));
    f.children_.push_back(std::move(rhs));
    return f;
  }

  EFormKind kind_;
  std::string symbol_;
  std::vector<ETerm> args_;
  std::vector<EForm> children_;
};

// Translation into the minimal fragment. bvs lists the binder names in
// scope, innermost first; a variable found there becomes the index of its
// first occurrence, anything else a free variable. Connectives outside the
// fragment unfold into Neg/Or/All.
Term translate_eterm(const std::vector<std::string>& bvs, const ETerm& t);
Form translate_eform_aux(const std::vector<std::string>& bvs, const EForm& f);
Form translate_eform(const EForm& f);

// Direct semantics over the same models, with a named-variable environment.
std::size_t interpret_eterm(const FiniteModel& m, const FreeEnv& env, const ETerm& t);
bool interpret_eform(const FiniteModel& m, const FreeEnv& env, const EForm& f);

// The environment matching a translation site: binder names drawn from bvs
// valued by the corresponding rho entries, everything else by sigma. Throws
// LengthMismatch unless |bvs| = |rho|.
FreeEnv extended_env(const std::vector<std::string>& bvs, const BoundEnv& rho,
                     const FreeEnv& sigma);

}  // namespace tableaux
