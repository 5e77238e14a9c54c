#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tableaux {

// Terms and formulas of the minimal first-order fragment, in locally nameless
// style: quantified variables are De Bruijn indices counting enclosing
// binders, free variables carry names. Symbols of every sort are plain
// strings ordered lexicographically.

enum class TermKind { Bound, Free, Fun };

class Term {
 public:
  static Term bound(std::size_t index) {
    Term t(TermKind::Bound);
    t.index_ = index;
    return t;
  }
  static Term free(std::string name) {
    Term t(TermKind::Free);
    t.symbol_ = std::move(name);
    return t;
  }
  static Term fun(std::string symbol, std::vector<Term> args = {}) {
    Term t(TermKind::Fun);
    t.symbol_ = std::move(symbol);
    t.args_ = std::move(args);
    return t;
  }

  TermKind kind() const { return kind_; }
  std::size_t index() const { return index_; }
  const std::string& name() const { return symbol_; }
  const std::string& symbol() const { return symbol_; }
  const std::vector<Term>& args() const { return args_; }

  bool operator==(const Term&) const = default;

 private:
  explicit Term(TermKind kind) : kind_(kind) {}

  TermKind kind_;
  std::size_t index_ = 0;
  std::string symbol_;
  std::vector<Term> args_;
};

enum class FormKind { Bot, Pred, Neg, Or, All };

class Form {
 public:
  static Form bot() { return Form(FormKind::Bot); }
  static Form pred(std::string symbol, std::vector<Term> args = {}) {
    Form f(FormKind::Pred);
    f.symbol_ = std::move(symbol);
    f.args_ = std::move(args);
    return f;
  }
  static Form neg(Form inner) {
    Form f(FormKind::Neg);
    f.children_.push_back(std::move(inner));
    return f;
  }
  static Form disj(Form lhs, Form rhs) {
    Form f(FormKind::Or);
    f.children_.push_back(std::move(lhs));
    f.children_.push_back(std::move(rhs));
    return f;
  }
  static Form all(Form body) {
    Form f(FormKind::All);
    f.children_.push_back(std::move(body));
    return f;
  }

  FormKind kind() const { return kind_; }
  const std::string& symbol() const { return symbol_; }
  const std::vector<Term>& args() const { return args_; }

  // Neg and All payload.
  const Form& child() const { return children_[0]; }
  // Or payload.
  const Form& left() const { return children_[0]; }
  const Form& right() const { return children_[1]; }

  bool operator==(const Form&) const = default;

 private:
  explicit Form(FormKind kind) : kind_(kind) {}

  FormKind kind_;
  std::string symbol_;
  std::vector<Term> args_;
  std::vector<Form> children_;
};

// Structural total order, for use as container keys.
bool operator<(const Term& a, const Term& b);
bool operator<(const Form& a, const Form& b);

// Derived connectives, spelled out in the minimal fragment.
inline Form conj(Form lhs, Form rhs) {
  return Form::neg(Form::disj(Form::neg(std::move(lhs)), Form::neg(std::move(rhs))));
}
inline Form impl(Form lhs, Form rhs) {
  return Form::disj(Form::neg(std::move(lhs)), std::move(rhs));
}
inline Form truth() { return Form::neg(Form::bot()); }
inline Form exists(Form body) {
  return Form::neg(Form::all(Form::neg(std::move(body))));
}

// Variable opening: replaces the dangling index n (adjusted for intervening
// binders, so under k nested All the matched index is n + k) by the term u.
Term open(const Term& t, std::size_t n, const Term& u);
Form open(const Form& f, std::size_t n, const Term& u);

// Free variables.
std::set<std::string> fv(const Term& t);
std::set<std::string> fv(const Form& f);
std::set<std::string> fv(const std::vector<Form>& fs);

// Dangling bound indices, adjusted for the binders crossed on the way down:
// an index k sitting under j binders contributes k - j when k >= j.
std::set<std::size_t> bv(const Term& t);
std::set<std::size_t> bv(const Form& f);

bool is_locally_closed(const Term& t);
bool is_locally_closed(const Form& f);
bool is_closed(const Term& t);
bool is_closed(const Form& f);

// Finite map from free-variable names to terms, applied simultaneously.
// Every term in the range must be locally closed, which makes substitution
// trivially capture-avoiding.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<std::string, Term>> entries);

  void bind(std::string name, Term value);
  const Term* find(const std::string& name) const;
  const std::map<std::string, Term>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  bool operator==(const Substitution&) const = default;

 private:
  std::map<std::string, Term> entries_;
};

Term subst(const Term& t, const Substitution& sigma);
Form subst(const Form& f, const Substitution& sigma);

// Function symbols occurring anywhere in the argument.
std::set<std::string> function_symbols(const Term& t);
std::set<std::string> function_symbols(const Form& f);
std::set<std::string> function_symbols(const std::vector<Form>& fs);
std::set<std::string> function_symbols(const std::set<Form>& fs);

struct SymbolSets {
  std::set<std::string> vars;
  std::set<std::string> funcs;
  std::set<std::string> preds;

  bool operator==(const SymbolSets&) const = default;
};

SymbolSets collect_symbols(const Form& f);
SymbolSets collect_symbols(const std::vector<Form>& fs);

// Node count, used for enumeration budgets and size-bounded generators.
std::size_t term_size(const Term& t);
std::size_t form_size(const Form& f);

}  // namespace tableaux
