#include "tableaux/syntax.hpp"

#include "tableaux/errors.hpp"

namespace tableaux {

namespace {

Term open_term(const Term& t, std::size_t n, const Term& u) {
  switch (t.kind()) {
    case TermKind::Bound:
      return t.index() == n ? u : t;
    case TermKind::Free:
      return t;
    case TermKind::Fun: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(open_term(a, n, u));
      return Term::fun(t.symbol(), std::move(args));
    }
  }
  return t;
}

Form open_form(const Form& f, std::size_t n, const Term& u) {
  switch (f.kind()) {
    case FormKind::Bot:
      return f;
    case FormKind::Pred: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const Term& a : f.args()) args.push_back(open_term(a, n, u));
      return Form::pred(f.symbol(), std::move(args));
    }
    case FormKind::Neg:
      return Form::neg(open_form(f.child(), n, u));
    case FormKind::Or:
      return Form::disj(open_form(f.left(), n, u), open_form(f.right(), n, u));
    case FormKind::All:
      return Form::all(open_form(f.child(), n + 1, u));
  }
  return f;
}

int cmp(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case TermKind::Bound:
      if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
      return 0;
    case TermKind::Free:
      return a.name().compare(b.name());
    case TermKind::Fun: {
      if (int c = a.symbol().compare(b.symbol())) return c;
      if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (int c = cmp(a.args()[i], b.args()[i])) return c;
      return 0;
    }
  }
  return 0;
}

int cmp(const Form& a, const Form& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case FormKind::Bot:
      return 0;
    case FormKind::Pred: {
      if (int c = a.symbol().compare(b.symbol())) return c;
      if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (int c = cmp(a.args()[i], b.args()[i])) return c;
      return 0;
    }
    case FormKind::Neg:
    case FormKind::All:
      return cmp(a.child(), b.child());
    case FormKind::Or:
      if (int c = cmp(a.left(), b.left())) return c;
      return cmp(a.right(), b.right());
  }
  return 0;
}

void fv_term(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Bound:
      return;
    case TermKind::Free:
      out.insert(t.name());
      return;
    case TermKind::Fun:
      for (const Term& a : t.args()) fv_term(a, out);
      return;
  }
}

void fv_form(const Form& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormKind::Bot:
      return;
    case FormKind::Pred:
      for (const Term& a : f.args()) fv_term(a, out);
      return;
    case FormKind::Neg:
    case FormKind::All:
      fv_form(f.child(), out);
      return;
    case FormKind::Or:
      fv_form(f.left(), out);
      fv_form(f.right(), out);
      return;
  }
}

void bv_term(const Term& t, std::size_t depth, std::set<std::size_t>& out) {
  switch (t.kind()) {
    case TermKind::Bound:
      if (t.index() >= depth) out.insert(t.index() - depth);
      return;
    case TermKind::Free:
      return;
    case TermKind::Fun:
      for (const Term& a : t.args()) bv_term(a, depth, out);
      return;
  }
}

void bv_form(const Form& f, std::size_t depth, std::set<std::size_t>& out) {
  switch (f.kind()) {
    case FormKind::Bot:
      return;
    case FormKind::Pred:
      for (const Term& a : f.args()) bv_term(a, depth, out);
      return;
    case FormKind::Neg:
      bv_form(f.child(), depth, out);
      return;
    case FormKind::Or:
      bv_form(f.left(), depth, out);
      bv_form(f.right(), depth, out);
      return;
    case FormKind::All:
      bv_form(f.child(), depth + 1, out);
      return;
  }
}

Term subst_term(const Term& t, const Substitution& sigma) {
  switch (t.kind()) {
    case TermKind::Bound:
      return t;
    case TermKind::Free: {
      const Term* bound = sigma.find(t.name());
      return bound ? *bound : t;
    }
    case TermKind::Fun: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(subst_term(a, sigma));
      return Term::fun(t.symbol(), std::move(args));
    }
  }
  return t;
}

Form subst_form(const Form& f, const Substitution& sigma) {
  switch (f.kind()) {
    case FormKind::Bot:
      return f;
    case FormKind::Pred: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const Term& a : f.args()) args.push_back(subst_term(a, sigma));
      return Form::pred(f.symbol(), std::move(args));
    }
    case FormKind::Neg:
      return Form::neg(subst_form(f.child(), sigma));
    case FormKind::Or:
      return Form::disj(subst_form(f.left(), sigma), subst_form(f.right(), sigma));
    case FormKind::All:
      // Range terms are locally closed, so crossing the binder needs no shift.
      return Form::all(subst_form(f.child(), sigma));
  }
  return f;
}

void funcs_term(const Term& t, std::set<std::string>& out) {
  if (t.kind() == TermKind::Fun) {
    out.insert(t.symbol());
    for (const Term& a : t.args()) funcs_term(a, out);
  }
}

void funcs_form(const Form& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormKind::Bot:
      return;
    case FormKind::Pred:
      for (const Term& a : f.args()) funcs_term(a, out);
      return;
    case FormKind::Neg:
    case FormKind::All:
      funcs_form(f.child(), out);
      return;
    case FormKind::Or:
      funcs_form(f.left(), out);
      funcs_form(f.right(), out);
      return;
  }
}

void symbols_term(const Term& t, SymbolSets& out) {
  switch (t.kind()) {
    case TermKind::Bound:
      return;
    case TermKind::Free:
      out.vars.insert(t.name());
      return;
    case TermKind::Fun:
      out.funcs.insert(t.symbol());
      for (const Term& a : t.args()) symbols_term(a, out);
      return;
  }
}

void symbols_form(const Form& f, SymbolSets& out) {
  switch (f.kind()) {
    case FormKind::Bot:
      return;
    case FormKind::Pred:
      out.preds.insert(f.symbol());
      for (const Term& a : f.args()) symbols_term(a, out);
      return;
    case FormKind::Neg:
    case FormKind::All:
      symbols_form(f.child(), out);
      return;
    case FormKind::Or:
      symbols_form(f.left(), out);
      symbols_form(f.right(), out);
      return;
  }
}

}  // namespace

bool operator<(const Term& a, const Term& b) { return cmp(a, b) < 0; }
bool operator<(const Form& a, const Form& b) { return cmp(a, b) < 0; }

Term open(const Term& t, std::size_t n, const Term& u) { return open_term(t, n, u); }
Form open(const Form& f, std::size_t n, const Term& u) { return open_form(f, n, u); }

std::set<std::string> fv(const Term& t) {
  std::set<std::string> out;
  fv_term(t, out);
  return out;
}

std::set<std::string> fv(const Form& f) {
  std::set<std::string> out;
  fv_form(f, out);
  return out;
}

std::set<std::string> fv(const std::vector<Form>& fs) {
  std::set<std::string> out;
  for (const Form& f : fs) fv_form(f, out);
  return out;
}

std::set<std::size_t> bv(const Term& t) {
  std::set<std::size_t> out;
  bv_term(t, 0, out);
  return out;
}

std::set<std::size_t> bv(const Form& f) {
  std::set<std::size_t> out;
  bv_form(f, 0, out);
  return out;
}

bool is_locally_closed(const Term& t) { return bv(t).empty(); }
bool is_locally_closed(const Form& f) { return bv(f).empty(); }
bool is_closed(const Term& t) { return is_locally_closed(t) && fv(t).empty(); }
bool is_closed(const Form& f) { return is_locally_closed(f) && fv(f).empty(); }

Substitution::Substitution(std::initializer_list<std::pair<std::string, Term>> entries) {
  for (const auto& [name, value] : entries) bind(name, value);
}

void Substitution::bind(std::string name, Term value) {
  if (!is_locally_closed(value)) throw Error("substitution range must be locally closed");
  entries_.insert_or_assign(std::move(name), std::move(value));
}

const Term* Substitution::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

Term subst(const Term& t, const Substitution& sigma) { return subst_term(t, sigma); }
Form subst(const Form& f, const Substitution& sigma) { return subst_form(f, sigma); }

std::set<std::string> function_symbols(const Term& t) {
  std::set<std::string> out;
  funcs_term(t, out);
  return out;
}

std::set<std::string> function_symbols(const Form& f) {
  std::set<std::string> out;
  funcs_form(f, out);
  return out;
}

std::set<std::string> function_symbols(const std::vector<Form>& fs) {
  std::set<std::string> out;
  for (const Form& f : fs) funcs_form(f, out);
  return out;
}

std::set<std::string> function_symbols(const std::set<Form>& fs) {
  std::set<std::string> out;
  for (const Form& f : fs) funcs_form(f, out);
  return out;
}

SymbolSets collect_symbols(const Form& f) {
  SymbolSets out;
  symbols_form(f, out);
  return out;
}

SymbolSets collect_symbols(const std::vector<Form>& fs) {
  SymbolSets out;
  for (const Form& f : fs) symbols_form(f, out);
  return out;
}

std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  if (t.kind() == TermKind::Fun)
    for (const Term& a : t.args()) n += term_size(a);
  return n;
}

std::size_t form_size(const Form& f) {
  switch (f.kind()) {
    case FormKind::Bot:
      return 1;
    case FormKind::Pred: {
      std::size_t n = 1;
      for (const Term& a : f.args()) n += term_size(a);
      return n;
    }
    case FormKind::Neg:
    case FormKind::All:
      return 1 + form_size(f.child());
    case FormKind::Or:
      return 1 + form_size(f.left()) + form_size(f.right());
  }
  return 1;
}

}  // namespace tableaux
