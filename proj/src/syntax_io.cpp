#include "tableaux/syntax_io.hpp"

#include <charconv>

#include "tableaux/errors.hpp"

namespace tableaux {

namespace {

bool printable_symbol(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == '(' || c == ')' || c == ';' || c == ' ' || c == '\t' || c == '\r' || c == '\n')
      return false;
  return true;
}

Sexpr symbol_atom(const std::string& s) {
  if (!printable_symbol(s)) throw Error("symbol not printable as an atom: \"" + s + "\"");
  return Sexpr::atom(s);
}

[[noreturn]] void fail(const Sexpr& e, const std::string& expected) {
  throw ParseError(e.line, e.column, expected);
}

const Sexpr& item(const Sexpr& e, std::size_t i) { return e.items[i]; }

std::string expect_symbol(const Sexpr& e, const char* what) {
  if (!e.is_atom || e.text.empty()) fail(e, what);
  return e.text;
}

std::size_t expect_index(const Sexpr& e) {
  if (!e.is_atom) fail(e, "a numeric index");
  std::size_t value = 0;
  const char* first = e.text.data();
  const char* last = first + e.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) fail(e, "a numeric index");
  return value;
}

}  // namespace

Sexpr term_to_sexpr(const Term& t) {
  switch (t.kind()) {
    case TermKind::Bound:
      return Sexpr::list({Sexpr::atom("bound"), Sexpr::atom(std::to_string(t.index()))});
    case TermKind::Free:
      return Sexpr::list({Sexpr::atom("free"), symbol_atom(t.name())});
    case TermKind::Fun: {
      std::vector<Sexpr> items{Sexpr::atom("fun"), symbol_atom(t.symbol())};
      for (const Term& a : t.args()) items.push_back(term_to_sexpr(a));
      return Sexpr::list(std::move(items));
    }
  }
  throw Error("unreachable term kind");
}

Sexpr form_to_sexpr(const Form& f) {
  switch (f.kind()) {
    case FormKind::Bot:
      return Sexpr::list({Sexpr::atom("bot")});
    case FormKind::Pred: {
      std::vector<Sexpr> items{Sexpr::atom("pred"), symbol_atom(f.symbol())};
      for (const Term& a : f.args()) items.push_back(term_to_sexpr(a));
      return Sexpr::list(std::move(items));
    }
    case FormKind::Neg:
      return Sexpr::list({Sexpr::atom("neg"), form_to_sexpr(f.child())});
    case FormKind::Or:
      return Sexpr::list({Sexpr::atom("or"), form_to_sexpr(f.left()), form_to_sexpr(f.right())});
    case FormKind::All:
      return Sexpr::list({Sexpr::atom("all"), form_to_sexpr(f.child())});
  }
  throw Error("unreachable form kind");
}

std::string print_term(const Term& t) { return print_sexpr(term_to_sexpr(t)); }
std::string print_form(const Form& f) { return print_sexpr(form_to_sexpr(f)); }

Term term_from_sexpr(const Sexpr& e) {
  if (e.is_atom || e.items.empty() || !e.items[0].is_atom) fail(e, "(bound ...), (free ...) or (fun ...)");
  const std::string& head = e.items[0].text;
  if (head == "bound") {
    if (e.items.size() != 2) fail(e, "(bound N)");
    return Term::bound(expect_index(item(e, 1)));
  }
  if (head == "free") {
    if (e.items.size() != 2) fail(e, "(free X)");
    return Term::free(expect_symbol(item(e, 1), "a variable name"));
  }
  if (head == "fun") {
    if (e.items.size() < 2) fail(e, "(fun f term*)");
    std::string symbol = expect_symbol(item(e, 1), "a function symbol");
    std::vector<Term> args;
    for (std::size_t i = 2; i < e.items.size(); ++i) args.push_back(term_from_sexpr(item(e, i)));
    return Term::fun(std::move(symbol), std::move(args));
  }
  fail(e, "one of bound/free/fun");
}

Form form_from_sexpr(const Sexpr& e) {
  if (e.is_atom || e.items.empty() || !e.items[0].is_atom)
    fail(e, "(bot), (pred ...), (neg ...), (or ...) or (all ...)");
  const std::string& head = e.items[0].text;
  if (head == "bot") {
    if (e.items.size() != 1) fail(e, "(bot)");
    return Form::bot();
  }
  if (head == "pred") {
    if (e.items.size() < 2) fail(e, "(pred P term*)");
    std::string symbol = expect_symbol(item(e, 1), "a predicate symbol");
    std::vector<Term> args;
    for (std::size_t i = 2; i < e.items.size(); ++i) args.push_back(term_from_sexpr(item(e, i)));
    return Form::pred(std::move(symbol), std::move(args));
  }
  if (head == "neg") {
    if (e.items.size() != 2) fail(e, "(neg form)");
    return Form::neg(form_from_sexpr(item(e, 1)));
  }
  if (head == "or") {
    if (e.items.size() != 3) fail(e, "(or form form)");
    return Form::disj(form_from_sexpr(item(e, 1)), form_from_sexpr(item(e, 2)));
  }
  if (head == "all") {
    if (e.items.size() != 2) fail(e, "(all form)");
    return Form::all(form_from_sexpr(item(e, 1)));
  }
  fail(e, "one of bot/pred/neg/or/all");
}

Term parse_term(std::string_view input) { return term_from_sexpr(parse_sexpr(input)); }
Form parse_form(std::string_view input) { return form_from_sexpr(parse_sexpr(input)); }

}  // namespace tableaux
