#include "tableaux/sexpr.hpp"

#include "tableaux/errors.hpp"

namespace tableaux {

Sexpr Sexpr::atom(std::string text) {
  Sexpr e;
  e.is_atom = true;
  e.text = std::move(text);
  return e;
}

Sexpr Sexpr::list(std::vector<Sexpr> items) {
  Sexpr e;
  e.items = std::move(items);
  return e;
}

namespace {

struct Cursor {
  std::string_view input;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  bool done() const { return pos >= input.size(); }
  char peek() const { return input[pos]; }

  void bump() {
    if (input[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  }

  void skip_blank() {
    while (!done()) {
      char c = peek();
      if (c == ';') {
        while (!done() && peek() != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        return;
      }
    }
  }
};

bool is_atom_char(char c) {
  return c != '(' && c != ')' && c != ';' && c != ' ' && c != '\t' && c != '\r' && c != '\n';
}

Sexpr parse_datum(Cursor& cur) {
  cur.skip_blank();
  if (cur.done()) throw ParseError(cur.line, cur.column, "a datum");
  std::size_t line = cur.line;
  std::size_t column = cur.column;
  if (cur.peek() == ')') throw ParseError(line, column, "a datum, not ')'");
  if (cur.peek() == '(') {
    cur.bump();
    Sexpr out = Sexpr::list();
    out.line = line;
    out.column = column;
    while (true) {
      cur.skip_blank();
      if (cur.done()) throw ParseError(cur.line, cur.column, "')'");
      if (cur.peek() == ')') {
        cur.bump();
        return out;
      }
      out.items.push_back(parse_datum(cur));
    }
  }
  std::string text;
  while (!cur.done() && is_atom_char(cur.peek())) {
    text.push_back(cur.peek());
    cur.bump();
  }
  Sexpr out = Sexpr::atom(std::move(text));
  out.line = line;
  out.column = column;
  return out;
}

}  // namespace

Sexpr parse_sexpr(std::string_view input) {
  Cursor cur{input};
  Sexpr out = parse_datum(cur);
  cur.skip_blank();
  if (!cur.done()) throw ParseError(cur.line, cur.column, "end of input");
  return out;
}

std::vector<Sexpr> parse_sexprs(std::string_view input) {
  Cursor cur{input};
  std::vector<Sexpr> out;
  while (true) {
    cur.skip_blank();
    if (cur.done()) return out;
    out.push_back(parse_datum(cur));
  }
}

std::string print_sexpr(const Sexpr& e) {
  if (e.is_atom) return e.text;
  std::string out = "(";
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += print_sexpr(e.items[i]);
  }
  out.push_back(')');
  return out;
}

}  // namespace tableaux
