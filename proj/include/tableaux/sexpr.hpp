#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tableaux {

// Minimal S-expression datum: an atom or a parenthesised list. Atoms are
// runs of characters other than whitespace, parentheses and ';'. Line
// comments start with ';'. Source positions are kept for error reporting.
struct Sexpr {
  bool is_atom = false;
  std::string text;
  std::vector<Sexpr> items;
  std::size_t line = 0;
  std::size_t column = 0;

  static Sexpr atom(std::string text);
  static Sexpr list(std::vector<Sexpr> items = {});
};

// Parses exactly one datum (trailing whitespace and comments allowed).
Sexpr parse_sexpr(std::string_view input);

// Parses a whole file worth of data.
std::vector<Sexpr> parse_sexprs(std::string_view input);

std::string print_sexpr(const Sexpr& e);

}  // namespace tableaux
