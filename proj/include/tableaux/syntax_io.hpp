#pragma once

#include <string>
#include <string_view>

#include "tableaux/sexpr.hpp"
#include "tableaux/syntax.hpp"

namespace tableaux {

// Canonical S-expression rendering of terms and formulas:
//
//   term ::= (bound N) | (free X) | (fun f term*)
//   form ::= (bot) | (pred P term*) | (neg form) | (or form form) | (all form)
//
// Printing and parsing are exact inverses on every value.

std::string print_term(const Term& t);
std::string print_form(const Form& f);

Sexpr term_to_sexpr(const Term& t);
Sexpr form_to_sexpr(const Form& f);

Term term_from_sexpr(const Sexpr& e);
Form form_from_sexpr(const Sexpr& e);

Term parse_term(std::string_view input);
Form parse_form(std::string_view input);

}  // namespace tableaux
