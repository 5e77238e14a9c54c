#pragma once

#include <string>
#include <string_view>

#include "tableaux/checker.hpp"
#include "tableaux/sexpr.hpp"

namespace tableaux {

// Certificate text format:
//
//   (certificate
//     (strategy outer|inner|preinner)
//     (context form*)
//     (substitution (var term)*)
//     (tree ruletree))
//
//   ruletree ::= (leaf)
//              | (leaf form form)
//              | (alpha-neg-neg form ruletree)
//              | (alpha-neg-or form ruletree)
//              | (beta-or form ruletree ruletree)
//              | (gamma-all form var ruletree)
//              | (delta-neg-all form term ruletree)
//
// The parser also accepts (beta-or form form ruletree ruletree) and
// normalizes it to the single-formula form with target (or form form).
// Parsing the canonical printout reproduces the certificate exactly.

std::string print_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view input);

Sexpr ruletree_to_sexpr(const RuleTree& tree);
RuleTree ruletree_from_sexpr(const Sexpr& e);

}  // namespace tableaux
