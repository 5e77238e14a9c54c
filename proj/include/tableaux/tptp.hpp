#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tableaux/extended.hpp"
#include "tableaux/syntax.hpp"

namespace tableaux {

// FOF reader and writer for the equality-free subset:
//
//   fof(name, role, formula).
//
// with connectives ~ & | => <=> <= <~>, quantifiers ![X,...]: and ?[X,...]:,
// constants $true/$false, '%' line comments and '/* */' block comments.
// Variables are upper-case words, function and predicate symbols lower-case
// words. <= and <~> are normalized at parse time (to the flipped
// implication and the negated equivalence); equality, arithmetic, includes
// and non-FOF units raise UnsupportedFeature.

enum class TptpRole {
  Axiom,
  Hypothesis,
  Definition,
  Assumption,
  Lemma,
  Theorem,
  Corollary,
  Conjecture,
  NegatedConjecture,
  Plain,
  Unknown,
};

std::string to_string(TptpRole role);

struct TptpUnit {
  std::string name;
  TptpRole role;
  EForm formula;

  bool operator==(const TptpUnit&) const = default;
};

struct TptpProblem {
  std::vector<TptpUnit> units;

  bool operator==(const TptpProblem&) const = default;
};

TptpProblem parse_tptp(std::string_view input);

// Prints with enough parentheses that parsing reproduces the problem
// exactly.
std::string print_tptp(const TptpProblem& problem);

// The refutation context of a problem: the negated conjecture first (when
// one is present), then the remaining units in file order, all translated
// into the minimal fragment. A negated_conjecture unit joins the context as
// written. Throws MultipleConjectures when several conjectures appear.
std::vector<Form> assemble_context(const TptpProblem& problem);

// The n-th member of the quantifier stress family
//   ! [X1,...,Xn] : (~p1(X1) & ? [Y1] : p1(Y1)) | ... | (~pn(Xn) & ? [Yn] : pn(Yn))
// with all universal quantifiers outermost.
EForm gen_phi(std::size_t n);

// The same family packaged as a problem with a single axiom unit, ready for
// refutation.
TptpProblem gen_phi_problem(std::size_t n);

}  // namespace tableaux
