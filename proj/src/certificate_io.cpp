#include "tableaux/certificate_io.hpp"

#include "tableaux/errors.hpp"
#include "tableaux/syntax_io.hpp"

namespace tableaux {

namespace {

[[noreturn]] void fail(const Sexpr& e, const std::string& expected) {
  throw ParseError(e.line, e.column, expected);
}

std::string expect_name(const Sexpr& e, const char* what) {
  if (!e.is_atom || e.text.empty()) fail(e, what);
  return e.text;
}

}  // namespace

Sexpr ruletree_to_sexpr(const RuleTree& tree) {
  if (tree.is_leaf()) {
    if (!tree.closure()) return Sexpr::list({Sexpr::atom("leaf")});
    return Sexpr::list({Sexpr::atom("leaf"), form_to_sexpr(tree.closure()->first),
                        form_to_sexpr(tree.closure()->second)});
  }
  const Rule& rule = tree.rule();
  std::vector<Sexpr> items{Sexpr::atom(rule_name(rule.kind)), form_to_sexpr(rule.target)};
  switch (rule.kind) {
    case Rule::Kind::GammaAll:
      items.push_back(Sexpr::atom(rule.var));
      break;
    case Rule::Kind::DeltaNegAll:
      items.push_back(term_to_sexpr(*rule.term));
      break;
    default:
      break;
  }
  items.push_back(ruletree_to_sexpr(tree.left()));
  if (rule.kind == Rule::Kind::BetaOr) items.push_back(ruletree_to_sexpr(tree.right()));
  return Sexpr::list(std::move(items));
}

RuleTree ruletree_from_sexpr(const Sexpr& e) {
  if (e.is_atom || e.items.empty() || !e.items[0].is_atom) fail(e, "a rule tree");
  const std::string& head = e.items[0].text;
  if (head == "leaf") {
    if (e.items.size() == 1) return RuleTree::leaf();
    if (e.items.size() == 3)
      return RuleTree::leaf(form_from_sexpr(e.items[1]), form_from_sexpr(e.items[2]));
    fail(e, "(leaf) or (leaf form form)");
  }
  if (head == "alpha-neg-neg" || head == "alpha-neg-or") {
    if (e.items.size() != 3) fail(e, "(" + head + " form ruletree)");
    Form target = form_from_sexpr(e.items[1]);
    Rule rule = head == "alpha-neg-neg" ? Rule::alpha_neg_neg(std::move(target))
                                        : Rule::alpha_neg_or(std::move(target));
    return RuleTree::node(std::move(rule), ruletree_from_sexpr(e.items[2]), RuleTree::leaf());
  }
  if (head == "beta-or") {
    if (e.items.size() == 4)
      return RuleTree::node(Rule::beta_or(form_from_sexpr(e.items[1])),
                            ruletree_from_sexpr(e.items[2]), ruletree_from_sexpr(e.items[3]));
    // Two-formula spelling, normalized to a single Or target.
    if (e.items.size() == 5)
      return RuleTree::node(
          Rule::beta_or(Form::disj(form_from_sexpr(e.items[1]), form_from_sexpr(e.items[2]))),
          ruletree_from_sexpr(e.items[3]), ruletree_from_sexpr(e.items[4]));
    fail(e, "(beta-or form ruletree ruletree)");
  }
  if (head == "gamma-all") {
    if (e.items.size() != 4) fail(e, "(gamma-all form var ruletree)");
    return RuleTree::node(
        Rule::gamma_all(form_from_sexpr(e.items[1]), expect_name(e.items[2], "a variable name")),
        ruletree_from_sexpr(e.items[3]), RuleTree::leaf());
  }
  if (head == "delta-neg-all") {
    if (e.items.size() != 4) fail(e, "(delta-neg-all form term ruletree)");
    return RuleTree::node(
        Rule::delta_neg_all(form_from_sexpr(e.items[1]), term_from_sexpr(e.items[2])),
        ruletree_from_sexpr(e.items[3]), RuleTree::leaf());
  }
  fail(e, "a rule tree head");
}

std::string print_certificate(const Certificate& cert) {
  std::string out = "(certificate\n";
  out += "  (strategy " + to_string(cert.strategy) + ")\n";
  out += "  (context";
  for (const Form& f : cert.context) out += " " + print_form(f);
  out += ")\n";
  out += "  (substitution";
  for (const auto& [name, value] : cert.sigma.entries())
    out += " (" + name + " " + print_term(value) + ")";
  out += ")\n";
  out += "  (tree " + print_sexpr(ruletree_to_sexpr(cert.tree)) + "))\n";
  return out;
}

Certificate parse_certificate(std::string_view input) {
  Sexpr e = parse_sexpr(input);
  if (e.is_atom || e.items.empty() || !e.items[0].is_atom || e.items[0].text != "certificate")
    fail(e, "(certificate ...)");

  Certificate cert;
  bool saw_strategy = false, saw_context = false, saw_subst = false, saw_tree = false;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const Sexpr& field = e.items[i];
    if (field.is_atom || field.items.empty() || !field.items[0].is_atom)
      fail(field, "a certificate field");
    const std::string& head = field.items[0].text;
    if (head == "strategy") {
      if (saw_strategy || field.items.size() != 2) fail(field, "(strategy name)");
      std::optional<SkolemKind> kind =
          skolem_kind_from_string(expect_name(field.items[1], "a strategy name"));
      if (!kind) fail(field.items[1], "one of outer/inner/preinner");
      cert.strategy = *kind;
      saw_strategy = true;
    } else if (head == "context") {
      if (saw_context) fail(field, "a single context field");
      for (std::size_t j = 1; j < field.items.size(); ++j)
        cert.context.push_back(form_from_sexpr(field.items[j]));
      saw_context = true;
    } else if (head == "substitution") {
      if (saw_subst) fail(field, "a single substitution field");
      for (std::size_t j = 1; j < field.items.size(); ++j) {
        const Sexpr& entry = field.items[j];
        if (entry.is_atom || entry.items.size() != 2) fail(entry, "(var term)");
        cert.sigma.bind(expect_name(entry.items[0], "a variable name"),
                        term_from_sexpr(entry.items[1]));
      }
      saw_subst = true;
    } else if (head == "tree") {
      if (saw_tree || field.items.size() != 2) fail(field, "(tree ruletree)");
      cert.tree = ruletree_from_sexpr(field.items[1]);
      saw_tree = true;
    } else {
      fail(field, "one of strategy/context/substitution/tree");
    }
  }
  if (!saw_strategy) throw ParseError(e.line, e.column, "a strategy field");
  if (!saw_context) throw ParseError(e.line, e.column, "a context field");
  if (!saw_subst) throw ParseError(e.line, e.column, "a substitution field");
  if (!saw_tree) throw ParseError(e.line, e.column, "a tree field");
  return cert;
}

}  // namespace tableaux
