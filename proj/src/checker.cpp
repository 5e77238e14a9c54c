#include "tableaux/checker.hpp"

#include <algorithm>

#include "tableaux/errors.hpp"
#include "tableaux/syntax_io.hpp"

namespace tableaux {

Rule Rule::alpha_neg_neg(Form target) {
  return {Kind::AlphaNegNeg, std::move(target), {}, std::nullopt};
}
Rule Rule::alpha_neg_or(Form target) {
  return {Kind::AlphaNegOr, std::move(target), {}, std::nullopt};
}
Rule Rule::beta_or(Form target) { return {Kind::BetaOr, std::move(target), {}, std::nullopt}; }
Rule Rule::gamma_all(Form target, std::string var) {
  return {Kind::GammaAll, std::move(target), std::move(var), std::nullopt};
}
Rule Rule::delta_neg_all(Form target, Term term) {
  return {Kind::DeltaNegAll, std::move(target), {}, std::move(term)};
}

const char* rule_name(Rule::Kind kind) {
  switch (kind) {
    case Rule::Kind::AlphaNegNeg:
      return "alpha-neg-neg";
    case Rule::Kind::AlphaNegOr:
      return "alpha-neg-or";
    case Rule::Kind::BetaOr:
      return "beta-or";
    case Rule::Kind::GammaAll:
      return "gamma-all";
    case Rule::Kind::DeltaNegAll:
      return "delta-neg-all";
  }
  return "unknown";
}

bool is_unary(Rule::Kind kind) { return kind != Rule::Kind::BetaOr; }

RuleTree RuleTree::leaf() { return RuleTree(); }

RuleTree RuleTree::leaf(Form f, Form g) {
  RuleTree out;
  out.closure_ = std::make_pair(std::move(f), std::move(g));
  return out;
}

RuleTree RuleTree::node(Rule rule, RuleTree left, RuleTree right) {
  RuleTree out;
  out.rule_ = std::move(rule);
  out.kids_.push_back(std::move(left));
  out.kids_.push_back(std::move(right));
  return out;
}

namespace {

// Diagnostic templates, version 1. Every message the checker can emit is
// produced from one of these. Keep wording changes confined to this table.
namespace msg {

std::string where(const Branch& path) { return "at " + to_string(path); }

std::string leaf_no_contradiction(const Branch& path) {
  return "leaf " + where(path) + ": context has no trivial contradiction";
}

std::string leaf_formula_missing(const Form& f, const Branch& path) {
  return "leaf " + where(path) + ": closure formula " + print_form(f) +
         " is not in the context";
}

std::string leaf_not_complementary(const Form& f, const Form& g, const Branch& path) {
  return "leaf " + where(path) + ": " + print_form(f) + " and " + print_form(g) +
         " are not complementary under the substitution";
}

std::string target_missing(Rule::Kind kind, const Form& f, const Branch& path) {
  return std::string(rule_name(kind)) + " " + where(path) + ": target " + print_form(f) +
         " is not in the context";
}

std::string bad_shape(Rule::Kind kind, const Form& f, const Branch& path) {
  return std::string(rule_name(kind)) + " " + where(path) + ": target " + print_form(f) +
         " does not have the required shape";
}

std::string right_not_trivial(Rule::Kind kind, const Branch& path) {
  return std::string(rule_name(kind)) + " " + where(path) +
         ": right subtree of a unary rule must be the trivial leaf";
}

std::string missing_term(const Branch& path) {
  return std::string(rule_name(Rule::Kind::DeltaNegAll)) + " " + where(path) +
         ": rule carries no Skolem term";
}

std::string bad_skolem(const Term& t, const Branch& path) {
  return std::string(rule_name(Rule::Kind::DeltaNegAll)) + " " + where(path) + ": term " +
         print_term(t) + " is not an admissible Skolem term (head symbol freshness or argument" +
         " variables violated)";
}

}  // namespace msg

CheckOutcome reject(const SkoRecord& record, std::string message) {
  return {false, record, {std::move(message)}};
}

CheckOutcome accept(SkoRecord record) { return {true, std::move(record), {}}; }

bool in_context(const std::vector<Form>& gamma, const Form& f) {
  return std::find(gamma.begin(), gamma.end(), f) != gamma.end();
}

bool trivially_contradictory(const std::vector<Form>& gamma) {
  for (const Form& f : gamma)
    if (f.kind() == FormKind::Bot) return true;
  for (const Form& f : gamma)
    if (f.kind() == FormKind::Neg && in_context(gamma, f.child())) return true;
  return false;
}

Branch extend(Branch path, Step s) {
  path.push_back(s);
  return path;
}

std::vector<Form> extend_context(const std::vector<Form>& gamma, std::vector<Form> added) {
  std::vector<Form> out = gamma;
  for (Form& f : added) out.push_back(std::move(f));
  return out;
}

const Form* as_neg_neg(const Form& f) {
  if (f.kind() == FormKind::Neg && f.child().kind() == FormKind::Neg) return &f.child().child();
  return nullptr;
}

const Form* as_neg_or(const Form& f) {
  if (f.kind() == FormKind::Neg && f.child().kind() == FormKind::Or) return &f.child();
  return nullptr;
}

const Form* as_neg_all(const Form& f) {
  if (f.kind() == FormKind::Neg && f.child().kind() == FormKind::All) return &f.child().child();
  return nullptr;
}

}  // namespace

CheckOutcome check_proof(const Certificate& cert) {
  SkolemStrategy strategy(cert.strategy);
  return check_proof_aux(strategy, function_symbols(cert.context), cert.context, cert.sigma,
                         SkoRecord{}, cert.tree);
}

CheckOutcome check_proof_aux(const SkolemStrategy& strategy,
                             const std::set<std::string>& base_funcs,
                             const std::vector<Form>& gamma, const Substitution& sigma,
                             const SkoRecord& record, const RuleTree& tree, const Branch& path) {
  if (tree.is_leaf()) {
    if (!tree.closure()) {
      if (trivially_contradictory(gamma)) return accept(record);
      return reject(record, msg::leaf_no_contradiction(path));
    }
    const auto& [f, g] = *tree.closure();
    if (!in_context(gamma, f)) return reject(record, msg::leaf_formula_missing(f, path));
    if (!in_context(gamma, g)) return reject(record, msg::leaf_formula_missing(g, path));
    Form fs = subst(f, sigma);
    Form gs = subst(g, sigma);
    if (fs == Form::neg(gs) || gs == Form::neg(fs)) return accept(record);
    return reject(record, msg::leaf_not_complementary(f, g, path));
  }

  const Rule& rule = tree.rule();
  if (!in_context(gamma, rule.target))
    return reject(record, msg::target_missing(rule.kind, rule.target, path));
  if (is_unary(rule.kind) && !tree.right().is_trivial_leaf())
    return reject(record, msg::right_not_trivial(rule.kind, path));

  switch (rule.kind) {
    case Rule::Kind::AlphaNegNeg: {
      const Form* f = as_neg_neg(rule.target);
      if (!f) return reject(record, msg::bad_shape(rule.kind, rule.target, path));
      return check_proof_aux(strategy, base_funcs, extend_context(gamma, {*f}), sigma, record,
                             tree.left(), extend(path, Step::Left));
    }
    case Rule::Kind::AlphaNegOr: {
      const Form* o = as_neg_or(rule.target);
      if (!o) return reject(record, msg::bad_shape(rule.kind, rule.target, path));
      return check_proof_aux(strategy, base_funcs,
                             extend_context(gamma, {Form::neg(o->left()), Form::neg(o->right())}),
                             sigma, record, tree.left(), extend(path, Step::Left));
    }
    case Rule::Kind::BetaOr: {
      if (rule.target.kind() != FormKind::Or)
        return reject(record, msg::bad_shape(rule.kind, rule.target, path));
      CheckOutcome first =
          check_proof_aux(strategy, base_funcs, extend_context(gamma, {rule.target.left()}),
                          sigma, record, tree.left(), extend(path, Step::Left));
      if (!first.status) return first;
      CheckOutcome second =
          check_proof_aux(strategy, base_funcs, extend_context(gamma, {rule.target.right()}),
                          sigma, first.symbs, tree.right(), extend(path, Step::Right));
      std::vector<std::string> messages = std::move(first.messages);
      messages.insert(messages.end(), second.messages.begin(), second.messages.end());
      return {second.status, second.symbs, std::move(messages)};
    }
    case Rule::Kind::GammaAll: {
      if (rule.target.kind() != FormKind::All)
        return reject(record, msg::bad_shape(rule.kind, rule.target, path));
      Form instance = open(rule.target.child(), 0, Term::free(rule.var));
      return check_proof_aux(strategy, base_funcs, extend_context(gamma, {std::move(instance)}),
                             sigma, record, tree.left(), extend(path, Step::Left));
    }
    case Rule::Kind::DeltaNegAll: {
      const Form* body = as_neg_all(rule.target);
      if (!body) return reject(record, msg::bad_shape(rule.kind, rule.target, path));
      if (!rule.term) return reject(record, msg::missing_term(path));
      std::set<std::string> funcs = base_funcs;
      funcs.insert(record.used.begin(), record.used.end());
      if (!strategy.is_sko(*rule.term, rule.target, record, fv(gamma), funcs))
        return reject(record, msg::bad_skolem(*rule.term, path));
      Form instance = Form::neg(open(*body, 0, *rule.term));
      SkoRecord next = strategy.add_symbol(record, skolem_symbol(*rule.term), rule.target);
      return check_proof_aux(strategy, base_funcs, extend_context(gamma, {std::move(instance)}),
                             sigma, std::move(next), tree.left(), extend(path, Step::Left));
    }
  }
  return reject(record, "unknown rule");
}

namespace {

Branch extended(const Branch& b, Step s) {
  Branch out = b;
  out.push_back(s);
  return out;
}

}  // namespace

std::optional<std::vector<Tableau>> ruletree_to_sequence(const SkolemStrategy& strategy,
                                                         const Branch& b, const Tableau& t,
                                                         const RuleTree& tree) {
  if (tree.is_leaf()) return std::vector<Tableau>{t};

  const Rule& rule = tree.rule();
  try {
    switch (rule.kind) {
      case Rule::Kind::AlphaNegNeg: {
        const Form* f = as_neg_neg(rule.target);
        if (!f) return std::nullopt;
        Tableau next = expand_tableau_branch(std::vector<Form>{*f}, std::nullopt, b, t);
        auto s = ruletree_to_sequence(strategy, extended(b, Step::Left), next, tree.left());
        if (!s) return std::nullopt;
        s->insert(s->begin(), t);
        return s;
      }
      case Rule::Kind::AlphaNegOr: {
        const Form* o = as_neg_or(rule.target);
        if (!o) return std::nullopt;
        Tableau next = expand_tableau_branch(
            std::vector<Form>{Form::neg(o->left()), Form::neg(o->right())}, std::nullopt, b, t);
        auto s = ruletree_to_sequence(strategy, extended(b, Step::Left), next, tree.left());
        if (!s) return std::nullopt;
        s->insert(s->begin(), t);
        return s;
      }
      case Rule::Kind::GammaAll: {
        if (rule.target.kind() != FormKind::All) return std::nullopt;
        Form instance = open(rule.target.child(), 0, Term::free(rule.var));
        Tableau next =
            expand_tableau_branch(std::vector<Form>{std::move(instance)}, std::nullopt, b, t);
        auto s = ruletree_to_sequence(strategy, extended(b, Step::Left), next, tree.left());
        if (!s) return std::nullopt;
        s->insert(s->begin(), t);
        return s;
      }
      case Rule::Kind::DeltaNegAll: {
        const Form* body = as_neg_all(rule.target);
        if (!body || !rule.term || rule.term->kind() != TermKind::Fun) return std::nullopt;
        Form instance = Form::neg(open(*body, 0, *rule.term));
        Tableau next =
            expand_tableau_branch(std::vector<Form>{std::move(instance)}, std::nullopt, b, t);
        next.symbols = strategy.add_symbol(t.symbols, skolem_symbol(*rule.term), rule.target);
        auto s = ruletree_to_sequence(strategy, extended(b, Step::Left), next, tree.left());
        if (!s) return std::nullopt;
        s->insert(s->begin(), t);
        return s;
      }
      case Rule::Kind::BetaOr: {
        if (rule.target.kind() != FormKind::Or) return std::nullopt;
        Tableau next = expand_tableau_branch(std::vector<Form>{rule.target.left()},
                                             std::vector<Form>{rule.target.right()}, b, t);
        auto s1 = ruletree_to_sequence(strategy, extended(b, Step::Left), next, tree.left());
        if (!s1) return std::nullopt;
        auto s2 =
            ruletree_to_sequence(strategy, extended(b, Step::Right), s1->back(), tree.right());
        if (!s2) return std::nullopt;
        std::vector<Tableau> out;
        out.push_back(t);
        out.insert(out.end(), s1->begin(), s1->end() - 1);
        out.insert(out.end(), s2->begin(), s2->end());
        return out;
      }
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::string format_diagnostics(const CheckOutcome& outcome) {
  std::string out;
  for (const std::string& m : outcome.messages) {
    out += m;
    out.push_back('\n');
  }
  return out;
}

}  // namespace tableaux
