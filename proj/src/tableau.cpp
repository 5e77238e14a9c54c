#include "tableaux/tableau.hpp"

#include <algorithm>

#include "tableaux/errors.hpp"
#include "tableaux/syntax_io.hpp"

namespace tableaux {

TableauTree::TableauTree(std::vector<Form> label, Ptr left, Ptr right)
    : label_(std::move(label)), left_(std::move(left)), right_(std::move(right)) {}

TableauTree::Ptr TableauTree::node(std::vector<Form> label, Ptr left, Ptr right) {
  return Ptr(new TableauTree(std::move(label), std::move(left), std::move(right)));
}

bool equal_trees(const TableauTree& a, const TableauTree& b) {
  if (&a == &b) return true;
  if (a.label() != b.label()) return false;
  if (static_cast<bool>(a.left()) != static_cast<bool>(b.left())) return false;
  if (static_cast<bool>(a.right()) != static_cast<bool>(b.right())) return false;
  if (a.left() && !equal_trees(*a.left(), *b.left())) return false;
  if (a.right() && !equal_trees(*a.right(), *b.right())) return false;
  return true;
}

std::string to_string(const Branch& b) {
  std::string out = "[";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out.push_back(b[i] == Step::Left ? 'L' : 'R');
  }
  out.push_back(']');
  return out;
}

Tableau initial_tableau(std::vector<Form> gamma) {
  return {TableauTree::node(std::move(gamma)), SkoRecord{}};
}

bool equal_tableaux(const Tableau& a, const Tableau& b) {
  return a.symbols == b.symbols && equal_trees(*a.tree, *b.tree);
}

namespace {

const TableauTree* walk(const Branch& b, const TableauTree& t) {
  const TableauTree* node = &t;
  for (Step s : b) {
    const TableauTree::Ptr& next = s == Step::Left ? node->left() : node->right();
    if (!next) return nullptr;
    node = next.get();
  }
  return node;
}

}  // namespace

bool is_branch_of(const Branch& b, const TableauTree& t) {
  const TableauTree* end = walk(b, t);
  return end && end->is_leaf();
}

std::vector<Form> get_context(const Branch& b, const TableauTree& t) {
  std::vector<Form> out;
  const TableauTree* node = &t;
  out.insert(out.end(), node->label().begin(), node->label().end());
  for (Step s : b) {
    const TableauTree::Ptr& next = s == Step::Left ? node->left() : node->right();
    if (!next) throw NotABranch();
    node = next.get();
    out.insert(out.end(), node->label().begin(), node->label().end());
  }
  return out;
}

bool is_on_branch(const Form& f, const Branch& b, const TableauTree& t) {
  const TableauTree* node = &t;
  if (std::find(node->label().begin(), node->label().end(), f) != node->label().end()) return true;
  for (Step s : b) {
    const TableauTree::Ptr& next = s == Step::Left ? node->left() : node->right();
    if (!next) return false;
    node = next.get();
    if (std::find(node->label().begin(), node->label().end(), f) != node->label().end())
      return true;
  }
  return false;
}

namespace {

void collect_formulas(const TableauTree& t, std::set<Form>& out) {
  out.insert(t.label().begin(), t.label().end());
  if (t.left()) collect_formulas(*t.left(), out);
  if (t.right()) collect_formulas(*t.right(), out);
}

TableauTree::Ptr expand_at(const TableauTree::Ptr& node, const Branch& b, std::size_t i,
                           const std::optional<std::vector<Form>>& left,
                           const std::optional<std::vector<Form>>& right) {
  if (i == b.size()) {
    if (!node->is_leaf()) throw AlreadyExpanded();
    TableauTree::Ptr l = left ? TableauTree::node(*left) : nullptr;
    TableauTree::Ptr r = right ? TableauTree::node(*right) : nullptr;
    return TableauTree::node(node->label(), std::move(l), std::move(r));
  }
  if (b[i] == Step::Left) {
    if (!node->left()) throw NotABranch();
    return TableauTree::node(node->label(), expand_at(node->left(), b, i + 1, left, right),
                             node->right());
  }
  if (!node->right()) throw NotABranch();
  return TableauTree::node(node->label(), node->left(),
                           expand_at(node->right(), b, i + 1, left, right));
}

}  // namespace

std::set<Form> get_all_formulas(const TableauTree& t) {
  std::set<Form> out;
  collect_formulas(t, out);
  return out;
}

Tableau expand_tableau_branch(const std::optional<std::vector<Form>>& left,
                              const std::optional<std::vector<Form>>& right, const Branch& b,
                              const Tableau& t) {
  if (!left && !right) throw Error("expansion needs at least one child label");
  return {expand_at(t.tree, b, 0, left, right), t.symbols};
}

namespace {

TableauTree::Ptr replace_at(const TableauTree::Ptr& node, const Branch& b, std::size_t i,
                            const TableauTree::Ptr& replacement) {
  if (!node) throw NotAPath();
  if (i == b.size()) return replacement;
  if (b[i] == Step::Left)
    return TableauTree::node(node->label(), replace_at(node->left(), b, i + 1, replacement),
                             node->right());
  return TableauTree::node(node->label(), node->left(),
                           replace_at(node->right(), b, i + 1, replacement));
}

}  // namespace

TableauTree::Ptr replace_child(const Branch& b, const TableauTree::Ptr& t,
                               TableauTree::Ptr replacement) {
  return replace_at(t, b, 0, replacement);
}

ExpansionDescriptor ExpansionDescriptor::alpha_neg_neg(Branch b, Form target) {
  return {Kind::AlphaNegNeg, std::move(b), std::move(target), {}, std::nullopt};
}
ExpansionDescriptor ExpansionDescriptor::alpha_neg_or(Branch b, Form target) {
  return {Kind::AlphaNegOr, std::move(b), std::move(target), {}, std::nullopt};
}
ExpansionDescriptor ExpansionDescriptor::beta_or(Branch b, Form target) {
  return {Kind::BetaOr, std::move(b), std::move(target), {}, std::nullopt};
}
ExpansionDescriptor ExpansionDescriptor::gamma_all(Branch b, Form target, std::string var) {
  return {Kind::GammaAll, std::move(b), std::move(target), std::move(var), std::nullopt};
}
ExpansionDescriptor ExpansionDescriptor::delta_neg_all(Branch b, Form target, Term term) {
  return {Kind::DeltaNegAll, std::move(b), std::move(target), {}, std::move(term)};
}

namespace {

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

Tableau expansion_step(const SkolemStrategy& strategy, const Tableau& t,
                       const ExpansionDescriptor& d) {
  if (!is_branch_of(d.branch, *t.tree))
    throw RuleNotApplicable("path " + to_string(d.branch) + " is not a branch");
  if (!is_on_branch(d.target, d.branch, *t.tree))
    throw RuleNotApplicable("target " + print_form(d.target) + " is not on the branch");

  switch (d.kind) {
    case ExpansionDescriptor::Kind::AlphaNegNeg: {
      const Form* f = as_neg_neg(d.target);
      if (!f) throw RuleNotApplicable("target is not of shape Neg(Neg F)");
      return expand_tableau_branch(std::vector<Form>{*f}, std::nullopt, d.branch, t);
    }
    case ExpansionDescriptor::Kind::AlphaNegOr: {
      const Form* o = as_neg_or(d.target);
      if (!o) throw RuleNotApplicable("target is not of shape Neg(Or F G)");
      return expand_tableau_branch(std::vector<Form>{Form::neg(o->left()), Form::neg(o->right())},
                                   std::nullopt, d.branch, t);
    }
    case ExpansionDescriptor::Kind::BetaOr: {
      if (d.target.kind() != FormKind::Or)
        throw RuleNotApplicable("target is not of shape Or F G");
      return expand_tableau_branch(std::vector<Form>{d.target.left()},
                                   std::vector<Form>{d.target.right()}, d.branch, t);
    }
    case ExpansionDescriptor::Kind::GammaAll: {
      if (d.target.kind() != FormKind::All)
        throw RuleNotApplicable("target is not of shape All F");
      Form instance = open(d.target.child(), 0, Term::free(d.var));
      return expand_tableau_branch(std::vector<Form>{std::move(instance)}, std::nullopt, d.branch,
                                   t);
    }
    case ExpansionDescriptor::Kind::DeltaNegAll: {
      const Form* body = as_neg_all(d.target);
      if (!body) throw RuleNotApplicable("target is not of shape Neg(All F)");
      if (!d.term) throw RuleNotApplicable("delta step carries no Skolem term");
      std::set<std::string> branch_fvs = fv(get_context(d.branch, *t.tree));
      std::set<std::string> funcs = function_symbols(get_all_formulas(*t.tree));
      if (!strategy.is_sko(*d.term, d.target, t.symbols, branch_fvs, funcs))
        throw RuleNotApplicable("term " + print_term(*d.term) +
                                " is not an admissible Skolem term here");
      Form instance = Form::neg(open(*body, 0, *d.term));
      Tableau out = expand_tableau_branch(std::vector<Form>{std::move(instance)}, std::nullopt,
                                          d.branch, t);
      out.symbols = strategy.add_symbol(t.symbols, skolem_symbol(*d.term), d.target);
      return out;
    }
  }
  throw RuleNotApplicable("unknown rule");
}

namespace {

bool branch_closed(const std::vector<Form>& ctx, const Substitution& sigma) {
  std::set<Form> instantiated;
  for (const Form& f : ctx) {
    if (f.kind() == FormKind::Bot) return true;
    instantiated.insert(subst(f, sigma));
  }
  for (const Form& f : instantiated)
    if (f.kind() == FormKind::Neg && instantiated.contains(f.child())) return true;
  return false;
}

bool all_branches_closed(const TableauTree& t, std::vector<Form>& ctx,
                         const Substitution& sigma) {
  std::size_t mark = ctx.size();
  ctx.insert(ctx.end(), t.label().begin(), t.label().end());
  bool ok;
  if (t.is_leaf()) {
    ok = branch_closed(ctx, sigma);
  } else {
    ok = true;
    if (t.left()) ok = all_branches_closed(*t.left(), ctx, sigma);
    if (ok && t.right()) ok = all_branches_closed(*t.right(), ctx, sigma);
  }
  ctx.erase(ctx.begin() + static_cast<std::ptrdiff_t>(mark), ctx.end());
  return ok;
}

}  // namespace

bool is_tableau_closed(const Tableau& t, const Substitution& sigma) {
  std::vector<Form> ctx;
  return all_branches_closed(*t.tree, ctx, sigma);
}

namespace {

// Matching against variable opening: finds u with open(g, 0, u) == h, where
// the opened index is 0 adjusted by binder depth. Returns false on definite
// mismatch; u stays empty when g has no occurrence of the opened index.
bool match_open_term(const Term& g, const Term& h, std::size_t depth, std::optional<Term>& u) {
  if (g.kind() == TermKind::Bound && g.index() == depth) {
    if (u && !(*u == h)) return false;
    u = h;
    return true;
  }
  if (g.kind() != h.kind()) return false;
  switch (g.kind()) {
    case TermKind::Bound:
      return g.index() == h.index();
    case TermKind::Free:
      return g.name() == h.name();
    case TermKind::Fun: {
      if (g.symbol() != h.symbol() || g.args().size() != h.args().size()) return false;
      for (std::size_t i = 0; i < g.args().size(); ++i)
        if (!match_open_term(g.args()[i], h.args()[i], depth, u)) return false;
      return true;
    }
  }
  return false;
}

bool match_open_form(const Form& g, const Form& h, std::size_t depth, std::optional<Term>& u) {
  if (g.kind() != h.kind()) return false;
  switch (g.kind()) {
    case FormKind::Bot:
      return true;
    case FormKind::Pred: {
      if (g.symbol() != h.symbol() || g.args().size() != h.args().size()) return false;
      for (std::size_t i = 0; i < g.args().size(); ++i)
        if (!match_open_term(g.args()[i], h.args()[i], depth, u)) return false;
      return true;
    }
    case FormKind::Neg:
      return match_open_form(g.child(), h.child(), depth, u);
    case FormKind::Or:
      return match_open_form(g.left(), h.left(), depth, u) &&
             match_open_form(g.right(), h.right(), depth, u);
    case FormKind::All:
      return match_open_form(g.child(), h.child(), depth + 1, u);
  }
  return false;
}

std::optional<Term> match_open(const Form& g, const Form& h) {
  std::optional<Term> u;
  if (!match_open_form(g, h, 0, u)) return std::nullopt;
  if (!u) return std::nullopt;  // vacuous opening; caller picks the term
  if (!(open(g, 0, *u) == h)) return std::nullopt;
  return u;
}

struct DiffPoint {
  Branch path;
  std::vector<Form> left_label;
  std::optional<std::vector<Form>> right_label;
};

enum class DiffStatus { Equal, Point, Fail };

DiffStatus diff_trees(const TableauTree::Ptr& a, const TableauTree::Ptr& b, Branch& path,
                      DiffPoint& out) {
  if (a->label() != b->label()) return DiffStatus::Fail;
  bool al = static_cast<bool>(a->left()), ar = static_cast<bool>(a->right());
  bool bl = static_cast<bool>(b->left()), br = static_cast<bool>(b->right());
  if (a->is_leaf()) {
    if (b->is_leaf()) return DiffStatus::Equal;
    // New children must themselves be leaves: one step attaches fresh nodes.
    if (bl && (!b->left()->is_leaf())) return DiffStatus::Fail;
    if (br && (!b->right()->is_leaf())) return DiffStatus::Fail;
    if (bl && !br) {
      out = {path, b->left()->label(), std::nullopt};
      return DiffStatus::Point;
    }
    if (bl && br) {
      out = {path, b->left()->label(), b->right()->label()};
      return DiffStatus::Point;
    }
    return DiffStatus::Fail;
  }
  if (al != bl || ar != br) return DiffStatus::Fail;
  DiffStatus left_status = DiffStatus::Equal;
  if (al) {
    path.push_back(Step::Left);
    left_status = diff_trees(a->left(), b->left(), path, out);
    path.pop_back();
    if (left_status == DiffStatus::Fail) return DiffStatus::Fail;
  }
  DiffStatus right_status = DiffStatus::Equal;
  if (ar) {
    path.push_back(Step::Right);
    right_status = diff_trees(a->right(), b->right(), path, out);
    path.pop_back();
    if (right_status == DiffStatus::Fail) return DiffStatus::Fail;
  }
  if (left_status == DiffStatus::Point && right_status == DiffStatus::Point)
    return DiffStatus::Fail;
  if (left_status == DiffStatus::Point || right_status == DiffStatus::Point)
    return DiffStatus::Point;
  return DiffStatus::Equal;
}

// Fixes the diff path before reconstructing the descriptor candidates.
std::optional<DiffPoint> find_expansion_point(const Tableau& a, const Tableau& b) {
  Branch path;
  DiffPoint out;
  if (diff_trees(a.tree, b.tree, path, out) != DiffStatus::Point) return std::nullopt;
  return out;
}

bool try_step(const SkolemStrategy& strategy, const Tableau& a, const Tableau& b,
              const ExpansionDescriptor& d) {
  try {
    return equal_tableaux(expansion_step(strategy, a, d), b);
  } catch (const Error&) {
    return false;
  }
}

// Searches a descriptor justifying the step from a to b.
std::optional<ExpansionDescriptor> justify_step(const SkolemStrategy& strategy, const Tableau& a,
                                                const Tableau& b) {
  std::optional<DiffPoint> point = find_expansion_point(a, b);
  if (!point) return std::nullopt;
  const Branch& at = point->path;
  std::vector<Form> ctx;
  try {
    ctx = get_context(at, *a.tree);
  } catch (const NotABranch&) {
    return std::nullopt;
  }

  for (const Form& target : ctx) {
    std::vector<ExpansionDescriptor> candidates;
    if (point->right_label) {
      if (target.kind() == FormKind::Or) candidates.push_back(ExpansionDescriptor::beta_or(at, target));
    } else if (point->left_label.size() == 2) {
      if (as_neg_or(target)) candidates.push_back(ExpansionDescriptor::alpha_neg_or(at, target));
    } else if (point->left_label.size() == 1) {
      const Form& added = point->left_label[0];
      if (as_neg_neg(target)) candidates.push_back(ExpansionDescriptor::alpha_neg_neg(at, target));
      if (target.kind() == FormKind::All) {
        if (std::optional<Term> u = match_open(target.child(), added);
            u && u->kind() == TermKind::Free)
          candidates.push_back(ExpansionDescriptor::gamma_all(at, target, u->name()));
        // Vacuous quantifier: any variable produces the same instance.
        candidates.push_back(ExpansionDescriptor::gamma_all(at, target, "X"));
      }
      if (const Form* body = as_neg_all(target); body && added.kind() == FormKind::Neg) {
        if (std::optional<Term> u = match_open(*body, added.child()))
          candidates.push_back(ExpansionDescriptor::delta_neg_all(at, target, *u));
        // Vacuous opening: reconstruct the term from the record delta or,
        // for pre-inner reuse, from the association.
        std::set<std::string> wanted = strategy.required_args(target, fv(ctx));
        std::vector<Term> args;
        for (const std::string& v : wanted) args.push_back(Term::free(v));
        for (const std::string& sym : b.symbols.used)
          if (!a.symbols.used.contains(sym))
            candidates.push_back(
                ExpansionDescriptor::delta_neg_all(at, target, Term::fun(sym, args)));
        if (auto assoc = a.symbols.assoc.find(target); assoc != a.symbols.assoc.end())
          candidates.push_back(
              ExpansionDescriptor::delta_neg_all(at, target, Term::fun(assoc->second, args)));
      }
    }
    for (const ExpansionDescriptor& d : candidates)
      if (try_step(strategy, a, b, d)) return d;
  }
  return std::nullopt;
}

}  // namespace

SequenceCheck check_expansion_sequence(const SkolemStrategy& strategy,
                                       const std::vector<Form>& gamma, const Substitution& sigma,
                                       const std::vector<Tableau>& seq) {
  if (seq.empty()) return {false, 0, "empty sequence"};
  if (!equal_tableaux(seq.front(), initial_tableau(gamma)))
    return {false, 0, "sequence does not start from the single-node tableau"};
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!justify_step(strategy, seq[i], seq[i + 1]))
      return {false, i + 1, "no expansion rule justifies this step"};
  if (!is_tableau_closed(seq.back(), sigma))
    return {false, seq.size() - 1, "final tableau is not closed under the substitution"};
  return {true, 0, ""};
}

SequenceCheck check_expansion_sequence(const SkolemStrategy& strategy,
                                       const std::vector<Form>& gamma, const Substitution& sigma,
                                       const std::vector<Tableau>& seq,
                                       const std::vector<ExpansionDescriptor>& steps) {
  if (seq.empty()) return {false, 0, "empty sequence"};
  if (!equal_tableaux(seq.front(), initial_tableau(gamma)))
    return {false, 0, "sequence does not start from the single-node tableau"};
  if (steps.size() + 1 != seq.size())
    return {false, 0, "descriptor count does not match sequence length"};
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    try {
      if (!equal_tableaux(expansion_step(strategy, seq[i], steps[i]), seq[i + 1]))
        return {false, i + 1, "descriptor does not produce the next tableau"};
    } catch (const Error& e) {
      return {false, i + 1, e.what()};
    }
  }
  if (!is_tableau_closed(seq.back(), sigma))
    return {false, seq.size() - 1, "final tableau is not closed under the substitution"};
  return {true, 0, ""};
}

namespace {

void render(const TableauTree& t, const std::string& prefix, const std::string& tag,
            std::string& out) {
  out += prefix + tag + "[";
  for (std::size_t i = 0; i < t.label().size(); ++i) {
    if (i > 0) out += "; ";
    out += print_form(t.label()[i]);
  }
  out += "]\n";
  if (t.left()) render(*t.left(), prefix + "  ", "L ", out);
  if (t.right()) render(*t.right(), prefix + "  ", "R ", out);
}

}  // namespace

std::string debug_string(const TableauTree& t) {
  std::string out;
  render(t, "", "", out);
  return out;
}

}  // namespace tableaux
