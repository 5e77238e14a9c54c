#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tableaux/skolem.hpp"
#include "tableaux/syntax.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

// One derivation rule, carrying the formula it targets as written on the
// branch. GammaAll also names the instantiation variable, DeltaNegAll the
// Skolem term.
struct Rule {
  enum class Kind { AlphaNegNeg, AlphaNegOr, BetaOr, GammaAll, DeltaNegAll };

  Kind kind;
  Form target;
  std::string var;
  std::optional<Term> term;

  static Rule alpha_neg_neg(Form target);
  static Rule alpha_neg_or(Form target);
  static Rule beta_or(Form target);
  static Rule gamma_all(Form target, std::string var);
  static Rule delta_neg_all(Form target, Term term);

  bool operator==(const Rule&) const = default;
};

const char* rule_name(Rule::Kind kind);
bool is_unary(Rule::Kind kind);

// Proof skeletons: a leaf either claims a trivial contradiction (no payload)
// or names the closing pair; an inner node applies a rule and continues in
// its subtrees. Unary rules use only the left subtree; in canonical
// certificates their right subtree is the trivial leaf.
class RuleTree {
 public:
  static RuleTree leaf();
  static RuleTree leaf(Form f, Form g);
  static RuleTree node(Rule rule, RuleTree left, RuleTree right);

  bool is_leaf() const { return !rule_.has_value(); }
  bool is_trivial_leaf() const { return is_leaf() && !closure_.has_value(); }
  const std::optional<std::pair<Form, Form>>& closure() const { return closure_; }
  const Rule& rule() const { return *rule_; }
  const RuleTree& left() const { return kids_[0]; }
  const RuleTree& right() const { return kids_[1]; }

  bool operator==(const RuleTree&) const = default;

 private:
  RuleTree() = default;

  std::optional<std::pair<Form, Form>> closure_;
  std::optional<Rule> rule_;
  std::vector<RuleTree> kids_;
};

struct Certificate {
  std::vector<Form> context;
  Substitution sigma;
  SkolemKind strategy = SkolemKind::Inner;
  RuleTree tree = RuleTree::leaf();

  bool operator==(const Certificate&) const = default;
};

// Checker verdict. status true comes with no messages; status false comes
// with at least one message naming the rule, the offending formula or term,
// and the branch path. symbs is the Skolemization record accumulated across
// the accepted part of the tree.
struct CheckOutcome {
  bool status = false;
  SkoRecord symbs;
  std::vector<std::string> messages;
};

CheckOutcome check_proof(const Certificate& cert);

CheckOutcome check_proof_aux(const SkolemStrategy& strategy,
                             const std::set<std::string>& base_funcs,
                             const std::vector<Form>& gamma, const Substitution& sigma,
                             const SkoRecord& record, const RuleTree& tree,
                             const Branch& path = {});

// Replays a rule tree as the expansion sequence it abbreviates, starting
// from the given tableau position. Absent when a rule does not fit the
// structure. The head of the result is the starting tableau itself.
std::optional<std::vector<Tableau>> ruletree_to_sequence(const SkolemStrategy& strategy,
                                                         const Branch& b, const Tableau& t,
                                                         const RuleTree& tree);

// Messages joined one per line; empty text for an accepting outcome.
std::string format_diagnostics(const CheckOutcome& outcome);

}  // namespace tableaux
