#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tableaux/skolem.hpp"
#include "tableaux/syntax.hpp"

namespace tableaux {

// Binary tableau trees. Nodes are labelled with lists of formulas; a node
// with one child keeps it in the Left position. Trees are immutable and
// share unchanged subtrees across expansions.
class TableauTree {
 public:
  using Ptr = std::shared_ptr<const TableauTree>;

  static Ptr node(std::vector<Form> label, Ptr left = nullptr, Ptr right = nullptr);

  const std::vector<Form>& label() const { return label_; }
  const Ptr& left() const { return left_; }
  const Ptr& right() const { return right_; }
  bool is_leaf() const { return !left_ && !right_; }

 private:
  TableauTree(std::vector<Form> label, Ptr left, Ptr right);

  std::vector<Form> label_;
  Ptr left_;
  Ptr right_;
};

bool equal_trees(const TableauTree& a, const TableauTree& b);

enum class Step : std::uint8_t { Left, Right };

// Root-to-leaf paths (branches) and their prefixes.
using Branch = std::vector<Step>;

std::string to_string(const Branch& b);

// A tableau proper: the tree plus the Skolemization record accumulated by
// the delta expansions performed so far.
struct Tableau {
  TableauTree::Ptr tree;
  SkoRecord symbols;
};

Tableau initial_tableau(std::vector<Form> gamma);
bool equal_tableaux(const Tableau& a, const Tableau& b);

// True when the path leads from the root to a leaf.
bool is_branch_of(const Branch& b, const TableauTree& t);

// Concatenation of the labels along the path, root first. The path may stop
// short of a leaf. Throws NotABranch when a step leads nowhere.
std::vector<Form> get_context(const Branch& b, const TableauTree& t);

// Membership of f in one of the labels along the path; false on invalid
// paths.
bool is_on_branch(const Form& f, const Branch& b, const TableauTree& t);

// Every formula labelling any node of the tree.
std::set<Form> get_all_formulas(const TableauTree& t);

// Attaches the given label lists as children of the node addressed by b.
// At least one side must be present; a single label goes to the Left child.
// The Skolemization record carries over unchanged.
Tableau expand_tableau_branch(const std::optional<std::vector<Form>>& left,
                              const std::optional<std::vector<Form>>& right, const Branch& b,
                              const Tableau& t);

// Replaces the subtree addressed by b. Throws NotAPath.
TableauTree::Ptr replace_child(const Branch& b, const TableauTree::Ptr& t,
                               TableauTree::Ptr replacement);

// One expansion step, named by rule. The target field always carries the
// formula as it appears on the branch (so AlphaNegNeg targets Neg(Neg F),
// DeltaNegAll targets Neg(All F), and so on).
struct ExpansionDescriptor {
  enum class Kind { AlphaNegNeg, AlphaNegOr, BetaOr, GammaAll, DeltaNegAll };

  Kind kind;
  Branch branch;
  Form target;
  std::string var;           // GammaAll only
  std::optional<Term> term;  // DeltaNegAll only

  static ExpansionDescriptor alpha_neg_neg(Branch b, Form target);
  static ExpansionDescriptor alpha_neg_or(Branch b, Form target);
  static ExpansionDescriptor beta_or(Branch b, Form target);
  static ExpansionDescriptor gamma_all(Branch b, Form target, std::string var);
  static ExpansionDescriptor delta_neg_all(Branch b, Form target, Term term);
};

// Applies the described rule, checking its side conditions: the path is a
// full branch, the target sits on it, the target has the right shape, and
// for delta the term passes is_sko against the branch's free variables and
// the function symbols of the whole tableau. Throws RuleNotApplicable.
Tableau expansion_step(const SkolemStrategy& strategy, const Tableau& t,
                       const ExpansionDescriptor& d);

// Closure: every branch carries Bot, or a pair of formulas that become
// complementary under sigma.
bool is_tableau_closed(const Tableau& t, const Substitution& sigma);

struct SequenceCheck {
  bool ok = false;
  // On failure: the index of the offending sequence element and a note.
  std::size_t index = 0;
  std::string detail;
};

// Checks that seq witnesses a derivation of a closed tableau from gamma:
// (i) seq starts from the single-node tableau labelled gamma with an empty
// record, (ii) every step is justified by some expansion descriptor, found
// by diffing consecutive tableaux, and (iii) the final tableau is closed
// under sigma.
SequenceCheck check_expansion_sequence(const SkolemStrategy& strategy,
                                       const std::vector<Form>& gamma, const Substitution& sigma,
                                       const std::vector<Tableau>& seq);

// Same, with the justifying descriptors supplied instead of searched.
SequenceCheck check_expansion_sequence(const SkolemStrategy& strategy,
                                       const std::vector<Form>& gamma, const Substitution& sigma,
                                       const std::vector<Tableau>& seq,
                                       const std::vector<ExpansionDescriptor>& steps);

std::string debug_string(const TableauTree& t);

}  // namespace tableaux
