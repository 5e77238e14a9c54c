#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tableaux/semantics.hpp"
#include "tableaux/syntax.hpp"

namespace tableaux {

enum class SkolemKind { Outer, Inner, PreInner };

std::string to_string(SkolemKind kind);
std::optional<SkolemKind> skolem_kind_from_string(const std::string& name);

// Bookkeeping carried along a derivation: the Skolem symbols introduced so
// far and, for the pre-inner strategy only, the symbol associated with each
// delta target. Outer and inner keep assoc empty.
struct SkoRecord {
  std::set<std::string> used;
  std::map<Form, std::string> assoc;

  bool operator==(const SkoRecord&) const = default;
};

// Decomposition of a candidate Skolem term. Throws NotSkolemTerm unless the
// term is a function application.
const std::string& skolem_symbol(const Term& t);
const std::vector<Term>& skolem_args(const Term& t);

class SkolemStrategy {
 public:
  explicit SkolemStrategy(SkolemKind kind) : kind_(kind) {}

  SkolemKind kind() const { return kind_; }

  // The argument variables a valid Skolem term must carry for the given
  // delta target: the whole branch's free variables for outer, the target's
  // own free variables for inner and pre-inner. Arguments appear in
  // lexicographic order without duplicates.
  std::set<std::string> required_args(const Form& target,
                                      const std::set<std::string>& branch_fvs) const;

  // Admissibility of t as the Skolem term for target (a delta formula):
  // t = f(xs) with xs exactly the required argument variables, and f fresh
  // with respect to funcs and record.used. Pre-inner instead pins f to
  // record.assoc at the target when an association exists.
  bool is_sko(const Term& t, const Form& target, const SkoRecord& record,
              const std::set<std::string>& branch_fvs,
              const std::set<std::string>& funcs) const;

  // Records f as used; pre-inner also associates the target with f. Throws
  // ConflictingAssoc when the target is already associated with a different
  // symbol.
  SkoRecord add_symbol(const SkoRecord& record, const std::string& f, const Form& target) const;

 private:
  SkolemKind kind_;
};

// Empirical replacement-model check for a delta step: given a model, an
// admissible Skolem term t for target = Neg(All F), and a valuation mu,
// builds a model that reinterprets only t's head symbol via first-witness
// search. The result must (i) keep every formula of the preserved set
// satisfied wherever it was satisfied before, under every valuation of its
// free variables, and (ii) satisfy Neg(open(F, 0, t)) under mu whenever the
// original model satisfies the target under mu.
struct WitnessResult {
  bool ok = false;
  std::optional<FiniteModel> model;
  std::string detail;
};

WitnessResult check_requirement4(const SkolemStrategy& strategy, const FiniteModel& m,
                                 const Term& t, const Form& target, const FreeEnv& mu,
                                 const std::vector<Form>& preserved);

}  // namespace tableaux
