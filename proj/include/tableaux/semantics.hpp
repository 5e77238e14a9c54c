#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tableaux/syntax.hpp"

namespace tableaux {

// Finite models over the domain {0, ..., size-1}. Interpretations are keyed
// by (symbol, arity); tables are stored row-major with the first argument
// most significant, so table index of (a_0, ..., a_{k-1}) is
// sum a_i * size^(k-1-i).
class FiniteModel {
 public:
  explicit FiniteModel(std::size_t domain_size);

  std::size_t domain_size() const { return size_; }

  void set_fun(const std::string& symbol, std::size_t arity, std::vector<std::size_t> table);
  void set_pred(const std::string& symbol, std::size_t arity, std::vector<bool> table);

  const std::vector<std::size_t>* fun_table(const std::string& symbol, std::size_t arity) const;
  const std::vector<bool>* pred_table(const std::string& symbol, std::size_t arity) const;

  // Throw MissingSymbol when the model does not interpret the symbol.
  std::size_t apply_fun(const std::string& symbol, const std::vector<std::size_t>& args) const;
  bool apply_pred(const std::string& symbol, const std::vector<std::size_t>& args) const;

  const std::map<std::pair<std::string, std::size_t>, std::vector<std::size_t>>& funs() const {
    return funs_;
  }
  const std::map<std::pair<std::string, std::size_t>, std::vector<bool>>& preds() const {
    return preds_;
  }

  // Line-oriented text rendering, one table row per line.
  std::string describe() const;

  bool operator==(const FiniteModel&) const = default;

 private:
  std::size_t size_;
  std::map<std::pair<std::string, std::size_t>, std::vector<std::size_t>> funs_;
  std::map<std::pair<std::string, std::size_t>, std::vector<bool>> preds_;
};

// Quantifier environment: position 0 is the innermost binder.
using BoundEnv = std::vector<std::size_t>;

// Total valuation of free variables: finite overrides on top of a default
// element.
class FreeEnv {
 public:
  FreeEnv() = default;
  explicit FreeEnv(std::size_t fallback) : fallback_(fallback) {}

  std::size_t lookup(const std::string& name) const;
  void set(std::string name, std::size_t value);
  std::size_t fallback() const { return fallback_; }
  const std::map<std::string, std::size_t>& overrides() const { return overrides_; }

  std::string describe() const;

  bool operator==(const FreeEnv&) const = default;

 private:
  std::map<std::string, std::size_t> overrides_;
  std::size_t fallback_ = 0;
};

std::size_t interpret_term(const FiniteModel& m, const BoundEnv& rho, const FreeEnv& sigma,
                           const Term& t);
bool interpret_form(const FiniteModel& m, const BoundEnv& rho, const FreeEnv& sigma,
                    const Form& f);
bool interpret_context(const FiniteModel& m, const FreeEnv& sigma, const std::vector<Form>& gamma);

// Observed symbol arities. Rejects a symbol used at two arities.
struct Signature {
  std::map<std::string, std::size_t> funcs;
  std::map<std::string, std::size_t> preds;

  bool operator==(const Signature&) const = default;
};

Signature signature_of(const Form& f);
Signature signature_of(const std::vector<Form>& fs);
Signature merge_signatures(Signature a, const Signature& b);

// Enumerates every model over a signature at a fixed domain size, in
// lexicographic table order: function tables first, then predicate tables,
// symbols in (name, arity) order, earlier table entries most significant.
// The first model has every function constantly 0 and every predicate
// constantly false.
class ModelEnumerator {
 public:
  ModelEnumerator(const Signature& sig, std::size_t domain_size);

  const FiniteModel& current() const { return model_; }
  // Steps to the next model; returns false once the space is exhausted.
  bool advance();

  // Number of models in the space, saturating at the maximum value.
  static std::uint64_t space_size(const Signature& sig, std::size_t domain_size);

 private:
  struct Slot {
    bool is_pred;
    std::string symbol;
    std::size_t arity;
    std::size_t length;
  };

  FiniteModel model_;
  std::vector<Slot> slots_;
  std::size_t radix_;
};

// Enumerates valuations of a fixed variable set, in lexicographic order with
// the first variable most significant. Variables outside the set keep the
// fallback element 0.
class EnvEnumerator {
 public:
  EnvEnumerator(std::set<std::string> vars, std::size_t domain_size);

  const FreeEnv& current() const { return env_; }
  bool advance();

 private:
  FreeEnv env_;
  std::vector<std::string> vars_;
  std::size_t radix_;
};

struct ValidityVerdict {
  bool valid = false;
  // Present exactly when !valid: the first countermodel in enumeration
  // order, together with the free-variable valuation that falsifies it.
  std::optional<FiniteModel> model;
  std::optional<FreeEnv> env;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 400'000'000;

// Bounded validity oracle: checks the formula in every model of its own
// signature with domain sizes 1..max_size, under every valuation of its free
// variables. Work is metered by formula size per evaluation; crossing the
// budget throws BudgetExceeded.
ValidityVerdict is_valid_upto(const Form& f, std::size_t max_size,
                              std::uint64_t node_budget = kDefaultNodeBudget);

// Entailment against a context, as validity of Or(Neg(conj Gamma), F).
ValidityVerdict valid_under_upto(const std::vector<Form>& gamma, const Form& f,
                                 std::size_t max_size,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

// The context coerced to one formula: derived conjunction of its members,
// Neg(Bot) when empty.
Form context_conjunction(const std::vector<Form>& gamma);

}  // namespace tableaux
