#include "tableaux/semantics.hpp"

#include <limits>

#include "tableaux/errors.hpp"

namespace tableaux {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kU64Max / b) return kU64Max;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

std::size_t table_length(std::size_t size, std::size_t arity) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < arity; ++i) out *= size;
  return out;
}

std::size_t row_index(std::size_t size, const std::vector<std::size_t>& args) {
  std::size_t index = 0;
  for (std::size_t a : args) index = index * size + a;
  return index;
}

std::vector<std::size_t> row_args(std::size_t size, std::size_t arity, std::size_t row) {
  std::vector<std::size_t> out(arity, 0);
  for (std::size_t i = arity; i-- > 0;) {
    out[i] = row % size;
    row /= size;
  }
  return out;
}

std::string row_label(std::size_t size, std::size_t arity, std::size_t row) {
  std::string out = "(";
  std::vector<std::size_t> args = row_args(size, arity, row);
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(args[i]);
  }
  out.push_back(')');
  return out;
}

struct Meter {
  std::uint64_t remaining;
  std::uint64_t spent = 0;

  void charge(std::uint64_t n) {
    spent += n;
    if (n > remaining) throw BudgetExceeded(spent);
    remaining -= n;
  }
};

// Internal evaluation stack: back() is the innermost binder.
std::size_t eval_term(const FiniteModel& m, const std::vector<std::size_t>& stack,
                      const FreeEnv& sigma, const Term& t) {
  switch (t.kind()) {
    case TermKind::Bound: {
      std::size_t k = t.index();
      if (k >= stack.size()) throw DanglingIndex(k);
      return stack[stack.size() - 1 - k];
    }
    case TermKind::Free:
      return sigma.lookup(t.name());
    case TermKind::Fun: {
      std::vector<std::size_t> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(eval_term(m, stack, sigma, a));
      return m.apply_fun(t.symbol(), args);
    }
  }
  throw Error("unreachable term kind");
}

bool eval_form(const FiniteModel& m, std::vector<std::size_t>& stack, const FreeEnv& sigma,
               const Form& f) {
  switch (f.kind()) {
    case FormKind::Bot:
      return false;
    case FormKind::Pred: {
      std::vector<std::size_t> args;
      args.reserve(f.args().size());
      for (const Term& a : f.args()) args.push_back(eval_term(m, stack, sigma, a));
      return m.apply_pred(f.symbol(), args);
    }
    case FormKind::Neg:
      return !eval_form(m, stack, sigma, f.child());
    case FormKind::Or:
      return eval_form(m, stack, sigma, f.left()) || eval_form(m, stack, sigma, f.right());
    case FormKind::All:
      for (std::size_t d = 0; d < m.domain_size(); ++d) {
        stack.push_back(d);
        bool ok = eval_form(m, stack, sigma, f.child());
        stack.pop_back();
        if (!ok) return false;
      }
      return true;
  }
  throw Error("unreachable form kind");
}

void observe(std::map<std::string, std::size_t>& arities, const std::string& symbol,
             std::size_t arity) {
  auto [it, inserted] = arities.emplace(symbol, arity);
  if (!inserted && it->second != arity) throw InconsistentArity(symbol, it->second, arity);
}

void signature_term(const Term& t, Signature& out) {
  if (t.kind() == TermKind::Fun) {
    observe(out.funcs, t.symbol(), t.args().size());
    for (const Term& a : t.args()) signature_term(a, out);
  }
}

void signature_form(const Form& f, Signature& out) {
  switch (f.kind()) {
    case FormKind::Bot:
      return;
    case FormKind::Pred:
      observe(out.preds, f.symbol(), f.args().size());
      for (const Term& a : f.args()) signature_term(a, out);
      return;
    case FormKind::Neg:
    case FormKind::All:
      signature_form(f.child(), out);
      return;
    case FormKind::Or:
      signature_form(f.left(), out);
      signature_form(f.right(), out);
      return;
  }
}

}  // namespace

FiniteModel::FiniteModel(std::size_t domain_size) : size_(domain_size) {
  if (domain_size == 0) throw Error("domain must be non-empty");
}

void FiniteModel::set_fun(const std::string& symbol, std::size_t arity,
                          std::vector<std::size_t> table) {
  if (table.size() != table_length(size_, arity))
    throw Error("table for " + symbol + "/" + std::to_string(arity) + " has wrong length");
  for (std::size_t v : table)
    if (v >= size_) throw Error("table value outside domain");
  funs_.insert_or_assign({symbol, arity}, std::move(table));
}

void FiniteModel::set_pred(const std::string& symbol, std::size_t arity, std::vector<bool> table) {
  if (table.size() != table_length(size_, arity))
    throw Error("table for " + symbol + "/" + std::to_string(arity) + " has wrong length");
  preds_.insert_or_assign({symbol, arity}, std::move(table));
}

const std::vector<std::size_t>* FiniteModel::fun_table(const std::string& symbol,
                                                       std::size_t arity) const {
  auto it = funs_.find({symbol, arity});
  return it == funs_.end() ? nullptr : &it->second;
}

const std::vector<bool>* FiniteModel::pred_table(const std::string& symbol,
                                                 std::size_t arity) const {
  auto it = preds_.find({symbol, arity});
  return it == preds_.end() ? nullptr : &it->second;
}

std::size_t FiniteModel::apply_fun(const std::string& symbol,
                                   const std::vector<std::size_t>& args) const {
  const std::vector<std::size_t>* table = fun_table(symbol, args.size());
  if (!table) throw MissingSymbol(symbol, args.size());
  return (*table)[row_index(size_, args)];
}

bool FiniteModel::apply_pred(const std::string& symbol,
                             const std::vector<std::size_t>& args) const {
  const std::vector<bool>* table = pred_table(symbol, args.size());
  if (!table) throw MissingSymbol(symbol, args.size());
  return (*table)[row_index(size_, args)];
}

std::string FiniteModel::describe() const {
  std::string out = "domain-size " + std::to_string(size_) + "\n";
  for (const auto& [key, table] : funs_) {
    out += "fun " + key.first + "/" + std::to_string(key.second) + "\n";
    for (std::size_t row = 0; row < table.size(); ++row)
      out += "  " + row_label(size_, key.second, row) + " -> " + std::to_string(table[row]) + "\n";
  }
  for (const auto& [key, table] : preds_) {
    out += "pred " + key.first + "/" + std::to_string(key.second) + "\n";
    for (std::size_t row = 0; row < table.size(); ++row)
      out += "  " + row_label(size_, key.second, row) + " -> " +
             (table[row] ? "true" : "false") + "\n";
  }
  return out;
}

std::size_t FreeEnv::lookup(const std::string& name) const {
  auto it = overrides_.find(name);
  return it == overrides_.end() ? fallback_ : it->second;
}

void FreeEnv::set(std::string name, std::size_t value) {
  overrides_.insert_or_assign(std::move(name), value);
}

std::string FreeEnv::describe() const {
  std::string out = "free-env default " + std::to_string(fallback_) + "\n";
  for (const auto& [name, value] : overrides_)
    out += "  " + name + " -> " + std::to_string(value) + "\n";
  return out;
}

std::size_t interpret_term(const FiniteModel& m, const BoundEnv& rho, const FreeEnv& sigma,
                           const Term& t) {
  std::vector<std::size_t> stack(rho.rbegin(), rho.rend());
  return eval_term(m, stack, sigma, t);
}

bool interpret_form(const FiniteModel& m, const BoundEnv& rho, const FreeEnv& sigma,
                    const Form& f) {
  std::vector<std::size_t> stack(rho.rbegin(), rho.rend());
  return eval_form(m, stack, sigma, f);
}

bool interpret_context(const FiniteModel& m, const FreeEnv& sigma,
                       const std::vector<Form>& gamma) {
  std::vector<std::size_t> stack;
  for (const Form& f : gamma)
    if (!eval_form(m, stack, sigma, f)) return false;
  return true;
}

Signature signature_of(const Form& f) {
  Signature out;
  signature_form(f, out);
  return out;
}

Signature signature_of(const std::vector<Form>& fs) {
  Signature out;
  for (const Form& f : fs) signature_form(f, out);
  return out;
}

Signature merge_signatures(Signature a, const Signature& b) {
  for (const auto& [symbol, arity] : b.funcs) observe(a.funcs, symbol, arity);
  for (const auto& [symbol, arity] : b.preds) observe(a.preds, symbol, arity);
  return a;
}

ModelEnumerator::ModelEnumerator(const Signature& sig, std::size_t domain_size)
    : model_(domain_size), radix_(domain_size) {
  for (const auto& [symbol, arity] : sig.funcs) {
    std::size_t length = table_length(domain_size, arity);
    slots_.push_back({false, symbol, arity, length});
    model_.set_fun(symbol, arity, std::vector<std::size_t>(length, 0));
  }
  for (const auto& [symbol, arity] : sig.preds) {
    std::size_t length = table_length(domain_size, arity);
    slots_.push_back({true, symbol, arity, length});
    model_.set_pred(symbol, arity, std::vector<bool>(length, false));
  }
}

bool ModelEnumerator::advance() {
  // Odometer step: the last entry of the last table is least significant.
  for (std::size_t s = slots_.size(); s-- > 0;) {
    const Slot& slot = slots_[s];
    if (slot.is_pred) {
      std::vector<bool> table = *model_.pred_table(slot.symbol, slot.arity);
      for (std::size_t e = slot.length; e-- > 0;) {
        if (!table[e]) {
          table[e] = true;
          model_.set_pred(slot.symbol, slot.arity, std::move(table));
          return true;
        }
        table[e] = false;
      }
      model_.set_pred(slot.symbol, slot.arity, std::move(table));
    } else {
      std::vector<std::size_t> table = *model_.fun_table(slot.symbol, slot.arity);
      for (std::size_t e = slot.length; e-- > 0;) {
        if (table[e] + 1 < radix_) {
          ++table[e];
          model_.set_fun(slot.symbol, slot.arity, std::move(table));
          return true;
        }
        table[e] = 0;
      }
      model_.set_fun(slot.symbol, slot.arity, std::move(table));
    }
  }
  return false;
}

std::uint64_t ModelEnumerator::space_size(const Signature& sig, std::size_t domain_size) {
  std::uint64_t out = 1;
  for (const auto& [symbol, arity] : sig.funcs) {
    (void)symbol;
    out = sat_mul(out, sat_pow(domain_size, sat_pow(domain_size, arity)));
  }
  for (const auto& [symbol, arity] : sig.preds) {
    (void)symbol;
    out = sat_mul(out, sat_pow(2, sat_pow(domain_size, arity)));
  }
  return out;
}

EnvEnumerator::EnvEnumerator(std::set<std::string> vars, std::size_t domain_size)
    : radix_(domain_size) {
  vars_.assign(vars.begin(), vars.end());
  for (const std::string& v : vars_) env_.set(v, 0);
}

bool EnvEnumerator::advance() {
  for (std::size_t i = vars_.size(); i-- > 0;) {
    std::size_t value = env_.lookup(vars_[i]);
    if (value + 1 < radix_) {
      env_.set(vars_[i], value + 1);
      return true;
    }
    env_.set(vars_[i], 0);
  }
  return false;
}

ValidityVerdict is_valid_upto(const Form& f, std::size_t max_size, std::uint64_t node_budget) {
  Signature sig = signature_of(f);
  std::set<std::string> vars = fv(f);
  std::uint64_t cost = form_size(f);
  Meter meter{node_budget};
  for (std::size_t size = 1; size <= max_size; ++size) {
    ModelEnumerator models(sig, size);
    do {
      EnvEnumerator envs(vars, size);
      do {
        meter.charge(cost);
        if (!interpret_form(models.current(), {}, envs.current(), f))
          return {false, models.current(), envs.current()};
      } while (envs.advance());
    } while (models.advance());
  }
  return {true, std::nullopt, std::nullopt};
}

ValidityVerdict valid_under_upto(const std::vector<Form>& gamma, const Form& f,
                                 std::size_t max_size, std::uint64_t node_budget) {
  return is_valid_upto(Form::disj(Form::neg(context_conjunction(gamma)), f), max_size,
                       node_budget);
}

Form context_conjunction(const std::vector<Form>& gamma) {
  if (gamma.empty()) return truth();
  Form out = gamma.back();
  for (std::size_t i = gamma.size() - 1; i-- > 0;) out = conj(gamma[i], std::move(out));
  return out;
}

}  // namespace tableaux
