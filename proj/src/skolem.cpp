#include "tableaux/skolem.hpp"

#include "tableaux/errors.hpp"
#include "tableaux/syntax_io.hpp"

namespace tableaux {

std::string to_string(SkolemKind kind) {
  switch (kind) {
    case SkolemKind::Outer:
      return "outer";
    case SkolemKind::Inner:
      return "inner";
    case SkolemKind::PreInner:
      return "preinner";
  }
  return "outer";
}

std::optional<SkolemKind> skolem_kind_from_string(const std::string& name) {
  if (name == "outer") return SkolemKind::Outer;
  if (name == "inner") return SkolemKind::Inner;
  if (name == "preinner") return SkolemKind::PreInner;
  return std::nullopt;
}

const std::string& skolem_symbol(const Term& t) {
  if (t.kind() != TermKind::Fun) throw NotSkolemTerm();
  return t.symbol();
}

const std::vector<Term>& skolem_args(const Term& t) {
  if (t.kind() != TermKind::Fun) throw NotSkolemTerm();
  return t.args();
}

std::set<std::string> SkolemStrategy::required_args(
    const Form& target, const std::set<std::string>& branch_fvs) const {
  return kind_ == SkolemKind::Outer ? branch_fvs : fv(target);
}

bool SkolemStrategy::is_sko(const Term& t, const Form& target, const SkoRecord& record,
                            const std::set<std::string>& branch_fvs,
                            const std::set<std::string>& funcs) const {
  if (t.kind() != TermKind::Fun) return false;
  std::set<std::string> wanted = required_args(target, branch_fvs);
  const std::vector<Term>& args = t.args();
  if (args.size() != wanted.size()) return false;
  auto it = wanted.begin();
  for (const Term& a : args) {
    if (a.kind() != TermKind::Free || a.name() != *it) return false;
    ++it;
  }
  if (kind_ == SkolemKind::PreInner) {
    auto assoc = record.assoc.find(target);
    if (assoc != record.assoc.end()) return t.symbol() == assoc->second;
  }
  return !funcs.contains(t.symbol()) && !record.used.contains(t.symbol());
}

SkoRecord SkolemStrategy::add_symbol(const SkoRecord& record, const std::string& f,
                                     const Form& target) const {
  SkoRecord out = record;
  out.used.insert(f);
  if (kind_ == SkolemKind::PreInner) {
    auto [it, inserted] = out.assoc.emplace(target, f);
    if (!inserted && it->second != f)
      throw ConflictingAssoc(print_form(target) + " already maps to " + it->second);
  }
  return out;
}

WitnessResult check_requirement4(const SkolemStrategy& strategy, const FiniteModel& m,
                                 const Term& t, const Form& target, const FreeEnv& mu,
                                 const std::vector<Form>& preserved) {
  (void)strategy;
  if (target.kind() != FormKind::Neg || target.child().kind() != FormKind::All)
    return {false, std::nullopt, "target is not of shape Neg(All _)"};
  const Form& body = target.child().child();
  if (t.kind() != TermKind::Fun) return {false, std::nullopt, "term is not a Skolem candidate"};
  for (const Term& a : t.args())
    if (a.kind() != TermKind::Free)
      return {false, std::nullopt, "Skolem arguments must be free variables"};

  const std::string& symbol = t.symbol();
  std::size_t arity = t.args().size();
  std::size_t size = m.domain_size();

  // First-witness table: at each argument tuple, the first domain element
  // falsifying the body under the correspondingly shifted valuation, or 0
  // when the body holds everywhere.
  std::size_t length = 1;
  for (std::size_t i = 0; i < arity; ++i) length *= size;
  std::vector<std::size_t> table(length, 0);
  for (std::size_t row = 0; row < length; ++row) {
    FreeEnv shifted = mu;
    std::size_t rest = row;
    for (std::size_t i = arity; i-- > 0;) {
      shifted.set(t.args()[i].name(), rest % size);
      rest /= size;
    }
    for (std::size_t d = 0; d < size; ++d) {
      if (!interpret_form(m, {d}, shifted, body)) {
        table[row] = d;
        break;
      }
    }
  }
  FiniteModel replaced = m;
  replaced.set_fun(symbol, arity, std::move(table));

  for (const Form& g : preserved) {
    EnvEnumerator envs(fv(g), size);
    do {
      bool before, after;
      try {
        before = interpret_form(m, {}, envs.current(), g);
        after = interpret_form(replaced, {}, envs.current(), g);
      } catch (const MissingSymbol&) {
        return {false, std::nullopt,
                "preserved formula " + print_form(g) + " mentions an uninterpreted symbol"};
      }
      if (before && !after)
        return {false, std::nullopt,
                "replacement loses " + print_form(g) + " under " + envs.current().describe()};
    } while (envs.advance());
  }

  bool target_holds;
  try {
    target_holds = interpret_form(m, {}, mu, target);
  } catch (const MissingSymbol&) {
    return {false, std::nullopt, "target mentions an uninterpreted symbol"};
  }
  if (target_holds) {
    Form instantiated = Form::neg(open(body, 0, t));
    bool witness;
    try {
      witness = interpret_form(replaced, {}, mu, instantiated);
    } catch (const MissingSymbol&) {
      return {false, std::nullopt, "instantiated body mentions an uninterpreted symbol"};
    }
    if (!witness)
      return {false, std::nullopt,
              "replacement does not satisfy " + print_form(instantiated)};
  }
  return {true, std::move(replaced), ""};
}

}  // namespace tableaux
