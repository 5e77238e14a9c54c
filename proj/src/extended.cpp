#include "tableaux/extended.hpp"

#include "tableaux/errors.hpp"

namespace tableaux {

Term translate_eterm(const std::vector<std::string>& bvs, const ETerm& t) {
  if (t.kind() == ETermKind::Var) {
    for (std::size_t i = 0; i < bvs.size(); ++i)
      if (bvs[i] == t.name()) return Term::bound(i);
    return Term::free(t.name());
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const ETerm& a : t.args()) args.push_back(translate_eterm(bvs, a));
  return Term::fun(t.symbol(), std::move(args));
}

Form translate_eform_aux(const std::vector<std::string>& bvs, const EForm& f) {
  switch (f.kind()) {
    case EFormKind::Bot:
      return Form::bot();
    case EFormKind::Top:
      return Form::neg(Form::bot());
    case EFormKind::Pred: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const ETerm& a : f.args()) args.push_back(translate_eterm(bvs, a));
      return Form::pred(f.symbol(), std::move(args));
    }
    case EFormKind::Neg:
      return Form::neg(translate_eform_aux(bvs, f.child()));
    case EFormKind::And:
      return conj(translate_eform_aux(bvs, f.left()), translate_eform_aux(bvs, f.right()));
    case EFormKind::Or:
      return Form::disj(translate_eform_aux(bvs, f.left()), translate_eform_aux(bvs, f.right()));
    case EFormKind::Imp:
      return impl(translate_eform_aux(bvs, f.left()), translate_eform_aux(bvs, f.right()));
    case EFormKind::Iff:
      return translate_eform_aux(
          bvs, EForm::conj(EForm::imp(f.left(), f.right()), EForm::imp(f.right(), f.left())));
    case EFormKind::All:
    case EFormKind::Ex: {
      std::vector<std::string> inner;
      inner.reserve(bvs.size() + 1);
      inner.push_back(f.var());
      inner.insert(inner.end(), bvs.begin(), bvs.end());
      Form body = translate_eform_aux(inner, f.body());
      if (f.kind() == EFormKind::All) return Form::all(std::move(body));
      return Form::neg(Form::all(Form::neg(std::move(body))));
    }
  }
  throw Error("unreachable extended form kind");
}

Form translate_eform(const EForm& f) { return translate_eform_aux({}, f); }

std::size_t interpret_eterm(const FiniteModel& m, const FreeEnv& env, const ETerm& t) {
  if (t.kind() == ETermKind::Var) return env.lookup(t.name());
  std::vector<std::size_t> args;
  args.reserve(t.args().size());
  for (const ETerm& a : t.args()) args.push_back(interpret_eterm(m, env, a));
  return m.apply_fun(t.symbol(), args);
}

bool interpret_eform(const FiniteModel& m, const FreeEnv& env, const EForm& f) {
  switch (f.kind()) {
    case EFormKind::Bot:
      return false;
    case EFormKind::Top:
      return true;
    case EFormKind::Pred: {
      std::vector<std::size_t> args;
      args.reserve(f.args().size());
      for (const ETerm& a : f.args()) args.push_back(interpret_eterm(m, env, a));
      return m.apply_pred(f.symbol(), args);
    }
    case EFormKind::Neg:
      return !interpret_eform(m, env, f.child());
    case EFormKind::And:
      return interpret_eform(m, env, f.left()) && interpret_eform(m, env, f.right());
    case EFormKind::Or:
      return interpret_eform(m, env, f.left()) || interpret_eform(m, env, f.right());
    case EFormKind::Imp:
      return !interpret_eform(m, env, f.left()) || interpret_eform(m, env, f.right());
    case EFormKind::Iff:
      return interpret_eform(m, env, f.left()) == interpret_eform(m, env, f.right());
    case EFormKind::All: {
      for (std::size_t d = 0; d < m.domain_size(); ++d) {
        FreeEnv inner = env;
        inner.set(f.var(), d);
        if (!interpret_eform(m, inner, f.body())) return false;
      }
      return true;
    }
    case EFormKind::Ex: {
      for (std::size_t d = 0; d < m.domain_size(); ++d) {
        FreeEnv inner = env;
        inner.set(f.var(), d);
        if (interpret_eform(m, inner, f.body())) return true;
      }
      return false;
    }
  }
  throw Error("unreachable extended form kind");
}

FreeEnv extended_env(const std::vector<std::string>& bvs, const BoundEnv& rho,
                     const FreeEnv& sigma) {
  if (bvs.size() != rho.size()) throw LengthMismatch(bvs.size(), rho.size());
  FreeEnv out = sigma;
  // Outermost first, so the innermost occurrence of a repeated name wins.
  for (std::size_t i = bvs.size(); i-- > 0;) out.set(bvs[i], rho[i]);
  return out;
}

}  // namespace tableaux
