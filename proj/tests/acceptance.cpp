// Acceptance gate for the toolkit. Runs seven end-to-end criteria and prints
// exactly one PASS/FAIL line per criterion; exits 0 only when all pass.
// argv[1] names the tabcheck binary, exercised by the format criterion.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "gen.hpp"
#include "tableaux/certificate_io.hpp"
#include "tableaux/checker.hpp"
#include "tableaux/errors.hpp"
#include "tableaux/extended.hpp"
#include "tableaux/prover.hpp"
#include "tableaux/semantics.hpp"
#include "tableaux/skolem.hpp"
#include "tableaux/syntax_io.hpp"
#include "tableaux/tableau.hpp"
#include "tableaux/tptp.hpp"

namespace {

using namespace tableaux;
using tableaux::testgen::Rng;
using tableaux::testgen::chance;
using tableaux::testgen::pick;
using tableaux::testgen::random_env;
using tableaux::testgen::random_eform;
using tableaux::testgen::random_form;
using tableaux::testgen::random_model;
using tableaux::testgen::random_subst;

// Pinned tolerances and sample sizes.
constexpr std::size_t kCorpusTarget = 200;        // certificates in the soundness corpus
constexpr std::size_t kValidityBound = 3;         // domain sizes searched for countermodels
constexpr std::size_t kRequirementTrials = 1000;  // admissibility candidates per strategy
constexpr std::size_t kWitnessTrials = 100;       // replacement-model checks per strategy
constexpr std::size_t kCommutationTrials = 1000;  // instances per semantics property
constexpr std::size_t kPhiMax = 6;                // largest benchmark family index
constexpr double kProveSecondsLimit = 60.0;       // prover time limit per family member
constexpr double kCheckRatioLimit = 4.0;          // growth cap for check time, n >= 3
constexpr std::size_t kMutationCerts = 50;        // certificates mutated per class
constexpr std::size_t kRoundTripTrials = 200;     // random problems round-tripped

const SkolemKind kKinds[3] = {SkolemKind::Outer, SkolemKind::Inner, SkolemKind::PreInner};

// Restricted signature for generated problems: predicates p/1 r/0, function
// symbols c/0 f/1, so the model spaces behind the validity oracle stay small.
Term small_term(Rng& rng, std::size_t depth, std::size_t binders) {
  if (depth == 0 || chance(rng, 0.45)) {
    if (binders > 0 && chance(rng, 0.4)) return Term::bound(pick(rng, binders));
    return Term::fun("c");
  }
  return Term::fun("f", {small_term(rng, depth - 1, binders)});
}

Form small_atom(Rng& rng, std::size_t binders, bool allow_bot,
                const std::vector<std::string>& vars) {
  if (allow_bot && chance(rng, 0.2)) return Form::bot();
  if (!vars.empty() && chance(rng, 0.4)) return Form::pred("p", {Term::free(vars[pick(rng, vars.size())])});
  if (chance(rng, 0.25)) return Form::pred("r");
  return Form::pred("p", {small_term(rng, 2, binders)});
}

Form small_form(Rng& rng, std::size_t depth, std::size_t binders, bool allow_bot,
                const std::vector<std::string>& vars = {}) {
  if (depth == 0 || chance(rng, 0.3)) return small_atom(rng, binders, allow_bot, vars);
  switch (pick(rng, 3)) {
    case 0:
      return Form::neg(small_form(rng, depth - 1, binders, allow_bot, vars));
    case 1:
      return Form::disj(small_form(rng, depth - 1, binders, allow_bot, vars),
                        small_form(rng, depth - 1, binders, allow_bot, vars));
    default:
      return Form::all(small_form(rng, depth - 1, binders + 1, allow_bot, vars));
  }
}

// Mixed stream of unsatisfiable (and occasionally just random) closed
// problems; the prover filters out anything it cannot refute.
std::vector<Form> corpus_problem(Rng& rng, std::size_t mode) {
  switch (mode % 5) {
    case 0: {
      std::vector<Form> ctx;
      std::size_t n = 1 + pick(rng, 2);
      for (std::size_t i = 0; i < n; ++i) ctx.push_back(small_form(rng, 2 + pick(rng, 4), 0, true));
      return ctx;
    }
    case 1: {
      Form f = small_form(rng, 1 + pick(rng, 3), 0, true);
      return {Form::neg(Form::disj(f, Form::neg(f)))};
    }
    case 2: {
      Form body = small_form(rng, 1 + pick(rng, 2), 1, true);
      return {Form::all(body), Form::neg(open(body, 0, small_term(rng, 2, 0)))};
    }
    case 3: {
      Form a = small_form(rng, 1 + pick(rng, 2), 0, true);
      Form b = small_form(rng, 1 + pick(rng, 2), 0, true);
      return {Form::disj(a, b), Form::neg(a), Form::neg(b)};
    }
    default: {
      Form body = small_form(rng, 1 + pick(rng, 2), 1, false);
      return {Form::neg(Form::all(body)), Form::all(Form::neg(Form::neg(body)))};
    }
  }
}

std::vector<Certificate> build_corpus(Rng& rng, std::size_t want, std::string& note) {
  std::vector<Certificate> corpus;
  std::size_t attempts = 0;
  while (corpus.size() < want && attempts < want * 60) {
    std::vector<Form> ctx = corpus_problem(rng, attempts);
    SearchConfig config;
    config.strategy = kKinds[attempts % 3];
    config.gamma_limit = 4;
    config.budget = 50'000;
    ++attempts;
    std::optional<Certificate> cert = prove(ctx, config);
    if (!cert) continue;
    if (!check_proof(*cert).status) {
      note = "prover emitted a certificate its own checker rejects";
      return {};
    }
    corpus.push_back(std::move(*cert));
  }
  return corpus;
}

// Tree surgery for the mutation criterion. Each rewrites the first matching
// node and fails when the tree has none.
std::optional<RuleTree> drop_first_closure(const RuleTree& t) {
  if (t.is_leaf()) {
    if (t.closure().has_value()) return RuleTree::leaf();
    return std::nullopt;
  }
  if (auto left = drop_first_closure(t.left()))
    return RuleTree::node(t.rule(), std::move(*left), t.right());
  if (auto right = drop_first_closure(t.right()))
    return RuleTree::node(t.rule(), t.left(), std::move(*right));
  return std::nullopt;
}

std::optional<RuleTree> retarget_first_rule(const RuleTree& t) {
  if (t.is_leaf()) return std::nullopt;
  Rule rule = t.rule();
  rule.target = Form::pred("never_on_any_branch");
  return RuleTree::node(std::move(rule), t.left(), t.right());
}

std::optional<RuleTree> perturb_first_delta(const RuleTree& t) {
  if (t.is_leaf()) return std::nullopt;
  if (t.rule().kind == Rule::Kind::DeltaNegAll) {
    Rule rule = t.rule();
    std::vector<Term> args = skolem_args(*rule.term);
    args.push_back(Term::free("Wmutant"));
    rule.term = Term::fun(skolem_symbol(*rule.term), std::move(args));
    return RuleTree::node(std::move(rule), t.left(), t.right());
  }
  if (auto left = perturb_first_delta(t.left()))
    return RuleTree::node(t.rule(), std::move(*left), t.right());
  if (auto right = perturb_first_delta(t.right()))
    return RuleTree::node(t.rule(), t.left(), std::move(*right));
  return std::nullopt;
}

bool tree_has_delta(const RuleTree& t) {
  if (t.is_leaf()) return false;
  return t.rule().kind == Rule::Kind::DeltaNegAll || tree_has_delta(t.left()) ||
         tree_has_delta(t.right());
}

bool tree_has_closure(const RuleTree& t) {
  if (t.is_leaf()) return t.closure().has_value();
  return tree_has_closure(t.left()) || tree_has_closure(t.right());
}

// Branch context at the first closure leaf, growing the root context the way
// each rule does. Dropping a closure pair only damages a certificate when
// that branch cannot also close trivially.
std::optional<std::vector<Form>> first_closure_context(const RuleTree& t,
                                                       std::vector<Form> gamma) {
  if (t.is_leaf()) {
    if (t.closure().has_value()) return gamma;
    return std::nullopt;
  }
  const Rule& rule = t.rule();
  std::vector<Form> left = gamma;
  std::vector<Form> right = gamma;
  switch (rule.kind) {
    case Rule::Kind::AlphaNegNeg:
      left.push_back(rule.target.child().child());
      break;
    case Rule::Kind::AlphaNegOr:
      left.push_back(Form::neg(rule.target.child().left()));
      left.push_back(Form::neg(rule.target.child().right()));
      break;
    case Rule::Kind::BetaOr:
      left.push_back(rule.target.left());
      right.push_back(rule.target.right());
      break;
    case Rule::Kind::GammaAll:
      left.push_back(open(rule.target.child(), 0, Term::free(rule.var)));
      break;
    case Rule::Kind::DeltaNegAll:
      left.push_back(Form::neg(open(rule.target.child().child(), 0, *rule.term)));
      break;
  }
  if (auto found = first_closure_context(t.left(), std::move(left))) return found;
  return first_closure_context(t.right(), std::move(right));
}

bool has_trivial_contradiction(const std::vector<Form>& gamma) {
  std::set<Form> set(gamma.begin(), gamma.end());
  for (const Form& f : set) {
    if (f.kind() == FormKind::Bot) return true;
    if (f.kind() == FormKind::Neg && set.count(f.child())) return true;
  }
  return false;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

CriterionResult criterion1_soundness(const std::vector<Certificate>& corpus,
                                     const std::string& corpus_note) {
  if (corpus.size() < kCorpusTarget) {
    std::string why = corpus_note.empty() ? "corpus too small" : corpus_note;
    return {false, why + ": " + std::to_string(corpus.size()) + "/" +
                       std::to_string(kCorpusTarget) + " certificates"};
  }
  std::size_t countermodels = 0;
  for (const Certificate& cert : corpus) {
    ValidityVerdict verdict = valid_under_upto(cert.context, Form::bot(), kValidityBound);
    if (!verdict.valid) ++countermodels;
  }
  std::ostringstream detail;
  detail << corpus.size() << " certificates, " << countermodels
         << " countermodels at domain bound " << kValidityBound;
  return {countermodels == 0, detail.str()};
}

CriterionResult criterion2_sequence_agreement(const std::vector<Certificate>& corpus) {
  if (corpus.empty()) return {false, "no corpus"};
  std::size_t failures = 0;
  for (const Certificate& cert : corpus) {
    SkolemStrategy strategy(cert.strategy);
    Tableau start = initial_tableau(cert.context);
    auto seq = ruletree_to_sequence(strategy, {}, start, cert.tree);
    bool ok = seq.has_value() && !seq->empty() && equal_tableaux(seq->front(), start) &&
              check_expansion_sequence(strategy, cert.context, cert.sigma, *seq).ok &&
              is_tableau_closed(seq->back(), cert.sigma) &&
              check_proof(cert).symbs == seq->back().symbols;
    if (!ok) ++failures;
  }
  std::ostringstream detail;
  detail << corpus.size() << " certificates replayed, " << failures << " disagreements";
  return {failures == 0, detail.str()};
}

CriterionResult criterion3_skolem_requirements(Rng& rng) {
  std::ostringstream detail;
  bool pass = true;
  for (SkolemKind kind : kKinds) {
    SkolemStrategy strategy(kind);
    std::size_t admitted = 0, failures = 0;
    for (std::size_t i = 0; i < kRequirementTrials; ++i) {
      std::vector<std::string> vars;
      if (chance(rng, 0.6)) vars = {"X"};
      if (chance(rng, 0.3)) vars.push_back("Y");
      Form target = Form::neg(Form::all(small_form(rng, 2, 1, true, vars)));
      std::set<std::string> branch_fvs = fv(target);
      if (chance(rng, 0.5)) branch_fvs.insert("Z");
      SkoRecord record;
      if (chance(rng, 0.4)) record.used.insert("h");
      if (kind == SkolemKind::PreInner && chance(rng, 0.3))
        record = strategy.add_symbol(record, "h", target);
      std::set<std::string> funcs = function_symbols(target);
      if (chance(rng, 0.3)) funcs.insert("w1");

      Term t = Term::fun("c");
      if (chance(rng, 0.5)) {
        // A candidate built to be admissible, modulo the pre-inner pin.
        std::vector<Term> args;
        for (const std::string& v : strategy.required_args(target, branch_fvs))
          args.push_back(Term::free(v));
        std::string symbol = record.assoc.count(target) ? record.assoc.at(target) : "w0";
        t = Term::fun(symbol, std::move(args));
      } else {
        t = small_term(rng, 2, 0);
      }

      if (!strategy.is_sko(t, target, record, branch_fvs, funcs)) continue;
      ++admitted;
      // Requirement 1: an admissible term decomposes as symbol plus arguments.
      if (t.kind() != TermKind::Fun || Term::fun(skolem_symbol(t), skolem_args(t)) != t)
        ++failures;
      // Requirement 2: every argument is a free variable.
      for (const Term& arg : skolem_args(t))
        if (arg.kind() != TermKind::Free) ++failures;
      // Requirement 3: admissibility is antitone in the avoided symbol set.
      std::set<std::string> fewer;
      for (const std::string& s : funcs)
        if (chance(rng, 0.5)) fewer.insert(s);
      if (!strategy.is_sko(t, target, record, branch_fvs, fewer) ||
          !strategy.is_sko(t, target, record, branch_fvs, {}))
        ++failures;
    }
    if (admitted < kRequirementTrials / 10 || failures > 0) pass = false;
    detail << to_string(kind) << " " << admitted << " admitted/" << failures << " failures; ";
  }

  std::size_t witness_failures = 0;
  for (SkolemKind kind : kKinds) {
    SkolemStrategy strategy(kind);
    for (std::size_t i = 0; i < kWitnessTrials; ++i) {
      Form target = Form::neg(Form::all(small_form(rng, 3, 1, true, {"X", "Y"})));
      std::vector<Form> preserved;
      std::size_t extra = pick(rng, 3);
      for (std::size_t j = 0; j < extra; ++j)
        preserved.push_back(small_form(rng, 3, 0, true, {"X", "Y"}));
      preserved.push_back(target);

      Signature sig = signature_of(preserved);
      std::set<std::string> branch = fv(preserved);
      std::vector<Term> args;
      for (const std::string& v : strategy.required_args(target, branch))
        args.push_back(Term::free(v));
      Term sk = Term::fun("w", args);
      sig.funcs.emplace("w", args.size());

      std::size_t size = 1 + pick(rng, kValidityBound);
      FiniteModel m = random_model(rng, sig, size);
      FreeEnv mu = random_env(rng, branch, size);
      if (!check_requirement4(strategy, m, sk, target, mu, preserved).ok) ++witness_failures;
    }
  }
  detail << "witness checks " << 3 * kWitnessTrials - witness_failures << "/"
         << 3 * kWitnessTrials;
  return {pass && witness_failures == 0, detail.str()};
}

CriterionResult criterion4_commutation(Rng& rng) {
  std::size_t open_failures = 0, subst_failures = 0, translate_failures = 0;
  const std::vector<std::string> vars{"X", "Y"};

  for (std::size_t i = 0; i < kCommutationTrials; ++i) {
    // Opening against the innermost bound-variable environment entry.
    Form f = random_form(rng, 3, 1, vars);
    Signature sig = signature_of(f);
    std::size_t size = 1 + pick(rng, kValidityBound);
    FiniteModel m = random_model(rng, sig, size);
    FreeEnv env = random_env(rng, fv(f), size);
    std::size_t a = pick(rng, size);
    Form opened = open(f, 0, Term::free("Q"));
    FreeEnv extended = env;
    extended.set("Q", a);
    if (interpret_form(m, {a}, env, f) != interpret_form(m, {}, extended, opened))
      ++open_failures;
  }

  for (std::size_t i = 0; i < kCommutationTrials; ++i) {
    // Substitution against evaluation of the replaced terms.
    Form f = random_form(rng, 3, 0, {"X", "Y", "Z"});
    Substitution sigma = random_subst(rng, {"X", "Y", "Z"}, {"U", "V"});
    Form g = subst(f, sigma);
    Signature sig = merge_signatures(signature_of(f), signature_of(g));
    std::size_t size = 1 + pick(rng, kValidityBound);
    FiniteModel m = random_model(rng, sig, size);
    std::set<std::string> names = fv(f);
    names.merge(fv(g));
    FreeEnv env = random_env(rng, names, size);
    FreeEnv composed = env;
    for (const std::string& v : fv(f)) {
      const Term* image = sigma.find(v);
      if (image) composed.set(v, interpret_term(m, {}, env, *image));
    }
    if (interpret_form(m, {}, env, g) != interpret_form(m, {}, composed, f)) ++subst_failures;
  }

  for (std::size_t i = 0; i < kCommutationTrials; ++i) {
    // Extended-syntax interpretation against the minimal translation.
    EForm ef = random_eform(rng, 3, {"X"});
    Form tf = translate_eform(ef);
    Signature sig = signature_of(tf);
    std::size_t size = 1 + pick(rng, kValidityBound);
    FiniteModel m = random_model(rng, sig, size);
    FreeEnv env = random_env(rng, fv(tf), size);
    if (interpret_eform(m, env, ef) != interpret_form(m, {}, env, tf)) ++translate_failures;
  }

  std::ostringstream detail;
  detail << kCommutationTrials << " instances per property; failures: opening "
         << open_failures << ", substitution " << subst_failures << ", translation "
         << translate_failures;
  return {open_failures + subst_failures + translate_failures == 0, detail.str()};
}

CriterionResult criterion5_benchmark_scaling() {
  std::ostringstream detail;
  std::vector<double> check_ms(kPhiMax + 1, 0.0);
  std::vector<std::size_t> inner_branches(kPhiMax + 1, 0);

  for (std::size_t n = 1; n <= kPhiMax; ++n) {
    std::vector<Form> ctx = assemble_context(gen_phi_problem(n));

    auto start = std::chrono::steady_clock::now();
    std::optional<Certificate> cert = prove(ctx);
    double prove_s = seconds_since(start);
    if (!cert) return {false, "prover gave up at n=" + std::to_string(n)};
    if (prove_s >= kProveSecondsLimit)
      return {false, "prover needed " + std::to_string(prove_s) + "s at n=" + std::to_string(n)};
    if (!check_proof(*cert).status)
      return {false, "certificate rejected at n=" + std::to_string(n)};
    inner_branches[n] = stats(*cert).branches;

    // Check time averaged over enough repetitions to drown scheduler noise.
    std::size_t reps = 0;
    start = std::chrono::steady_clock::now();
    do {
      CheckOutcome outcome = check_proof(*cert);
      if (!outcome.status) return {false, "flaky check at n=" + std::to_string(n)};
      ++reps;
    } while (seconds_since(start) < 0.2);
    check_ms[n] = seconds_since(start) * 1000.0 / static_cast<double>(reps);

    SearchConfig outer;
    outer.strategy = SkolemKind::Outer;
    outer.gamma_limit = 3;
    outer.budget = 200'000;
    std::optional<Certificate> outer_cert = prove(ctx, outer);
    if (outer_cert && check_proof(*outer_cert).status) {
      std::size_t outer_branches = stats(*outer_cert).branches;
      if (inner_branches[n] > outer_branches)
        return {false, "inner used more branches than outer at n=" + std::to_string(n)};
    }
  }

  double worst = 0.0;
  for (std::size_t n = 3; n <= kPhiMax; ++n) {
    if (check_ms[n - 1] <= 0.0) continue;
    double ratio = check_ms[n] / check_ms[n - 1];
    if (ratio > worst) worst = ratio;
    if (ratio > kCheckRatioLimit) {
      std::ostringstream bad;
      bad << "check time ratio " << ratio << " at n=" << n << " exceeds " << kCheckRatioLimit;
      return {false, bad.str()};
    }
  }
  detail << "n=1.." << kPhiMax << " proved and checked; worst check-time ratio " << worst
         << " (cap " << kCheckRatioLimit << ")";
  return {true, detail.str()};
}

CriterionResult criterion6_mutations(Rng& rng) {
  std::vector<Certificate> certs;
  std::size_t attempts = 0;
  while (certs.size() < kMutationCerts && attempts < kMutationCerts * 20) {
    // Delta-and-gamma problems whose branches close only through the
    // substitution, so every mutation class applies.
    Form body = small_form(rng, 1 + pick(rng, 2), 1, false);
    std::vector<Form> ctx{Form::neg(Form::all(body)), Form::all(Form::neg(Form::neg(body)))};
    SearchConfig config;
    config.strategy = kKinds[attempts % 3];
    config.gamma_limit = 4;
    config.budget = 100'000;
    ++attempts;
    std::optional<Certificate> cert = prove(ctx, config);
    if (!cert || !check_proof(*cert).status) continue;
    if (!tree_has_delta(cert->tree) || !tree_has_closure(cert->tree)) continue;
    auto closure_ctx = first_closure_context(cert->tree, cert->context);
    if (!closure_ctx || has_trivial_contradiction(*closure_ctx)) continue;
    certs.push_back(std::move(*cert));
  }
  if (certs.size() < kMutationCerts)
    return {false, "only " + std::to_string(certs.size()) + " mutable certificates"};

  std::size_t accepted_mutants = 0, silent_rejections = 0, unnamed_rejections = 0;
  auto expect_rejection = [&](Certificate cert, const RuleTree& mutated,
                              const std::string& must_mention) {
    cert.tree = mutated;
    CheckOutcome outcome = check_proof(cert);
    if (outcome.status) {
      ++accepted_mutants;
      return;
    }
    if (outcome.messages.empty()) {
      ++silent_rejections;
      return;
    }
    if (outcome.messages.front().find(must_mention) == std::string::npos) ++unnamed_rejections;
  };

  for (const Certificate& cert : certs) {
    auto dropped = drop_first_closure(cert.tree);
    auto retargeted = retarget_first_rule(cert.tree);
    auto perturbed = perturb_first_delta(cert.tree);
    if (!dropped || !retargeted || !perturbed)
      return {false, "mutation did not apply to a corpus certificate"};
    expect_rejection(cert, *dropped, "leaf at");
    expect_rejection(cert, *retargeted, rule_name(cert.tree.rule().kind));
    expect_rejection(cert, *perturbed, "delta-neg-all");
  }

  std::ostringstream detail;
  detail << certs.size() << " certificates, 3 mutation classes; accepted mutants "
         << accepted_mutants << ", silent rejections " << silent_rejections
         << ", diagnostics missing the rule " << unnamed_rejections;
  return {accepted_mutants + silent_rejections + unnamed_rejections == 0, detail.str()};
}

int run_cli(const std::string& tabcheck, const std::string& args) {
  std::string command = "\"" + tabcheck + "\" " + args + " >/dev/null 2>/dev/null";
  int raw = std::system(command.c_str());
  if (raw == -1) return -1;
  if (WIFEXITED(raw)) return WEXITSTATUS(raw);
  return -1;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

CriterionResult criterion7_formats(Rng& rng, const std::vector<Certificate>& corpus,
                                   const std::string& tabcheck) {
  if (corpus.empty()) return {false, "no corpus"};
  std::size_t cert_failures = 0;
  for (const Certificate& cert : corpus)
    if (parse_certificate(print_certificate(cert)) != cert) ++cert_failures;

  std::size_t tptp_failures = 0;
  for (std::size_t i = 0; i < kRoundTripTrials; ++i) {
    TptpProblem problem;
    std::size_t units = 1 + pick(rng, 3);
    for (std::size_t u = 0; u < units; ++u) {
      std::string name =
          u % 2 == 0 ? "unit" + std::to_string(u) : "odd name " + std::to_string(u);
      problem.units.push_back(
          TptpUnit{name, u == 0 ? TptpRole::Axiom : TptpRole::Plain, random_eform(rng, 4, {"X"})});
    }
    if (parse_tptp(print_tptp(problem)) != problem) ++tptp_failures;
  }
  for (std::size_t n = 1; n <= kPhiMax; ++n)
    if (parse_tptp(print_tptp(gen_phi_problem(n))) != gen_phi_problem(n)) ++tptp_failures;

  if (tabcheck.empty()) return {false, "no tabcheck binary supplied"};
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "tabcheck-acceptance";
  fs::create_directories(dir);

  // A certificate that checks, one that must be rejected, and assorted inputs.
  write_file(dir / "good.cert", print_certificate(corpus.front()));
  Certificate bad;
  bad.context = {Form::pred("p", {Term::fun("c")})};
  write_file(dir / "bad.cert", print_certificate(bad));
  write_file(dir / "broken.cert", "(certificate (strategy inner)");
  write_file(dir / "taut.form", print_form(Form::disj(Form::pred("p", {Term::fun("c")}),
                                                      Form::neg(Form::pred("p", {Term::fun("c")})))));
  write_file(dir / "sat.form", print_form(Form::pred("p", {Term::fun("c")})));
  write_file(dir / "good.p", "fof(a1, axiom, p(c) => p(c)).\n");
  write_file(dir / "cnf.p", "cnf(a1, axiom, p(c)).\n");
  write_file(dir / "sat.p", "fof(a1, axiom, p(c)).\n");
  std::string phi_file = (dir / "phi2.p").string();
  std::string proved_file = (dir / "phi2.cert").string();

  struct CliCase {
    std::string args;
    int expected;
  };
  std::vector<CliCase> cases{
      {"check \"" + (dir / "good.cert").string() + "\"", 0},
      {"check \"" + (dir / "bad.cert").string() + "\"", 1},
      {"check \"" + (dir / "broken.cert").string() + "\"", 2},
      {"check \"" + (dir / "no-such-file.cert").string() + "\"", 2},
      {"validate-model \"" + (dir / "taut.form").string() + "\"", 0},
      {"validate-model \"" + (dir / "sat.form").string() + "\"", 1},
      {"validate-model \"" + (dir / "broken.cert").string() + "\"", 2},
      {"parse \"" + (dir / "good.p").string() + "\"", 0},
      {"parse \"" + (dir / "cnf.p").string() + "\"", 2},
      {"gen-phi 2 -o \"" + phi_file + "\"", 0},
      {"gen-phi 0", 2},
      {"prove \"" + phi_file + "\" -o \"" + proved_file + "\"", 0},
      {"prove \"" + (dir / "sat.p").string() + "\"", 1},
      {"check \"" + proved_file + "\"", 0},
      {"stats \"" + proved_file + "\"", 0},
      {"stats \"" + (dir / "bad.cert").string() + "\"", 1},
      {"stats \"" + (dir / "broken.cert").string() + "\"", 2},
  };
  std::size_t cli_failures = 0;
  std::string first_cli_failure;
  for (const CliCase& c : cases) {
    int got = run_cli(tabcheck, c.args);
    if (got != c.expected) {
      ++cli_failures;
      if (first_cli_failure.empty())
        first_cli_failure = c.args + " -> " + std::to_string(got) + " (wanted " +
                            std::to_string(c.expected) + ")";
    }
  }

  std::ostringstream detail;
  detail << "certificate round trips " << corpus.size() - cert_failures << "/" << corpus.size()
         << ", problem round trips " << kRoundTripTrials + kPhiMax - tptp_failures << "/"
         << kRoundTripTrials + kPhiMax << ", CLI cases " << cases.size() - cli_failures << "/"
         << cases.size();
  if (!first_cli_failure.empty()) detail << "; first CLI mismatch: " << first_cli_failure;
  return {cert_failures + tptp_failures + cli_failures == 0, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::string tabcheck = argc > 1 ? argv[1] : "";
  Rng rng(20260818);

  std::string corpus_note;
  std::vector<Certificate> corpus;
  try {
    corpus = build_corpus(rng, kCorpusTarget, corpus_note);
  } catch (const std::exception& e) {
    corpus_note = e.what();
  }

  bool all_pass = true;
  auto run = [&all_pass](const char* label, auto&& fn) {
    CriterionResult result;
    try {
      result = fn();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && result.pass;
    std::cout << "criterion " << label << ": " << (result.pass ? "PASS" : "FAIL") << " ("
              << result.detail << ")" << std::endl;
  };

  run("1 prover soundness against finite models",
      [&] { return criterion1_soundness(corpus, corpus_note); });
  run("2 checker agrees with the expansion calculus",
      [&] { return criterion2_sequence_agreement(corpus); });
  run("3 skolemization requirements", [&] { return criterion3_skolem_requirements(rng); });
  run("4 semantics commutation and translation", [&] { return criterion4_commutation(rng); });
  run("5 benchmark family scaling", [] { return criterion5_benchmark_scaling(); });
  run("6 mutation rejection", [&] { return criterion6_mutations(rng); });
  run("7 format round trips and CLI contract",
      [&] { return criterion7_formats(rng, corpus, tabcheck); });

  return all_pass ? 0 : 1;
}
