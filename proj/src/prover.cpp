#include "tableaux/prover.hpp"

#include <pthread.h>

#include <exception>
#include <functional>
#include <utility>

#include "tableaux/errors.hpp"

namespace tableaux {

namespace {

// The search recursion nests one frame per live expansion and every frame
// owns branch-sized state, so alive memory grows with the square of the
// depth. The cutoff turns pathological attempts into backtracking; genuine
// proofs at desk scale stay far below it.
constexpr std::size_t kMaxSearchDepth = 2'000;
constexpr std::size_t kSearchStackBytes = 64u * 1024 * 1024;

bool reserved(const std::string& name) {
  return name.starts_with("_sk") || name.starts_with("_G");
}

// Triangular variable bindings shared across every branch of one search,
// undone through the trail on backtracking. Variables only ever bind to
// locally closed terms, so resolved bindings are valid substitution values.
class Bindings {
 public:
  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      map_.erase(trail_.back());
      trail_.pop_back();
    }
  }

  Term walk(Term t) const {
    while (t.kind() == TermKind::Free) {
      auto it = map_.find(t.name());
      if (it == map_.end()) break;
      t = it->second;
    }
    return t;
  }

  bool occurs(const std::string& name, const Term& t) const {
    Term w = walk(t);
    switch (w.kind()) {
      case TermKind::Free:
        return w.name() == name;
      case TermKind::Fun:
        for (const Term& arg : w.args())
          if (occurs(name, arg)) return true;
        return false;
      case TermKind::Bound:
        return false;
    }
    return false;
  }

  bool bind(const std::string& name, const Term& value) {
    if (!is_locally_closed(value)) return false;
    if (occurs(name, value)) return false;
    map_.emplace(name, value);
    trail_.push_back(name);
    return true;
  }

  bool unify_terms(const Term& a, const Term& b) {
    Term x = walk(a);
    Term y = walk(b);
    if (x.kind() == TermKind::Free && y.kind() == TermKind::Free && x.name() == y.name())
      return true;
    if (x.kind() == TermKind::Free) return bind(x.name(), y);
    if (y.kind() == TermKind::Free) return bind(y.name(), x);
    if (x.kind() != y.kind()) return false;
    if (x.kind() == TermKind::Bound) return x.index() == y.index();
    if (x.symbol() != y.symbol() || x.args().size() != y.args().size()) return false;
    for (std::size_t i = 0; i < x.args().size(); ++i)
      if (!unify_terms(x.args()[i], y.args()[i])) return false;
    return true;
  }

  bool unify_forms(const Form& f, const Form& g) {
    if (f.kind() != g.kind()) return false;
    switch (f.kind()) {
      case FormKind::Bot:
        return true;
      case FormKind::Pred: {
        if (f.symbol() != g.symbol() || f.args().size() != g.args().size()) return false;
        for (std::size_t i = 0; i < f.args().size(); ++i)
          if (!unify_terms(f.args()[i], g.args()[i])) return false;
        return true;
      }
      case FormKind::Neg:
      case FormKind::All:
        return unify_forms(f.child(), g.child());
      case FormKind::Or:
        return unify_forms(f.left(), g.left()) && unify_forms(f.right(), g.right());
    }
    return false;
  }

  Term resolve(const Term& t) const {
    Term w = walk(t);
    if (w.kind() != TermKind::Fun) return w;
    std::vector<Term> args;
    args.reserve(w.args().size());
    for (const Term& arg : w.args()) args.push_back(resolve(arg));
    return Term::fun(w.symbol(), std::move(args));
  }

  const std::map<std::string, Term>& raw() const { return map_; }

 private:
  std::map<std::string, Term> map_;
  std::vector<std::string> trail_;
};

// Branch formulas are held through shared pointers so that copying a branch
// copies pointer vectors, not formula trees; one frame per live expansion
// times deep trees is what blows the heap otherwise.
using FormPtr = std::shared_ptr<const Form>;

struct QItem {
  FormPtr form;
  std::size_t gamma_used = 0;
};

// One open branch: all formulas in checker context order, plus the queue of
// formulas not yet processed. Copied down the recursion, so backtracking
// never has to repair it.
struct BranchState {
  std::vector<FormPtr> all;
  std::vector<QItem> queue;

  void add(Form f) {
    FormPtr p = std::make_shared<const Form>(std::move(f));
    queue.push_back({p, 0});
    all.push_back(std::move(p));
  }
};

// Rule priority: closing and deterministic rules first, branching next,
// then plain literals so their closures are tried before any instantiation
// grows the branch, and gamma last.
int priority(const Form& f) {
  switch (f.kind()) {
    case FormKind::Bot:
      return 0;
    case FormKind::Neg: {
      const Form& g = f.child();
      if (g.kind() == FormKind::Neg || g.kind() == FormKind::Or) return 1;
      if (g.kind() == FormKind::All) return 2;
      return 4;
    }
    case FormKind::Or:
      return 3;
    case FormKind::All:
      return 5;
    case FormKind::Pred:
      return 4;
  }
  return 5;
}

struct BudgetOut {};

// Backtracking search over one gamma limit. The continuation closes the
// remaining branches under the bindings accumulated so far; following it
// before committing to a closure is what makes rigid variables work across
// branches. A solve call that returns false leaves bindings and record
// exactly as it found them.
class Search {
 public:
  Search(SkolemKind kind, std::size_t gamma_limit, std::uint64_t& nodes_left)
      : strategy_(kind), gamma_limit_(gamma_limit), nodes_(nodes_left) {}

  std::optional<Certificate> run(const std::vector<Form>& context) {
    BranchState root;
    for (const Form& f : context) root.add(f);
    RuleTree tree = RuleTree::leaf();
    if (!solve(std::move(root), &tree, [] { return true; })) return std::nullopt;
    Certificate cert;
    cert.context = context;
    for (const auto& [name, value] : bindings_.raw())
      cert.sigma.bind(name, bindings_.resolve(value));
    cert.strategy = strategy_.kind();
    cert.tree = std::move(tree);
    return cert;
  }

 private:
  using Cont = std::function<bool()>;

  std::string fresh_var() { return "_G" + std::to_string(var_counter_++); }
  std::string fresh_skolem() { return "_sk" + std::to_string(sko_counter_++); }

  struct DepthGuard {
    std::size_t& depth;
    explicit DepthGuard(std::size_t& d) : depth(d) { ++depth; }
    ~DepthGuard() { --depth; }
  };

  bool solve(BranchState st, RuleTree* out, const Cont& k) {
    if (nodes_ == 0) throw BudgetOut{};
    --nodes_;
    if (depth_ >= kMaxSearchDepth) return false;
    DepthGuard guard(depth_);
    if (st.queue.empty()) return false;

    std::size_t best = 0;
    int best_pri = 6;
    for (std::size_t i = 0; i < st.queue.size(); ++i) {
      int p = priority(*st.queue[i].form);
      if (p < best_pri) {
        best_pri = p;
        best = i;
        if (p == 0) break;
      }
    }
    QItem item = std::move(st.queue[best]);
    st.queue.erase(st.queue.begin() + best);
    const Form& f = *item.form;

    if (f.kind() == FormKind::Bot) {
      *out = RuleTree::leaf();
      return k();
    }

    // Close this branch against any formula already on it.
    for (const FormPtr& gp : st.all) {
      const Form& g = *gp;
      if (f.kind() == FormKind::Neg) {
        std::size_t m = bindings_.mark();
        if (bindings_.unify_forms(f.child(), g)) {
          *out = RuleTree::leaf(g, f);
          if (k()) return true;
        }
        bindings_.undo(m);
      }
      if (g.kind() == FormKind::Neg) {
        std::size_t m = bindings_.mark();
        if (bindings_.unify_forms(g.child(), f)) {
          *out = RuleTree::leaf(f, g);
          if (k()) return true;
        }
        bindings_.undo(m);
      }
    }

    switch (f.kind()) {
      case FormKind::Neg: {
        const Form& g = f.child();
        if (g.kind() == FormKind::Neg) {
          BranchState st2 = st;
          st2.add(g.child());
          RuleTree sub = RuleTree::leaf();
          if (solve(std::move(st2), &sub, k)) {
            *out = RuleTree::node(Rule::alpha_neg_neg(f), std::move(sub), RuleTree::leaf());
            return true;
          }
          return false;
        }
        if (g.kind() == FormKind::Or) {
          BranchState st2 = st;
          st2.add(Form::neg(g.left()));
          st2.add(Form::neg(g.right()));
          RuleTree sub = RuleTree::leaf();
          if (solve(std::move(st2), &sub, k)) {
            *out = RuleTree::node(Rule::alpha_neg_or(f), std::move(sub), RuleTree::leaf());
            return true;
          }
          return false;
        }
        if (g.kind() == FormKind::All) {
          std::string sym;
          if (strategy_.kind() == SkolemKind::PreInner) {
            auto it = record_.assoc.find(f);
            if (it != record_.assoc.end()) sym = it->second;
          }
          if (sym.empty()) sym = fresh_skolem();
          std::set<std::string> branch_vars;
          for (const FormPtr& bp : st.all)
            for (const std::string& v : fv(*bp)) branch_vars.insert(v);
          std::vector<Term> args;
          for (const std::string& v : strategy_.required_args(f, branch_vars))
            args.push_back(Term::free(v));
          Term t = Term::fun(sym, std::move(args));
          SkoRecord saved = record_;
          record_ = strategy_.add_symbol(record_, sym, f);
          BranchState st2 = st;
          st2.add(Form::neg(open(g.child(), 0, t)));
          RuleTree sub = RuleTree::leaf();
          if (solve(std::move(st2), &sub, k)) {
            *out = RuleTree::node(Rule::delta_neg_all(f, std::move(t)), std::move(sub),
                                  RuleTree::leaf());
            return true;
          }
          record_ = std::move(saved);
          return false;
        }
        // Negated literal: nothing to expand.
        return solve(std::move(st), out, k);
      }
      case FormKind::Or: {
        BranchState left = st;
        BranchState right = std::move(st);
        left.add(f.left());
        right.add(f.right());
        RuleTree lt = RuleTree::leaf();
        RuleTree rt = RuleTree::leaf();
        Cont close_right = [this, &right, &rt, &k] { return solve(right, &rt, k); };
        if (solve(std::move(left), &lt, close_right)) {
          *out = RuleTree::node(Rule::beta_or(f), std::move(lt), std::move(rt));
          return true;
        }
        return false;
      }
      case FormKind::All: {
        std::string var = fresh_var();
        BranchState st2 = std::move(st);
        st2.add(open(f.child(), 0, Term::free(var)));
        if (item.gamma_used + 1 < gamma_limit_)
          st2.queue.push_back({item.form, item.gamma_used + 1});
        RuleTree sub = RuleTree::leaf();
        if (solve(std::move(st2), &sub, k)) {
          *out = RuleTree::node(Rule::gamma_all(f, std::move(var)), std::move(sub),
                                RuleTree::leaf());
          return true;
        }
        return false;
      }
      case FormKind::Pred:
        return solve(std::move(st), out, k);
      case FormKind::Bot:
        return false;
    }
    return false;
  }

  SkolemStrategy strategy_;
  std::size_t gamma_limit_;
  std::uint64_t& nodes_;
  Bindings bindings_;
  SkoRecord record_;
  std::size_t var_counter_ = 0;
  std::size_t sko_counter_ = 0;
  std::size_t depth_ = 0;
};

struct ProveJob {
  const std::vector<Form>* context = nullptr;
  const SearchConfig* config = nullptr;
  std::optional<Certificate> result;
  std::exception_ptr error;
};

void* prove_worker(void* raw) {
  ProveJob* job = static_cast<ProveJob*>(raw);
  try {
    std::uint64_t nodes_left = job->config->budget;
    for (std::size_t limit = 1; limit <= job->config->gamma_limit; ++limit) {
      Search search(job->config->strategy, limit, nodes_left);
      try {
        if (auto cert = search.run(*job->context)) {
          job->result = std::move(cert);
          return nullptr;
        }
      } catch (const BudgetOut&) {
        return nullptr;
      }
    }
  } catch (...) {
    job->error = std::current_exception();
  }
  return nullptr;
}

void tally(const RuleTree& tree, ProofStats& out) {
  if (tree.is_leaf()) {
    ++out.branches;
    return;
  }
  const Rule& rule = tree.rule();
  ++out.rule_counts[rule_name(rule.kind)];
  if (rule.kind == Rule::Kind::GammaAll) ++out.gamma_instantiations;
  tally(tree.left(), out);
  if (!is_unary(rule.kind)) tally(tree.right(), out);
}

}  // namespace

std::optional<Certificate> prove(const std::vector<Form>& context, const SearchConfig& config) {
  for (const std::string& s : function_symbols(context))
    if (reserved(s)) throw ReservedSymbol(s);
  for (const std::string& s : fv(context))
    if (reserved(s)) throw ReservedSymbol(s);
  for (const Form& f : context)
    if (!is_locally_closed(f)) throw Error("context formulas must be locally closed");

  // The deepening loop runs on its own thread so the search recursion gets a
  // stack sized for kMaxSearchDepth frames.
  ProveJob job;
  job.context = &context;
  job.config = &config;
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, kSearchStackBytes);
  pthread_t worker;
  int rc = pthread_create(&worker, &attr, prove_worker, &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    prove_worker(&job);
  } else {
    pthread_join(worker, nullptr);
  }
  if (job.error) std::rethrow_exception(job.error);
  return std::move(job.result);
}

ProofStats stats(const Certificate& cert) {
  CheckOutcome outcome = check_proof(cert);
  if (!outcome.status) throw RejectedCertificate(format_diagnostics(outcome));
  ProofStats out;
  tally(cert.tree, out);
  return out;
}

std::optional<Substitution> unify(const Term& a, const Term& b) {
  Bindings bindings;
  if (!bindings.unify_terms(a, b)) return std::nullopt;
  Substitution sigma;
  for (const auto& [name, value] : bindings.raw()) sigma.bind(name, bindings.resolve(value));
  return sigma;
}

}  // namespace tableaux
