// tabcheck: command line front end for the tableau toolkit.
//
// Exit codes, uniform across subcommands: 0 for a positive outcome, 1 for a
// negative one (rejected certificate, countermodel found, prover gave up),
// 2 for unusable input (unreadable file, parse error, unsupported feature,
// blown oracle budget).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tableaux/certificate_io.hpp"
#include "tableaux/checker.hpp"
#include "tableaux/errors.hpp"
#include "tableaux/prover.hpp"
#include "tableaux/semantics.hpp"
#include "tableaux/skolem.hpp"
#include "tableaux/syntax_io.hpp"
#include "tableaux/tptp.hpp"

namespace {

using namespace tableaux;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

int run_check(const std::string& path, const std::string& skolem) {
  Certificate cert = parse_certificate(read_file(path));
  if (!skolem.empty()) cert.strategy = *skolem_kind_from_string(skolem);
  CheckOutcome outcome;
  try {
    outcome = check_proof(cert);
  } catch (const Error& e) {
    // A structurally broken certificate that parsed is still a rejection.
    std::cerr << e.what() << "\n";
    std::cout << "rejected\n";
    return 1;
  }
  if (outcome.status) {
    std::cout << "accepted\n";
    return 0;
  }
  std::cerr << format_diagnostics(outcome);
  std::cout << "rejected\n";
  return 1;
}

int run_validate_model(const std::string& path, std::size_t max_size, std::uint64_t budget) {
  Form f = parse_form(read_file(path));
  ValidityVerdict verdict = is_valid_upto(f, max_size, budget);
  if (verdict.valid) {
    std::cout << "valid up to size " << max_size << "\n";
    return 0;
  }
  std::cout << "countermodel\n"
            << verdict.model->describe() << verdict.env->describe();
  return 1;
}

int run_parse(const std::string& path, bool dump) {
  TptpProblem problem = parse_tptp(read_file(path));
  if (dump)
    std::cout << print_tptp(problem);
  else
    std::cout << "parsed " << problem.units.size() << " units\n";
  return 0;
}

int run_gen_phi(std::size_t n, const std::string& out) {
  write_output(out, print_tptp(gen_phi_problem(n)));
  return 0;
}

int run_prove(const std::string& path, const std::string& skolem, std::size_t gamma_limit,
              std::uint64_t budget, const std::string& out) {
  TptpProblem problem = parse_tptp(read_file(path));
  SearchConfig config;
  config.strategy = *skolem_kind_from_string(skolem);
  config.gamma_limit = gamma_limit;
  config.budget = budget;
  std::optional<Certificate> cert = prove(assemble_context(problem), config);
  if (!cert) {
    std::cerr << "gave up\n";
    return 1;
  }
  write_output(out, print_certificate(*cert));
  return 0;
}

int run_stats(const std::string& path) {
  Certificate cert = parse_certificate(read_file(path));
  ProofStats s;
  try {
    s = stats(cert);
  } catch (const RejectedCertificate& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  std::cout << "branches " << s.branches << "\n"
            << "gamma-instantiations " << s.gamma_instantiations << "\n";
  for (const auto& [name, count] : s.rule_counts) std::cout << "rule " << name << " " << count << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"first-order tableau certificates: check, search, validate"};
  app.require_subcommand(1);
  auto skolem_values = CLI::IsMember({"outer", "inner", "preinner"});

  std::string check_path, check_skolem;
  CLI::App* check = app.add_subcommand("check", "check a proof certificate");
  check->add_option("certificate", check_path, "certificate file")->required();
  check->add_option("--skolem", check_skolem, "override the certificate's strategy")
      ->check(skolem_values);

  std::string vm_path;
  std::size_t vm_max_size = 3;
  std::uint64_t vm_budget = kDefaultNodeBudget;
  CLI::App* vm = app.add_subcommand("validate-model", "search small models for a countermodel");
  vm->add_option("formula", vm_path, "formula file, canonical s-expression")->required();
  vm->add_option("--max-size", vm_max_size, "largest domain size to try");
  vm->add_option("--budget", vm_budget, "evaluation budget");

  std::string parse_path;
  bool parse_dump = false;
  CLI::App* parse = app.add_subcommand("parse", "parse a TPTP problem");
  parse->add_option("problem", parse_path, "TPTP file")->required();
  parse->add_flag("--dump", parse_dump, "reprint the problem in canonical form");

  std::size_t phi_n = 1;
  std::string phi_out;
  CLI::App* phi = app.add_subcommand("gen-phi", "emit the n-th benchmark problem");
  phi->add_option("n", phi_n, "family index, at least 1")->required();
  phi->add_option("-o,--output", phi_out, "output file (default stdout)");

  std::string prove_path, prove_skolem = "inner", prove_out;
  std::size_t prove_gamma = 8;
  std::uint64_t prove_budget = 1'000'000;
  CLI::App* prover = app.add_subcommand("prove", "search for a refutation certificate");
  prover->add_option("problem", prove_path, "TPTP file")->required();
  prover->add_option("--skolem", prove_skolem, "skolemization strategy")->check(skolem_values);
  prover->add_option("--gamma-limit", prove_gamma, "instantiation limit per formula per branch");
  prover->add_option("--budget", prove_budget, "search node budget");
  prover->add_option("-o,--output", prove_out, "certificate output file (default stdout)");

  std::string stats_path;
  CLI::App* st = app.add_subcommand("stats", "re-check a certificate and report its shape");
  st->add_option("certificate", stats_path, "certificate file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return run_check(check_path, check_skolem);
    if (*vm) return run_validate_model(vm_path, vm_max_size, vm_budget);
    if (*parse) return run_parse(parse_path, parse_dump);
    if (*phi) return run_gen_phi(phi_n, phi_out);
    if (*prover) return run_prove(prove_path, prove_skolem, prove_gamma, prove_budget, prove_out);
    if (*st) return run_stats(stats_path);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
