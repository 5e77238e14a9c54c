#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tableaux/checker.hpp"
#include "tableaux/skolem.hpp"
#include "tableaux/syntax.hpp"

namespace tableaux {

// Search knobs. gamma_limit bounds how many times one universal formula may
// be instantiated on a single branch; the search deepens that bound one step
// at a time, so small proofs are found at small limits. budget bounds the
// total number of search nodes across all deepening rounds.
struct SearchConfig {
  SkolemKind strategy = SkolemKind::Inner;
  std::size_t gamma_limit = 8;
  std::uint64_t budget = 1'000'000;
};

// Searches for a closed tableau refuting the context and packages it as a
// certificate the checker accepts. Returns nullopt when the budget or the
// gamma limit runs out. Free variables introduced during the search are
// named _G0, _G1, ... and Skolem symbols _sk0, _sk1, ...; contexts already
// mentioning either prefix are rejected with ReservedSymbol.
std::optional<Certificate> prove(const std::vector<Form>& context,
                                 const SearchConfig& config = {});

// Certificate shape statistics: closed branches, rule applications by name,
// and gamma instantiations. Re-checks the certificate first and throws
// RejectedCertificate when the checker says no.
struct ProofStats {
  std::size_t branches = 0;
  std::map<std::string, std::size_t> rule_counts;
  std::size_t gamma_instantiations = 0;

  bool operator==(const ProofStats&) const = default;
};

ProofStats stats(const Certificate& cert);

// First-order unification on terms. The result maps variable names to
// locally closed terms and is fully resolved: one application makes the two
// sides equal.
std::optional<Substitution> unify(const Term& a, const Term& b);

}  // namespace tableaux
