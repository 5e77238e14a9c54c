#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tableaux {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// -- semantics ---------------------------------------------------------------

struct MissingSymbol : Error {
  MissingSymbol(std::string sym, std::size_t arity_);
  std::string symbol;
  std::size_t arity;
};

struct DanglingIndex : Error {
  explicit DanglingIndex(std::size_t index_);
  std::size_t index;
};

struct InconsistentArity : Error {
  InconsistentArity(std::string sym, std::size_t first, std::size_t second);
  std::string symbol;
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(std::uint64_t spent);
};

// -- skolemization -----------------------------------------------------------

struct NotSkolemTerm : Error {
  NotSkolemTerm();
};

struct ConflictingAssoc : Error {
  explicit ConflictingAssoc(const std::string& detail);
};

// -- tableau -----------------------------------------------------------------

struct NotABranch : Error {
  NotABranch();
};

struct AlreadyExpanded : Error {
  AlreadyExpanded();
};

struct NotAPath : Error {
  NotAPath();
};

struct RuleNotApplicable : Error {
  explicit RuleNotApplicable(const std::string& reason);
};

// -- extended syntax ---------------------------------------------------------

struct LengthMismatch : Error {
  LengthMismatch(std::size_t lhs, std::size_t rhs);
};

// -- parsing -----------------------------------------------------------------

struct ParseError : Error {
  ParseError(std::size_t line_, std::size_t column_, const std::string& expected_);
  std::size_t line;
  std::size_t column;
  std::string expected;
};

struct UnsupportedFeature : Error {
  UnsupportedFeature(std::size_t line_, std::size_t column_, const std::string& feature_);
  std::size_t line;
  std::size_t column;
  std::string feature;
};

struct MultipleConjectures : Error {
  MultipleConjectures();
};

// -- prover ------------------------------------------------------------------

struct RejectedCertificate : Error {
  explicit RejectedCertificate(const std::string& detail);
};

struct ReservedSymbol : Error {
  explicit ReservedSymbol(const std::string& sym);
};

}  // namespace tableaux
