#include "tableaux/errors.hpp"

#include <string>

namespace tableaux {

namespace {

std::string at(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

MissingSymbol::MissingSymbol(std::string sym, std::size_t arity_)
    : Error("model has no interpretation for " + sym + "/" + std::to_string(arity_)),
      symbol(std::move(sym)),
      arity(arity_) {}

DanglingIndex::DanglingIndex(std::size_t index_)
    : Error("bound variable index " + std::to_string(index_) + " has no binder"),
      index(index_) {}

InconsistentArity::InconsistentArity(std::string sym, std::size_t first, std::size_t second)
    : Error("symbol " + sym + " used with arities " + std::to_string(first) + " and " +
            std::to_string(second)),
      symbol(std::move(sym)) {}

BudgetExceeded::BudgetExceeded(std::uint64_t spent)
    : Error("enumeration budget exceeded after " + std::to_string(spent) + " nodes") {}

NotSkolemTerm::NotSkolemTerm() : Error("term is not a function application") {}

ConflictingAssoc::ConflictingAssoc(const std::string& detail)
    : Error("conflicting Skolem association: " + detail) {}

NotABranch::NotABranch() : Error("path does not denote a branch of the tableau") {}

AlreadyExpanded::AlreadyExpanded() : Error("branch endpoint already has children") {}

NotAPath::NotAPath() : Error("path does not address a node of the tableau") {}

RuleNotApplicable::RuleNotApplicable(const std::string& reason)
    : Error("rule not applicable: " + reason) {}

LengthMismatch::LengthMismatch(std::size_t lhs, std::size_t rhs)
    : Error("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

ParseError::ParseError(std::size_t line_, std::size_t column_, const std::string& expected_)
    : Error("parse error at " + at(line_, column_) + ": expected " + expected_),
      line(line_),
      column(column_),
      expected(expected_) {}

UnsupportedFeature::UnsupportedFeature(std::size_t line_, std::size_t column_,
                                       const std::string& feature_)
    : Error("unsupported input at " + at(line_, column_) + ": " + feature_),
      line(line_),
      column(column_),
      feature(feature_) {}

MultipleConjectures::MultipleConjectures() : Error("problem contains more than one conjecture") {}

RejectedCertificate::RejectedCertificate(const std::string& detail)
    : Error("certificate rejected: " + detail) {}

ReservedSymbol::ReservedSymbol(const std::string& sym)
    : Error("input uses reserved symbol " + sym) {}

}  // namespace tableaux
