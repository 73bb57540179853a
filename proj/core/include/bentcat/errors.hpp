#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bentcat {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that requires a bent function received one that is not.
class NotBent : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be invertible over GF(2) is singular.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A subspace search hit its node limit. An exhausted budget is never
/// reported as a negative answer.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t nodes, std::uint64_t budget)
      : Error("search budget exceeded after " + std::to_string(nodes) +
              " nodes (budget " + std::to_string(budget) + ")"),
        nodes_(nodes),
        budget_(budget) {}

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t nodes_;
  std::uint64_t budget_;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A construction received inputs that violate its hypotheses
/// (non-permutation, overlapping images, no unique subspace, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied premise of a structural theorem does not hold.
class PremiseViolated : public Error {
 public:
  PremiseViolated(std::string premise, const std::string& detail)
      : Error("premise violated (" + premise + "): " + detail),
        premise_(std::move(premise)) {}

  const std::string& premise() const noexcept { return premise_; }

 private:
  std::string premise_;
};

/// A structural verdict disagreed with the direct search it was checked
/// against.
class VerdictMismatch : public Error {
 public:
  using Error::Error;
};

/// A randomized search ran out of samples without success.
class SearchExhausted : public Error {
 public:
  SearchExhausted(const std::string& what, std::uint64_t sampled)
      : Error(what + " (" + std::to_string(sampled) + " samples)"),
        sampled_(sampled) {}

  std::uint64_t sampled() const noexcept { return sampled_; }

 private:
  std::uint64_t sampled_;
};

}  // namespace bentcat
