#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordforge {

// Precondition violations are exceptions; arithmetic overflow against an
// EvalBudget is an ordinary result (std::optional) and never throws.

struct InvalidElement : std::runtime_error {
  explicit InvalidElement(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidTerm : std::runtime_error {
  explicit InvalidTerm(const std::string& what) : std::runtime_error(what) {}
};

struct NotIncreasing : std::runtime_error {
  explicit NotIncreasing(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfDomain : std::runtime_error {
  explicit OutOfDomain(const std::string& what) : std::runtime_error(what) {}
};

struct BadBase : std::runtime_error {
  explicit BadBase(const std::string& what) : std::runtime_error(what) {}
};

struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

// A dilator callback produced values inconsistent with its own contract.
struct InternalInconsistency : std::runtime_error {
  explicit InternalInconsistency(const std::string& what) : std::runtime_error(what) {}
};

// Thrown where an exact answer is required but the budget makes it
// uncomputable (e.g. card(b) inside the support checker).
struct EvalOverflow : std::runtime_error {
  explicit EvalOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct SyntaxError : std::runtime_error {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace ordforge
