#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordforge/bignat.hpp"
#include "ordforge/budget.hpp"
#include "ordforge/orders.hpp"

namespace ordforge {

struct Cardinality {
  enum class Kind { Finite, AllNaturals, Overflow };
  Kind kind = Kind::Finite;
  BigNat bound;  // meaningful for Finite only

  static Cardinality finite(BigNat b) { return {Kind::Finite, std::move(b)}; }
  static Cardinality all_naturals() { return {Kind::AllNaturals, 0}; }
  static Cardinality overflow() { return {Kind::Overflow, 0}; }
};

// ---------------------------------------------------------------------------
// Behavioral interface for Goodstein dilators. Elements of D(b) are numbers;
// the order is numeric. apply must be strictly increasing and functorial,
// supp natural with the range criterion. Values of apply that exceed the
// budget come back as nullopt (Overflow).
//
// Implementations must be safe for concurrent read-only use; internal memo
// caches synchronize themselves.
// ---------------------------------------------------------------------------
class DilatorHandle {
 public:
  virtual ~DilatorHandle() = default;

  virtual std::string name() const = 0;
  virtual Cardinality card(std::size_t b) const = 0;
  virtual std::optional<BigNat> apply(const FinMap& f, const BigNat& sigma,
                                      const EvalBudget& budget) const = 0;
  virtual std::vector<std::size_t> supp(std::size_t b, const BigNat& sigma) const = 0;

  // Membership sigma in D(b). Default decides via card and throws
  // EvalOverflow when the cardinality itself is unevaluable.
  virtual bool contains(std::size_t b, const BigNat& sigma) const;
};

// Finds sigma in D(m) with apply(e, sigma) = target via galloping + binary
// search (sound because apply is strictly increasing); nullopt when target
// has no preimage.
std::optional<BigNat> invert_apply(const DilatorHandle& D, const FinMap& e, const BigNat& target,
                                   const EvalBudget& budget);

// ---------------------------------------------------------------------------
// Support-criterion checker and the brute-force support oracle.
// ---------------------------------------------------------------------------

struct SupportCheckResult {
  bool pass = true;
  std::size_t cases = 0;
  // failing instance, when any
  std::optional<FinMap> witness_map;
  std::optional<BigNat> witness_sigma;
  std::string detail;
};

// Samples morphisms f: m -> n with m, n <= max_b and elements sigma, and
// checks (1) naturality of supp and (2) the range criterion
// supp_n(sigma) subseteq rng(f)  =>  sigma in rng(apply(f, .)).
SupportCheckResult check_support_criterion(const DilatorHandle& D, std::size_t max_b,
                                           std::size_t samples, std::uint64_t seed,
                                           const EvalBudget& budget = {});

// Minimal support by exhaustion over all strictly increasing e: m -> n in
// order of cardinality; independent of the declared supp.
std::vector<std::size_t> brute_min_support(const DilatorHandle& D, std::size_t n,
                                           const BigNat& sigma, const EvalBudget& budget = {});

// ---------------------------------------------------------------------------
// The extension Dbar(X): full-support pairs over finite suborders of X.
// ---------------------------------------------------------------------------

struct BarElement {
  std::vector<Elem> support;  // sorted ascending in the ambient order
  BigNat sigma;

  bool operator==(const BarElement& o) const {
    return support == o.support && sigma == o.sigma;
  }
  std::string str() const;
};

BarElement make_bar_element(const OrderSpec& X, std::vector<Elem> support, BigNat sigma);

bool bar_member(const DilatorHandle& D, const OrderSpec& X, const BarElement& el);

Ordering bar_compare(const DilatorHandle& D, const OrderSpec& X, const BarElement& p,
                     const BarElement& q, const EvalBudget& budget = {});

BarElement bar_apply(const DilatorHandle& D, const OrderEmbedding& f, const BarElement& el);

// eta_n : Dbar(n) -> D(n) and its inverse mu_n.
BigNat eta(const DilatorHandle& D, std::size_t n, const BarElement& el,
           const EvalBudget& budget = {});
BarElement mu(const DilatorHandle& D, std::size_t n, const BigNat& tau,
              const EvalBudget& budget = {});

// All of Dbar(fin:n) for small n, ascending by bar_compare; test utility.
std::vector<BarElement> enumerate_bar(const DilatorHandle& D, std::size_t n,
                                      const EvalBudget& budget = {});

}  // namespace ordforge
