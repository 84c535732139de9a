#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "ordforge/ahat.hpp"
#include "ordforge/bignat.hpp"
#include "ordforge/budget.hpp"
#include "ordforge/dilator.hpp"

namespace ordforge {

// F_0(n) = n+1, F_{b+1}(n) = F_b^{1+n}(n). Exact value within the budget,
// nullopt (Overflow) when the true value exceeds it. Successful evaluations
// are memoized process-wide.
std::optional<BigNat> fgh_eval(std::size_t b, const BigNat& n, const EvalBudget& budget = {});

// F_b^k(n); same overflow contract.
std::optional<BigNat> fgh_iter(std::size_t b, const BigNat& k, const BigNat& n,
                               const EvalBudget& budget = {});

// Greedy Ackermann normal form: repeatedly applies the largest possible
// F_{b}^{1+n} block. The result is an Ahat term over the naturals with
// integer indices, pairs innermost-first (largest index first).
AhatTerm ack_nf(const BigNat& m);

// Evaluates a normal-form term inner-to-outer; inverse of ack_nf in budget.
std::optional<BigNat> ack_eval(const AhatTerm& t, const EvalBudget& budget = {});

// A(f): relabel indices along f, map exponents recursively, re-evaluate.
// Throws OutOfDomain when m is not in A(domain(f)).
std::optional<BigNat> ack_apply(const FinMap& f, const BigNat& m, const EvalBudget& budget = {});

// Indices of the normal form plus recursive supports of the exponents.
std::vector<std::size_t> ack_supp(std::size_t b, const BigNat& m);

// Membership m in A(b) = {0, ..., F_b(1)-1}, decided on the normal form
// (top index below b), so it works even where F_b(1) is unevaluable.
bool ack_contains(std::size_t b, const BigNat& m);

class AckermannDilator final : public DilatorHandle {
 public:
  explicit AckermannDilator(EvalBudget default_budget = {}) : budget_(default_budget) {}

  std::string name() const override { return "ackermann"; }
  Cardinality card(std::size_t b) const override;
  std::optional<BigNat> apply(const FinMap& f, const BigNat& sigma,
                              const EvalBudget& budget) const override;
  std::vector<std::size_t> supp(std::size_t b, const BigNat& sigma) const override;
  bool contains(std::size_t b, const BigNat& sigma) const override;

 private:
  EvalBudget budget_;
  // exact values only; keyed by (map image, argument)
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<std::vector<std::size_t>, BigNat>, BigNat> memo_;
};

}  // namespace ordforge
