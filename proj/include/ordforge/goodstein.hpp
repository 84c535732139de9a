#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordforge/bignat.hpp"
#include "ordforge/budget.hpp"
#include "ordforge/dilator.hpp"
#include "ordforge/orders.hpp"

namespace ordforge {

// ---------------------------------------------------------------------------
// Goodstein systems: a non-decreasing base sequence b with b(0) > 0 plus a
// family of strictly increasing coefficient maps c_i : b(i) -> b(i+1).
// ---------------------------------------------------------------------------

struct BaseSpec {
  enum class Kind { Constant, Affine, Table };
  Kind kind = Kind::Constant;
  std::size_t value = 0;               // Constant
  std::size_t init = 0, slope = 0;     // Affine: b(i) = init + slope * i
  std::vector<std::size_t> prefix;     // Table: explicit prefix ...
  std::size_t tail = 0;                // ... then constant tail

  static BaseSpec constant(std::size_t v);
  static BaseSpec affine(std::size_t init, std::size_t slope);
  static BaseSpec table(std::vector<std::size_t> prefix, std::size_t tail);

  std::size_t at(std::size_t i) const;
};

struct CoeffSpec {
  enum class Kind { Identity, Shift, Table, FromOrder };
  Kind kind = Kind::Identity;
  std::size_t amount = 0;        // Shift
  std::vector<FinMap> maps;      // Table prefix; identity afterwards
  // FromOrder: accumulated-support construction over an ambient order
  OrderSpec order;
  std::vector<std::vector<Elem>> sets;
  std::optional<Elem> star;

  static CoeffSpec identity();
  static CoeffSpec shift(std::size_t amount);
  static CoeffSpec table(std::vector<FinMap> maps);
  static CoeffSpec from_order(OrderSpec order, std::vector<std::vector<Elem>> sets, Elem star);
};

struct GoodsteinSystem {
  BaseSpec base;
  CoeffSpec coeff;

  std::size_t base_at(std::size_t i) const;
  // c_i : b(i) -> b(i+1)
  FinMap coeff_at(std::size_t i) const;
  // c_{ij} = c_{j-1} o ... o c_i
  FinMap coeff_between(std::size_t i, std::size_t j) const;
};

struct ValidationResult {
  bool ok = true;
  std::string reason;
};

// Shape invariants up to the horizon; the well-foundedness side of the
// definition is a Pi^1_1 condition and is never decided here.
ValidationResult validate_system(const GoodsteinSystem& sys, std::size_t horizon);

// ---------------------------------------------------------------------------
// Direct limits of the base orders along the coefficient maps.
// Carrier: (0, n) for n < b(0), plus (i+1, n) for n in b(i+1) \ rng(c_i).
// ---------------------------------------------------------------------------
class DirectLimitOrder final : public LimitCarrier,
                               public std::enable_shared_from_this<DirectLimitOrder> {
 public:
  static std::shared_ptr<const DirectLimitOrder> build(const GoodsteinSystem& sys,
                                                       std::size_t depth);

  std::size_t depth() const { return bases_.size() - 1; }
  std::size_t base_at(std::size_t i) const { return bases_.at(i); }

  bool valid(const Elem& e) const override;
  Ordering compare(const Elem& a, const Elem& b) const override;
  std::vector<Elem> carrier() const override;
  std::string describe() const override;

  // e_j : b(j) -> X, sending n to the earliest-stage representative.
  Elem embed(std::size_t j, std::size_t n) const;
  OrderEmbedding embedding(std::size_t j) const;

  OrderSpec as_order() const;

 private:
  std::vector<std::size_t> bases_;  // b(0..depth)
  std::vector<FinMap> coeffs_;      // c_0 .. c_{depth-1}

  std::size_t push_to(std::size_t i, std::size_t n, std::size_t k) const;
};

OrderSpec direct_limit(const GoodsteinSystem& sys, std::size_t depth);

// Strictly descending chains across strictly increasing stages: finite
// evidence against the Goodstein-system condition.
std::optional<std::vector<Elem>> descend_search(const GoodsteinSystem& sys, std::size_t depth,
                                                std::size_t length);

// ---------------------------------------------------------------------------
// Sequence runners
// ---------------------------------------------------------------------------

struct TraceStep {
  std::size_t i = 0;
  std::size_t base = 0;
  BigNat value;
};

struct RunTrace {
  enum class Status { Terminated, Budget, Overflow };
  std::vector<TraceStep> steps;
  Status status = Status::Budget;
  std::size_t at = 0;  // Terminated / Overflow position
};

// One step: 0 sticks at 0, otherwise D(c_i)(v) - 1.
std::optional<BigNat> step(const DilatorHandle& D, const GoodsteinSystem& sys, std::size_t i,
                           const BigNat& v, const EvalBudget& budget);

RunTrace run(const DilatorHandle& D, const GoodsteinSystem& sys, const BigNat& m,
             std::size_t max_steps, const EvalBudget& budget);

// g(i) = Dbar(e_i)(mu_{b(i)}(value_i)) over the direct limit at the trace's
// depth; strictly descending while values stay nonzero.
std::vector<BarElement> witness_map(const DilatorHandle& D, const GoodsteinSystem& sys,
                                    const RunTrace& trace, const EvalBudget& budget = {});

// The accumulated-support system of a sequence of finite subsets of X:
// b(i) = |{star} u a_0 u ... u a_i| with the induced inclusions.
GoodsteinSystem system_from_order(const OrderSpec& X, const std::vector<std::vector<Elem>>& sets,
                                  const Elem& star);

// Classical hereditary-base Goodstein run.
RunTrace classic_run(const BaseSpec& base, const BigNat& m, std::size_t max_steps,
                     std::size_t value_cap_bits);

// ---------------------------------------------------------------------------
// Canonical JSON formats (system files and trace output).
// ---------------------------------------------------------------------------
GoodsteinSystem system_from_json(const std::string& text);
std::string system_to_json(const GoodsteinSystem& sys);
std::string trace_to_json(const RunTrace& trace);

}  // namespace ordforge
