#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordforge/bignat.hpp"
#include "ordforge/budget.hpp"
#include "ordforge/dilator.hpp"

namespace ordforge {

// Exponent cap for binary images; coefficient changes can iterate
// exponentials, so results above this many bits are rejected.
inline constexpr std::size_t kBinaryExpCapBits = 1'000'000;

// Binary expansion with strictly descending exponents; empty for 0.
std::vector<std::size_t> bin_digits(const BigNat& m);

// 2(f): relabel the exponents of m < 2^b along f. Throws OutOfDomain when m
// is too big for the stated base, EvalOverflow above the exponent cap.
BigNat bin_apply(const FinMap& f, const BigNat& m, std::size_t exp_cap_bits = kBinaryExpCapBits);

// Exponent set of m < 2^b, ascending.
std::vector<std::size_t> bin_supp(std::size_t b, const BigNat& m);

// ---------------------------------------------------------------------------
// Hereditary base-b arithmetic for the classical Goodstein step. Digits carry
// coefficients 1 <= c < b; exponents recurse. Not a Goodstein dilator (bases
// below 2 have no hereditary representation); it lives beside the framework.
// ---------------------------------------------------------------------------
struct HerTree {
  struct Digit;
  std::vector<Digit> digits;  // exponents strictly descending

  bool is_zero() const;
  std::string str(const std::string& base_symbol) const;
};

struct HerTree::Digit {
  HerTree exponent;
  BigNat coeff;
};

HerTree her_rep(const BigNat& m, const BigNat& base);

// Re-reads the tree in base b'; throws EvalOverflow when the value would
// exceed the bit cap.
BigNat her_value(const HerTree& t, const BigNat& base,
                 std::size_t value_cap_bits = kBinaryExpCapBits);

// One classical Goodstein step: rebase m from b to b' hereditarily, minus 1.
BigNat classic_step(const BigNat& m, const BigNat& base, const BigNat& next_base,
                    std::size_t value_cap_bits = kBinaryExpCapBits);

// ---------------------------------------------------------------------------
// The binary Goodstein dilator.
// ---------------------------------------------------------------------------
class BinaryDilator final : public DilatorHandle {
 public:
  std::string name() const override { return "binary"; }
  Cardinality card(std::size_t b) const override;
  std::optional<BigNat> apply(const FinMap& f, const BigNat& sigma,
                              const EvalBudget& budget) const override;
  std::vector<std::size_t> supp(std::size_t b, const BigNat& sigma) const override;
  bool contains(std::size_t b, const BigNat& sigma) const override;
};

}  // namespace ordforge
