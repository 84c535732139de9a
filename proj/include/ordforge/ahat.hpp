#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordforge/bignat.hpp"
#include "ordforge/budget.hpp"
#include "ordforge/orders.hpp"

namespace ordforge {

// ---------------------------------------------------------------------------
// Terms of the system Ahat(X): compositions of chi-operators over indices
// drawn from a linear order X, with term exponents.
//
// A term is either 0 or a composition chi_{x_{k-1}}^{s_{k-1}} o ... o
// chi_{x_0}^{s_0}(1). Pairs are stored innermost-first, i.e. pairs()[0] is
// (x_0, s_0), the pair applied first, which carries the largest index. The
// empty composition is the term "1".
//
// Terms over fin:b mirror Ackermann normal forms exactly; the same type
// doubles as the normal-form representation over the naturals.
// ---------------------------------------------------------------------------
class AhatTerm {
 public:
  using Pair = std::pair<Elem, AhatTerm>;

  static AhatTerm zero();
  static AhatTerm one();
  static AhatTerm comp(std::vector<Pair> pairs_innermost_first);

  bool is_zero() const { return zero_; }
  bool is_one() const { return !zero_ && pairs_.empty(); }
  const std::vector<Pair>& pairs() const;

  // number of constructors, the L-style size used by generators
  std::size_t node_count() const;

  bool operator==(const AhatTerm& o) const;
  bool operator!=(const AhatTerm& o) const { return !(*this == o); }

 private:
  bool zero_ = true;
  std::vector<Pair> pairs_;
};

// Checks both formation constraints: indices strictly decreasing outward and
// every exponent strictly below its inner prefix term.
bool ahat_valid(const OrderSpec& X, const AhatTerm& t);

// Linear order on valid terms: 0 first, compositions lexicographically as
// descending sequences over X x Ahat(X), proper prefix smaller.
Ordering ahat_compare(const OrderSpec& X, const AhatTerm& s, const AhatTerm& t);

// Functorial action: relabels indices and exponents along an embedding.
AhatTerm ahat_apply(const OrderEmbedding& f, const AhatTerm& t);

// Every index occurring anywhere in the term, sorted ascending in X.
std::vector<Elem> ahat_supp(const OrderSpec& X, const AhatTerm& t);

// Seeded generator of valid terms with at most size_cap nodes.
AhatTerm ahat_gen(const OrderSpec& X, std::size_t size_cap, std::uint64_t seed);

// The isomorphism with A(b): evaluate a term over fin:b as an F-composition
// (Overflow as nullopt), and read a number's Ackermann normal form back as a
// term. Implemented with the numeric Ackermann layer.
std::optional<BigNat> mu_iso(std::size_t b, const AhatTerm& t, const EvalBudget& budget);
AhatTerm mu_inv(std::size_t b, const BigNat& m);

// ASCII grammar: aterm := "0" | "1" | "A[" pair ("," pair)* "]",
// pair := "(" elem ";" aterm ")", pairs innermost-first.
std::string format_ahat(const AhatTerm& t);
AhatTerm parse_ahat(const std::string& text);

}  // namespace ordforge
