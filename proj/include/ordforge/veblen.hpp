#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordforge/bignat.hpp"
#include "ordforge/orders.hpp"

namespace ordforge {

// ---------------------------------------------------------------------------
// The notation system phi_{1+X}0: zero, principal terms phi_x(s) with an
// index from 1+X, and sums of >= 2 weakly decreasing principal terms.
// Formation requires h(s) <= x for phi_x(s), where h(0) = h(sum) = bottom
// and h(phi_x s) = x; this is what excludes superfluous fixed-point terms.
// ---------------------------------------------------------------------------
class VebTerm {
 public:
  enum class Kind { Zero, Phi, Sum };

  static VebTerm zero();
  static VebTerm phi(Elem index, VebTerm arg);
  // Flattens nested sums; a single principal stays principal.
  static VebTerm sum(std::vector<VebTerm> summands);
  // No normalization; lets tests exercise the validity rejections.
  static VebTerm sum_unchecked(std::vector<VebTerm> summands);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }

  const Elem& index() const;               // Phi
  const VebTerm& arg() const;              // Phi
  const std::vector<VebTerm>& summands() const;  // Sum

  std::size_t node_count() const;

  bool operator==(const VebTerm& o) const;
  bool operator!=(const VebTerm& o) const { return !(*this == o); }

 private:
  Kind kind_ = Kind::Zero;
  Elem index_ = Elem::of(0);
  std::vector<VebTerm> kids_;
};

// h : phi_{1+X}0 -> 1+X.
Elem veb_h(const VebTerm& t);

bool veb_valid(const OrderSpec& X, const VebTerm& t);

// The recursive order from the Veblen fixed-point equivalence plus
// lexicographic sums and additive principality.
Ordering veb_compare(const OrderSpec& X, const VebTerm& s, const VebTerm& t);

// Ordinal addition on terms: absorbs the prefix of the left summand list
// that drops below the right-hand leading term.
VebTerm veb_add(const OrderSpec& X, const VebTerm& s, const VebTerm& t);

// Seeded generator of valid terms; at most size_cap nodes.
VebTerm veb_gen(const OrderSpec& X, std::size_t size_cap, std::uint64_t seed);

// ASCII grammar: vterm := "0" | vprin ("+" vprin)*, vprin := "p[" int "](" vterm ")".
std::string format_veblen(const VebTerm& t);
VebTerm parse_veblen(const std::string& text);

}  // namespace ordforge
