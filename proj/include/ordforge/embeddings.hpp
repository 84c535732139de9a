#pragma once

#include <cstddef>
#include <vector>

#include "ordforge/ahat.hpp"
#include "ordforge/orders.hpp"
#include "ordforge/veblen.hpp"

namespace ordforge {

// ---------------------------------------------------------------------------
// Subterm machinery for phi_{1+X}0 terms. (H(s), T(s), R(s)) determines s
// uniquely: H is the refined index (with -1 for zero and sums in 2+X), T the
// most significant subterm, R the remainder. All of these are structural and
// defined on well-formed trees regardless of h-validity.
// ---------------------------------------------------------------------------
struct SubtermData {
  Elem H = Elem::of(-1);  // element of 2+X
  VebTerm T = VebTerm::zero();
  VebTerm R = VebTerm::zero();
};

SubtermData subterm_data(const OrderSpec& X, const VebTerm& s);

// T_*, the index search along T-iterates: n(s) is the first n at which the
// index strictly rises (or the iterate hits 0), H_* counts the iterates
// below n(s) whose index ties H(s), N counts T_* applications to zero, and
// slots[i-1] = s[i] = T_*^{N-i}(s).
struct StarData {
  std::size_t n_s = 0;
  VebTerm T_star = VebTerm::zero();
  std::size_t H_star = 0;
  std::size_t N = 0;
  std::vector<VebTerm> slots;
};

StarData star_data(const OrderSpec& X, const VebTerm& s);

// Split indices in (2+X) x N: H0 = (H,0), H1 = (H,1), H2 = (H, 1+H_*).
Elem h0_index(const OrderSpec& X, const VebTerm& s);
Elem h1_index(const OrderSpec& X, const VebTerm& s);
Elem h2_index(const OrderSpec& X, const VebTerm& s);

// Ahat(X) -> phi_{1+X}0, peeling the outermost chi-pair:
//   o(0) = phi_0(0), o(1) = phi_0(phi_0(0)),
//   o(chi-comp) = phi_{x}(o(prefix) + o(exponent)).
VebTerm o_up(const OrderSpec& X, const AhatTerm& t);

// phi_{1+X}0 -> Ahat((2+X) x N) in the iterative slots form. The recursive
// form is kept as a test cross-check.
AhatTerm o_down(const OrderSpec& X, const VebTerm& s);
AhatTerm o_down_recursive(const OrderSpec& X, const VebTerm& s);

// Target order of o_down.
OrderSpec o_down_target(const OrderSpec& X);

}  // namespace ordforge
