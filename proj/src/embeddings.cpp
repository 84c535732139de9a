#include "ordforge/embeddings.hpp"

#include "ordforge/errors.hpp"

namespace ordforge {

SubtermData subterm_data(const OrderSpec& X, const VebTerm& s) {
  SubtermData d;
  switch (s.kind()) {
    case VebTerm::Kind::Zero:
      return d;  // (-1, 0, 0)
    case VebTerm::Kind::Phi:
      d.H = s.index();  // 1+X sits inside 2+X unchanged
      d.T = s.arg();
      d.R = VebTerm::zero();
      return d;
    case VebTerm::Kind::Sum: {
      const auto& ss = s.summands();
      VebTerm head = ss.front();
      VebTerm tail = VebTerm::sum(std::vector<VebTerm>(ss.begin() + 1, ss.end()));
      bool head_ge = veb_compare(X, head, tail) != Ordering::Less;
      d.H = Elem::of(-1);
      d.T = head_ge ? head : tail;
      d.R = head_ge ? tail : head;
      return d;
    }
  }
  return d;
}

StarData star_data(const OrderSpec& X, const VebTerm& s) {
  OrderSpec two_plus = OrderSpec::two_plus(X);
  StarData sd;
  Elem hs = subterm_data(X, s).H;

  VebTerm cur = s;
  while (!cur.is_zero()) {
    Elem hc = subterm_data(X, cur).H;
    if (compare(two_plus, hs, hc) == Ordering::Less) break;
    if (compare(two_plus, hs, hc) == Ordering::Equal) ++sd.H_star;
    cur = subterm_data(X, cur).T;
    ++sd.n_s;
  }
  sd.T_star = cur;

  // chain of T_* iterates down to zero; slots hold it reversed so that
  // slots[i-1] = s[i]
  VebTerm t = s;
  std::vector<VebTerm> chain;
  while (!t.is_zero()) {
    chain.push_back(t);
    // recompute T_* for the current iterate
    Elem ht = subterm_data(X, t).H;
    VebTerm walk = t;
    while (!walk.is_zero()) {
      Elem hw = subterm_data(X, walk).H;
      if (compare(two_plus, ht, hw) == Ordering::Less) break;
      walk = subterm_data(X, walk).T;
    }
    t = walk;
  }
  sd.N = chain.size();
  sd.slots.assign(chain.rbegin(), chain.rend());
  return sd;
}

Elem h0_index(const OrderSpec& X, const VebTerm& s) {
  return Elem::pair(subterm_data(X, s).H, Elem::of(0));
}

Elem h1_index(const OrderSpec& X, const VebTerm& s) {
  return Elem::pair(subterm_data(X, s).H, Elem::of(1));
}

Elem h2_index(const OrderSpec& X, const VebTerm& s) {
  StarData sd = star_data(X, s);
  return Elem::pair(subterm_data(X, s).H, Elem::of(1 + static_cast<long long>(sd.H_star)));
}

VebTerm o_up(const OrderSpec& X, const AhatTerm& t) {
  (void)X;
  Elem bottom = Elem::of(0);
  if (t.is_zero()) return VebTerm::phi(bottom, VebTerm::zero());
  if (t.is_one()) return VebTerm::phi(bottom, VebTerm::phi(bottom, VebTerm::zero()));
  auto pairs = t.pairs();
  AhatTerm::Pair outer = pairs.back();
  pairs.pop_back();
  AhatTerm prefix = AhatTerm::comp(std::move(pairs));
  VebTerm inner = veb_add(X, o_up(X, prefix), o_up(X, outer.second));
  return VebTerm::phi(lift_elem(outer.first), std::move(inner));
}

namespace {

// one chi-block of o(s), appended innermost-first after the expansion of the
// deeper slots
void append_block(const OrderSpec& X, const VebTerm& u, std::size_t h_star,
                  std::vector<AhatTerm::Pair>& out) {
  SubtermData d = subterm_data(X, u);
  out.emplace_back(Elem::pair(d.H, Elem::of(1 + static_cast<long long>(h_star))),
                   AhatTerm::zero());
  out.emplace_back(Elem::pair(d.H, Elem::of(1)), o_down(X, d.T));
  out.emplace_back(Elem::pair(d.H, Elem::of(0)), o_down(X, d.R));
}

}  // namespace

AhatTerm o_down(const OrderSpec& X, const VebTerm& s) {
  if (s.is_zero()) return AhatTerm::one();
  StarData sd = star_data(X, s);
  std::vector<AhatTerm::Pair> out;
  out.reserve(3 * sd.N);
  for (std::size_t i = 0; i < sd.N; ++i) {
    const VebTerm& u = sd.slots[i];
    append_block(X, u, star_data(X, u).H_star, out);
  }
  return AhatTerm::comp(std::move(out));
}

AhatTerm o_down_recursive(const OrderSpec& X, const VebTerm& s) {
  if (s.is_zero()) return AhatTerm::one();
  SubtermData d = subterm_data(X, s);
  StarData sd = star_data(X, s);
  AhatTerm inner = o_down_recursive(X, sd.T_star);
  std::vector<AhatTerm::Pair> out = inner.pairs();
  out.emplace_back(Elem::pair(d.H, Elem::of(1 + static_cast<long long>(sd.H_star))),
                   AhatTerm::zero());
  out.emplace_back(Elem::pair(d.H, Elem::of(1)), o_down_recursive(X, d.T));
  out.emplace_back(Elem::pair(d.H, Elem::of(0)), o_down_recursive(X, d.R));
  return AhatTerm::comp(std::move(out));
}

OrderSpec o_down_target(const OrderSpec& X) {
  return OrderSpec::product(OrderSpec::two_plus(X), OrderSpec::naturals());
}

}  // namespace ordforge
