#include "ordforge/checks.hpp"

#include <algorithm>
#include <sstream>

#include "ordforge/ackermann.hpp"
#include "ordforge/ahat.hpp"
#include "ordforge/binary.hpp"
#include "ordforge/dilator.hpp"
#include "ordforge/embeddings.hpp"
#include "ordforge/errors.hpp"
#include "ordforge/goodstein.hpp"
#include "ordforge/orders.hpp"
#include "ordforge/rng.hpp"
#include "ordforge/veblen.hpp"

namespace ordforge {

void CheckReport::merge(const CheckReport& o) {
  cases += o.cases;
  failures += o.failures;
  for (const auto& m : o.messages)
    if (messages.size() < 8) messages.push_back(m);
}

namespace {

std::vector<OrderSpec> fuzz_orders() {
  return {OrderSpec::finite(0),
          OrderSpec::finite(1),
          OrderSpec::finite(3),
          OrderSpec::finite(5),
          OrderSpec::naturals(),
          OrderSpec::one_plus(OrderSpec::naturals()),
          OrderSpec::two_plus(OrderSpec::finite(2)),
          OrderSpec::product(OrderSpec::naturals(), OrderSpec::naturals()),
          OrderSpec::desc_seq(OrderSpec::naturals())};
}

std::vector<OrderSpec> embed_orders() {
  return {OrderSpec::finite(0), OrderSpec::finite(1), OrderSpec::finite(2), OrderSpec::finite(5)};
}

// ---------------------------------------------------------------------------
// orders
// ---------------------------------------------------------------------------

CheckReport suite_orders(std::uint64_t seed, std::size_t iters) {
  CheckReport rep;
  rep.suite = "orders";
  SplitMix64 rng(seed);

  for (const auto& X : fuzz_orders()) {
    for (std::size_t i = 0; i < iters / 9 + 1; ++i) {
      auto a = sample_elem(X, rng, 6);
      auto b = sample_elem(X, rng, 6);
      auto c = sample_elem(X, rng, 6);
      if (!a || !b || !c) break;
      Ordering ab = compare(X, *a, *b), ba = compare(X, *b, *a);
      bool tri = (ab == Ordering::Equal && ba == Ordering::Equal && *a == *b) ||
                 (ab == Ordering::Less && ba == Ordering::Greater) ||
                 (ab == Ordering::Greater && ba == Ordering::Less);
      if (!tri) {
        rep.fail("trichotomy broken over " + X.str() + " on " + a->str() + ", " + b->str());
        continue;
      }
      if (compare(X, *a, *b) != Ordering::Greater && compare(X, *b, *c) != Ordering::Greater &&
          compare(X, *a, *c) == Ordering::Greater) {
        rep.fail("transitivity broken over " + X.str());
        continue;
      }
      rep.ok();
    }
  }

  // composition law |iota_b^c| o |iota_a^b| = |iota_a^c| by exhaustion on
  // subsets of a 6-element carrier
  OrderSpec N = OrderSpec::naturals();
  std::vector<Elem> carrier;
  for (long long v : {1, 3, 4, 7, 9, 12}) carrier.push_back(Elem::of(v));
  for (std::size_t mc = 0; mc < 64; ++mc) {
    std::vector<Elem> c;
    for (std::size_t i = 0; i < 6; ++i)
      if (mc & (1u << i)) c.push_back(carrier[i]);
    for (std::size_t mb = 0; mb < 64; ++mb) {
      if ((mb & mc) != mb) continue;
      std::vector<Elem> b;
      for (std::size_t i = 0; i < 6; ++i)
        if (mb & (1u << i)) b.push_back(carrier[i]);
      for (std::size_t ma = 0; ma < 64; ++ma) {
        if ((ma & mb) != ma) continue;
        std::vector<Elem> a;
        for (std::size_t i = 0; i < 6; ++i)
          if (ma & (1u << i)) a.push_back(carrier[i]);
        FinMap ab = induced_inclusion(N, a, b);
        FinMap bc = induced_inclusion(N, b, c);
        FinMap ac = induced_inclusion(N, a, c);
        if (!(bc.compose_after(ab) == ac))
          rep.fail("inclusion composition law broken");
        else
          rep.ok();
      }
    }
  }

  // |desc(fin:n)| = 2^n
  for (std::size_t n = 0; n <= 12; ++n) {
    auto all = enumerate_finite(OrderSpec::desc_seq(OrderSpec::finite(n)), std::size_t{1} << 13);
    if (!all || all->size() != (std::size_t{1} << n))
      rep.fail("desc:fin:" + std::to_string(n) + " has wrong cardinality");
    else
      rep.ok();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// support criterion + brute oracle
// ---------------------------------------------------------------------------

CheckReport suite_support(std::uint64_t seed, std::size_t iters) {
  CheckReport rep;
  rep.suite = "support";
  BinaryDilator bin;
  AckermannDilator ack;

  auto r1 = check_support_criterion(bin, 6, std::max<std::size_t>(iters, 500), seed);
  rep.cases += r1.cases;
  if (!r1.pass) rep.fail("binary support criterion: " + r1.detail);

  auto r2 = check_support_criterion(ack, 3, std::max<std::size_t>(iters / 4, 200), seed + 1);
  rep.cases += r2.cases;
  if (!r2.pass) rep.fail("ackermann support criterion: " + r2.detail);

  for (std::size_t n = 0; n <= 6; ++n) {
    for (BigNat s = 0; s < pow2(n); ++s) {
      if (brute_min_support(bin, n, s) != bin.supp(n, s))
        rep.fail("binary brute support mismatch at n=" + std::to_string(n) + ", sigma=" + s.str());
      else
        rep.ok();
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// dilator core
// ---------------------------------------------------------------------------

CheckReport suite_dilator(std::uint64_t seed, std::size_t iters) {
  CheckReport rep;
  rep.suite = "dilator";
  BinaryDilator bin;
  SplitMix64 rng(seed);

  // eta/mu round trip, binary n <= 6
  for (std::size_t n = 0; n <= 6; ++n) {
    for (BigNat t = 0; t < pow2(n); ++t) {
      BarElement el = mu(bin, n, t);
      if (!bar_member(bin, OrderSpec::finite(n), el) || eta(bin, n, el) != t)
        rep.fail("binary eta/mu round trip failed at n=" + std::to_string(n) + ", " + t.str());
      else
        rep.ok();
    }
  }

  // bar_compare is a linear order on Dbar(fin:n), n <= 4 (exhaustive)
  OrderSpec fin4 = OrderSpec::finite(4);
  auto bars = enumerate_bar(bin, 4);
  for (std::size_t i = 0; i < bars.size(); ++i)
    for (std::size_t j = 0; j < bars.size(); ++j) {
      Ordering c = bar_compare(bin, fin4, bars[i], bars[j]);
      Ordering expect = i < j ? Ordering::Less : i > j ? Ordering::Greater : Ordering::Equal;
      if (c != expect)
        rep.fail("bar_compare not a linear order at (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
      else
        rep.ok();
    }

  // functor law apply(g o f) = apply(g) o apply(f) on samples
  for (std::size_t it = 0; it < std::min<std::size_t>(iters, 2000); ++it) {
    std::size_t l = rng.below(5), m = l + rng.below(3), n = m + rng.below(3);
    // random strictly increasing maps f: l->m, g: m->n
    auto rand_map = [&](std::size_t dom, std::size_t cod) {
      std::vector<std::size_t> all(cod);
      for (std::size_t i = 0; i < cod; ++i) all[i] = i;
      for (std::size_t i = cod; i > 1; --i) std::swap(all[i - 1], all[rng.below(i)]);
      all.resize(dom);
      std::sort(all.begin(), all.end());
      FinMap f;
      f.image = all;
      f.codomain = cod;
      return f;
    };
    FinMap f = rand_map(l, m), g = rand_map(m, n);
    BigNat sigma = rng.below(std::uint64_t{1} << l);
    auto lhs = bin.apply(g.compose_after(f), sigma, {});
    auto f1 = bin.apply(f, sigma, {});
    auto rhs = f1 ? bin.apply(g, *f1, {}) : std::nullopt;
    if (!lhs || !rhs || *lhs != *rhs)
      rep.fail("binary functor law broken");
    else
      rep.ok();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// binary representation
// ---------------------------------------------------------------------------

CheckReport suite_binary(std::uint64_t seed, std::size_t iters) {
  (void)seed;
  CheckReport rep;
  rep.suite = "binary";
  BinaryDilator bin;

  // monotonicity of 2(f) on exhaustive small domains
  for (std::size_t b = 0; b <= 8; ++b) {
    FinMap up = FinMap::shifted(b, 1, b + 1);
    BigNat prev = -1;
    for (BigNat m = 0; m < pow2(b); ++m) {
      BigNat v = bin_apply(up, m);
      if (prev >= 0 && v <= prev) {
        rep.fail("bin_apply not strictly monotone at b=" + std::to_string(b));
        break;
      }
      prev = v;
      rep.ok();
    }
  }

  // Dbar(fin:n) is the descending-sequence order: (a, 2^|a|-1) <-> <a desc>
  for (std::size_t n = 0; n <= 6; ++n) {
    OrderSpec fin = OrderSpec::finite(n);
    OrderSpec desc = OrderSpec::desc_seq(fin);
    auto bars = enumerate_bar(bin, n);
    // map each bar element to its descending sequence
    std::vector<Elem> seqs;
    for (const auto& el : bars) {
      if (el.sigma != pow2(el.support.size()) - 1) {
        rep.fail("full-support binary element is not 2^k-1");
        continue;
      }
      std::vector<Elem> items(el.support.rbegin(), el.support.rend());
      seqs.push_back(Elem::seq(items));
    }
    for (std::size_t i = 0; i + 1 < seqs.size(); ++i) {
      if (compare(desc, seqs[i], seqs[i + 1]) != Ordering::Less)
        rep.fail("binary extension does not match the lexicographic order at n=" +
                 std::to_string(n));
      else
        rep.ok();
    }
    if ((std::size_t{1} << n) != bars.size())
      rep.fail("Dbar(fin:n) cardinality mismatch at n=" + std::to_string(n));
    else
      rep.ok();
  }

  // hereditary round trip
  std::size_t cap = std::max<std::size_t>(iters, 10'000);
  for (BigNat m = 0; m <= cap; m += 1) {
    for (unsigned b = 2; b <= 7; ++b) {
      if (her_value(her_rep(m, b), b) != m) {
        rep.fail("her round trip failed at m=" + m.str() + ", b=" + std::to_string(b));
      }
    }
    rep.ok();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// ackermann
// ---------------------------------------------------------------------------

CheckReport suite_ackermann(std::uint64_t seed, std::size_t iters) {
  CheckReport rep;
  rep.suite = "ackermann";
  SplitMix64 rng(seed);

  // F-basic at desk scale: n < F_b(n), monotone in n and in b
  for (std::size_t b = 0; b <= 3; ++b) {
    std::optional<BigNat> prev;
    for (BigNat n = 0; n <= 64; ++n) {
      auto v = fgh_eval(b, n);
      if (!v) {
        prev.reset();
        continue;
      }
      if (*v <= n) rep.fail("F_b(n) <= n at b=" + std::to_string(b) + ", n=" + n.str());
      if (prev && *v <= *prev) rep.fail("F_b not strictly increasing at b=" + std::to_string(b));
      if (b > 0 && n > 0) {
        auto lower = fgh_eval(b - 1, n);
        if (lower && *lower >= *v) rep.fail("b -> F_b(n) not increasing at n=" + n.str());
      }
      prev = v;
      rep.ok();
    }
  }

  // normal-form round trip over all of A(3)
  for (BigNat m = 0; m <= 2046; ++m) {
    auto back = ack_eval(ack_nf(m));
    if (!back || *back != m)
      rep.fail("ack_nf/ack_eval round trip failed at m=" + m.str());
    else
      rep.ok();
  }

  // term order agrees with numeric order
  OrderSpec N = OrderSpec::naturals();
  std::vector<AhatTerm> nf;
  for (BigNat m = 0; m <= 500; ++m) nf.push_back(ack_nf(m));
  for (std::size_t i = 0; i < nf.size(); ++i)
    for (std::size_t j = i + 1; j < nf.size(); ++j) {
      if (ahat_compare(N, nf[i], nf[j]) != Ordering::Less) {
        rep.fail("term order disagrees with numeric order at " + std::to_string(i) + " < " +
                 std::to_string(j));
      } else {
        rep.ok();
      }
    }

  // functoriality of A(f) on composable samples with b <= 3
  AckermannDilator ack;
  for (std::size_t it = 0; it < std::min<std::size_t>(iters, 500); ++it) {
    std::size_t l = rng.below(3), m = l + rng.below(2), n = std::min<std::size_t>(m + rng.below(2), 3);
    if (l > m || m > n) continue;
    auto rand_map = [&](std::size_t dom, std::size_t cod) {
      std::vector<std::size_t> all(cod);
      for (std::size_t i = 0; i < cod; ++i) all[i] = i;
      for (std::size_t i = cod; i > 1; --i) std::swap(all[i - 1], all[rng.below(i)]);
      all.resize(dom);
      std::sort(all.begin(), all.end());
      return FinMap{all, cod};
    };
    FinMap f = rand_map(l, m), g = rand_map(m, n);
    Cardinality c = ack.card(l);
    if (c.kind != Cardinality::Kind::Finite) continue;
    BigNat sigma = rng.next() % static_cast<std::uint64_t>(c.bound);
    auto lhs = ack.apply(g.compose_after(f), sigma, {});
    auto mid = ack.apply(f, sigma, {});
    auto rhs = mid ? ack.apply(g, *mid, {}) : std::nullopt;
    if (!lhs || !rhs || *lhs != *rhs)
      rep.fail("A(f) functor law broken");
    else
      rep.ok();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// ahat terms
// ---------------------------------------------------------------------------

CheckReport suite_ahat(std::uint64_t seed, std::size_t iters) {
  CheckReport rep;
  rep.suite = "ahat";
  SplitMix64 rng(seed);
  OrderSpec N = OrderSpec::naturals();

  // mu_inv over all of A(3): distinct valid terms in exact numeric order
  OrderSpec fin3 = OrderSpec::finite(3);
  std::vector<AhatTerm> terms;
  for (BigNat m = 0; m <= 2046; ++m) terms.push_back(mu_inv(3, m));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!ahat_valid(fin3, terms[i])) rep.fail("mu_inv produced an invalid term");
    if (i + 1 < terms.size() && ahat_compare(fin3, terms[i], terms[i + 1]) != Ordering::Less)
      rep.fail("mu_inv order mismatch at " + std::to_string(i));
    auto back = mu_iso(3, terms[i], {});
    if (!back || *back != BigNat(i))
      rep.fail("mu_iso(mu_inv(m)) != m at " + std::to_string(i));
    rep.ok();
  }

  std::vector<OrderSpec> orders = {OrderSpec::finite(0), OrderSpec::finite(2),
                                   OrderSpec::finite(5), N};
  for (const auto& X : orders) {
    for (std::size_t it = 0; it < iters / 4 + 1; ++it) {
      AhatTerm a = ahat_gen(X, 12, rng.next());
      AhatTerm b = ahat_gen(X, 12, rng.next());
      AhatTerm c = ahat_gen(X, 12, rng.next());
      if (!ahat_valid(X, a) || !ahat_valid(X, b) || !ahat_valid(X, c)) {
        rep.fail("generator produced an invalid term over " + X.str());
        continue;
      }
      // trichotomy + transitivity
      Ordering ab = ahat_compare(X, a, b), ba = ahat_compare(X, b, a);
      bool tri = (ab == Ordering::Equal && a == b && ba == Ordering::Equal) ||
                 (ab == Ordering::Less && ba == Ordering::Greater) ||
                 (ab == Ordering::Greater && ba == Ordering::Less);
      if (!tri) {
        rep.fail("ahat_compare trichotomy broken over " + X.str());
        continue;
      }
      if (ahat_compare(X, a, b) != Ordering::Greater &&
          ahat_compare(X, b, c) != Ordering::Greater &&
          ahat_compare(X, a, c) == Ordering::Greater) {
        rep.fail("ahat_compare transitivity broken over " + X.str());
        continue;
      }
      rep.ok();
    }
  }

  // naturality of supp and constructive range criterion along +3 on N
  OrderEmbedding up{N, N, [](const Elem& e) { return Elem::of(e.int_value() + 3); }};
  OrderEmbedding down{N, N, [](const Elem& e) { return Elem::of(e.int_value() - 3); }};
  for (std::size_t it = 0; it < iters; ++it) {
    AhatTerm t = ahat_gen(N, 12, rng.next());
    AhatTerm img = ahat_apply(up, t);
    if (!ahat_valid(N, img)) {
      rep.fail("ahat_apply broke validity");
      continue;
    }
    auto s1 = ahat_supp(N, img);
    auto s0 = ahat_supp(N, t);
    std::vector<Elem> mapped;
    for (const auto& e : s0) mapped.push_back(up(e));
    if (s1 != mapped) {
      rep.fail("ahat_supp naturality broken");
      continue;
    }
    // preimage reconstruction: indices of img all lie in rng(up)
    AhatTerm pre = ahat_apply(down, img);
    if (pre != t) {
      rep.fail("range-criterion preimage reconstruction failed");
      continue;
    }
    rep.ok();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// veblen
// ---------------------------------------------------------------------------

CheckReport suite_veblen(std::uint64_t seed, std::size_t iters) {
  CheckReport rep;
  rep.suite = "veblen";
  SplitMix64 rng(seed);
  std::vector<OrderSpec> orders = {OrderSpec::finite(0), OrderSpec::finite(1),
                                   OrderSpec::finite(2), OrderSpec::finite(3)};

  for (const auto& X : orders) {
    for (std::size_t it = 0; it < iters / 4 + 1; ++it) {
      VebTerm a = veb_gen(X, 10, rng.next());
      VebTerm b = veb_gen(X, 10, rng.next());
      VebTerm c = veb_gen(X, 10, rng.next());
      if (!veb_valid(X, a) || !veb_valid(X, b) || !veb_valid(X, c)) {
        rep.fail("veblen generator produced an invalid term over " + X.str());
        continue;
      }
      Ordering ab = veb_compare(X, a, b), ba = veb_compare(X, b, a);
      bool tri = (ab == Ordering::Equal && a == b && ba == Ordering::Equal) ||
                 (ab == Ordering::Less && ba == Ordering::Greater) ||
                 (ab == Ordering::Greater && ba == Ordering::Less);
      if (!tri) {
        rep.fail("veb_compare trichotomy broken over " + X.str());
        continue;
      }
      if (veb_compare(X, a, b) != Ordering::Greater && veb_compare(X, b, c) != Ordering::Greater &&
          veb_compare(X, a, c) == Ordering::Greater) {
        rep.fail("veb_compare transitivity broken over " + X.str());
        continue;
      }
      // additive principality: u, v < p  =>  u + v < p
      VebTerm p = VebTerm::phi(veb_h(a), a);  // some valid principal above a
      if (veb_valid(X, p)) {
        if (veb_compare(X, a, p) == Ordering::Less && veb_compare(X, b, p) == Ordering::Less) {
          if (veb_compare(X, veb_add(X, a, b), p) != Ordering::Less)
            rep.fail("additive principality broken over " + X.str());
        }
      }
      // veb_add laws: s <= s + t, equality iff t = 0; associativity sample
      VebTerm ab_sum = veb_add(X, a, b);
      Ordering grow = veb_compare(X, a, ab_sum);
      if (grow == Ordering::Greater || (grow == Ordering::Equal) != b.is_zero()) {
        rep.fail("veb_add growth law broken");
        continue;
      }
      if (veb_add(X, veb_add(X, a, b), c) != veb_add(X, a, veb_add(X, b, c))) {
        rep.fail("veb_add associativity broken");
        continue;
      }
      if (!veb_valid(X, ab_sum)) {
        rep.fail("veb_add produced an invalid term");
        continue;
      }
      rep.ok();
    }
  }

  // fixed-point coherence: phi_x(phi_y t) with x < y is rejected outright
  OrderSpec X = OrderSpec::finite(1);
  VebTerm inner = VebTerm::phi(Elem::of(1), VebTerm::zero());
  VebTerm bad = VebTerm::phi(Elem::of(0), inner);
  if (veb_valid(X, bad))
    rep.fail("superfluous fixed-point term was accepted");
  else
    rep.ok();
  if (veb_valid(X, VebTerm::sum_unchecked({VebTerm::phi(Elem::of(0), VebTerm::zero())})))
    rep.fail("one-summand sum was accepted");
  else
    rep.ok();
  return rep;
}

// ---------------------------------------------------------------------------
// structural lemmas for the downward embedding
// ---------------------------------------------------------------------------

VebTerm lemma_gen(const OrderSpec& X, SplitMix64& rng) { return veb_gen(X, 12, rng.next()); }

}  // namespace

CheckReport check_lemma_star_extend(std::uint64_t seed, std::size_t iters) {
  CheckReport rep;
  rep.suite = "lemma-star-extend";
  SplitMix64 rng(seed);
  auto orders = embed_orders();
  std::size_t found = 0, attempts = 0;
  while (found < iters && attempts < 100 * iters + 1000) {
    ++attempts;
    const OrderSpec& X = orders[rng.below(orders.size())];
    VebTerm s = lemma_gen(X, rng);
    if (s.is_zero()) continue;
    StarData ds = star_data(X, s);
    VebTerm ts = subterm_data(X, s).T;
    StarData dt = star_data(X, ts);
    ++found;
    if (ds.N > dt.N + 1) {
      rep.fail("N(s) > N(T(s)) + 1 for " + format_veblen(s));
      continue;
    }
    bool slots_ok = true;
    for (std::size_t i = 1; i < ds.N; ++i) {
      // s[i] = T(s)[i] for i < N(s)
      if (i > dt.N || !(ds.slots[i - 1] == dt.slots[i - 1])) slots_ok = false;
    }
    if (!slots_ok)
      rep.fail("slot equality broken for " + format_veblen(s));
    else
      rep.ok();
  }
  if (found < iters) rep.fail("could not generate enough guard-meeting cases");
  return rep;
}

CheckReport check_lemma_indices_monotone(std::uint64_t seed, std::size_t iters) {
  CheckReport rep;
  rep.suite = "lemma-indices-monotone";
  SplitMix64 rng(seed);
  auto orders = embed_orders();
  for (std::size_t it = 0; it < iters; ++it) {
    const OrderSpec& X = orders[rng.below(orders.size())];
    OrderSpec two_plus = OrderSpec::two_plus(X);
    VebTerm s = lemma_gen(X, rng);
    StarData sd = star_data(X, s);
    bool ok = true;
    // H(s[1]) > ... > H(s[N]) = H(s)
    for (std::size_t i = 1; i + 1 <= sd.N; ++i) {
      Elem hi = subterm_data(X, sd.slots[i - 1]).H;
      Elem hnext = subterm_data(X, sd.slots[i]).H;
      if (compare(two_plus, hi, hnext) != Ordering::Greater) ok = false;
    }
    if (sd.N > 0) {
      Elem last = subterm_data(X, sd.slots[sd.N - 1]).H;
      if (!(last == subterm_data(X, s).H)) ok = false;
    }
    if (!ok)
      rep.fail("index chain not strictly descending for " + format_veblen(s));
    else
      rep.ok();
  }
  return rep;
}

CheckReport check_lemma_subterms_descend(std::uint64_t seed, std::size_t iters) {
  CheckReport rep;
  rep.suite = "lemma-subterms-descend";
  SplitMix64 rng(seed);
  auto orders = embed_orders();
  std::size_t found = 0, attempts = 0;
  while (found < iters && attempts < 200 * iters + 1000) {
    ++attempts;
    const OrderSpec& X = orders[rng.below(orders.size())];
    OrderSpec prod = OrderSpec::product(OrderSpec::two_plus(X), OrderSpec::naturals());
    VebTerm s = lemma_gen(X, rng);
    if (s.is_zero()) continue;
    StarData ds = star_data(X, s);
    VebTerm ts = subterm_data(X, s).T;
    StarData dt = star_data(X, ts);
    if (!(dt.N >= ds.N && ds.N > 0)) continue;  // guard
    ++found;
    // T(s)[N(s)] vs s[N(s)] = s under H2
    const VebTerm& u = dt.slots[ds.N - 1];
    Elem lhs = h2_index(X, u);
    Elem rhs = h2_index(X, s);
    if (compare(prod, lhs, rhs) != Ordering::Less)
      rep.fail("H2 does not descend for " + format_veblen(s));
    else
      rep.ok();
  }
  if (found < iters) rep.fail("could not generate enough guard-meeting cases");
  return rep;
}

CheckReport check_lemma_h_star_monotone(std::uint64_t seed, std::size_t iters) {
  CheckReport rep;
  rep.suite = "lemma-h-star-monotone";
  SplitMix64 rng(seed);
  auto orders = embed_orders();
  std::size_t found = 0, attempts = 0;
  while (found < iters && attempts < 200 * iters + 1000) {
    ++attempts;
    const OrderSpec& X = orders[rng.below(orders.size())];
    OrderSpec two_plus = OrderSpec::two_plus(X);
    VebTerm s, t;
    if (rng.chance(1, 2)) {
      // constructed family: sums sharing the leading summand meet the guard
      // by construction
      VebTerm head = veb_gen(X, 6, rng.next());
      if (head.kind() != VebTerm::Kind::Phi) head = VebTerm::phi(Elem::of(0), VebTerm::zero());
      auto make_tail = [&]() {
        std::vector<VebTerm> ss{head};
        std::size_t extra = 1 + rng.below(2);
        for (std::size_t i = 0; i < extra; ++i) {
          VebTerm q = veb_gen(X, 5, rng.next());
          if (q.kind() != VebTerm::Kind::Phi) q = VebTerm::phi(Elem::of(0), VebTerm::zero());
          if (veb_compare(X, q, head) == Ordering::Greater) q = head;
          ss.push_back(std::move(q));
        }
        std::sort(ss.begin() + 1, ss.end(), [&](const VebTerm& a, const VebTerm& b) {
          return veb_compare(X, b, a) == Ordering::Less;
        });
        return VebTerm::sum_unchecked(std::move(ss));
      };
      s = make_tail();
      t = make_tail();
    } else {
      s = lemma_gen(X, rng);
      t = lemma_gen(X, rng);
    }
    StarData ds = star_data(X, s), dt = star_data(X, t);
    if (!(ds.T_star == dt.T_star)) continue;
    if (!(subterm_data(X, s).H == subterm_data(X, t).H)) continue;
    if (veb_compare(X, s, t) == Ordering::Greater) std::swap(s, t);
    ds = star_data(X, s);
    dt = star_data(X, t);
    ++found;
    if (ds.H_star > dt.H_star)
      rep.fail("H_* not monotone for " + format_veblen(s) + " <= " + format_veblen(t));
    else
      rep.ok();
  }
  if (found < iters) rep.fail("could not generate enough guard-meeting cases");
  return rep;
}

// ---------------------------------------------------------------------------
// embedding monotonicity
// ---------------------------------------------------------------------------

CheckReport check_embed_monotone_up(std::uint64_t seed, std::size_t iters_per_order) {
  CheckReport rep;
  rep.suite = "embed-up";
  for (const auto& X : embed_orders()) {
    SplitMix64 rng(seed ^ (0xabc0 + X.segment_size()));
    for (std::size_t it = 0; it < iters_per_order; ++it) {
      AhatTerm s = ahat_gen(X, 10, rng.next());
      AhatTerm t = ahat_gen(X, 10, rng.next());
      Ordering c = ahat_compare(X, s, t);
      if (c == Ordering::Equal) {
        rep.ok();
        continue;
      }
      if (c == Ordering::Greater) std::swap(s, t);
      VebTerm os = o_up(X, s), ot = o_up(X, t);
      if (!veb_valid(X, os) || !veb_valid(X, ot)) {
        rep.fail("o_up left the term system over " + X.str());
        continue;
      }
      if (veb_compare(X, os, ot) != Ordering::Less)
        rep.fail("o_up not strictly monotone over " + X.str() + ": " + format_ahat(s) + " vs " +
                 format_ahat(t));
      else
        rep.ok();
    }
  }
  return rep;
}

CheckReport check_embed_monotone_down(std::uint64_t seed, std::size_t iters_per_order) {
  CheckReport rep;
  rep.suite = "embed-down";
  for (const auto& X : embed_orders()) {
    OrderSpec target = o_down_target(X);
    SplitMix64 rng(seed ^ (0xdef0 + X.segment_size()));
    for (std::size_t it = 0; it < iters_per_order; ++it) {
      VebTerm s = veb_gen(X, 10, rng.next());
      VebTerm t = veb_gen(X, 10, rng.next());
      Ordering c = veb_compare(X, s, t);
      if (c == Ordering::Equal) {
        rep.ok();
        continue;
      }
      if (c == Ordering::Greater) std::swap(s, t);
      AhatTerm os = o_down(X, s), ot = o_down(X, t);
      if (!ahat_valid(target, os) || !ahat_valid(target, ot)) {
        rep.fail("o_down left the term system over " + X.str());
        continue;
      }
      if (ahat_compare(target, os, ot) != Ordering::Less)
        rep.fail("o_down not strictly monotone over " + X.str() + ": " + format_veblen(s) +
                 " vs " + format_veblen(t));
      else
        rep.ok();
    }
  }
  return rep;
}

namespace {

CheckReport suite_lemmas(std::uint64_t seed, std::size_t iters) {
  CheckReport rep;
  rep.suite = "lemmas";
  rep.merge(check_lemma_star_extend(seed, iters));
  rep.merge(check_lemma_indices_monotone(seed + 1, iters));
  rep.merge(check_lemma_subterms_descend(seed + 2, iters));
  rep.merge(check_lemma_h_star_monotone(seed + 3, iters));

  // reconstruction: s |-> (H, T, R) is injective
  SplitMix64 rng(seed + 4);
  auto orders = embed_orders();
  for (std::size_t it = 0; it < iters; ++it) {
    const OrderSpec& X = orders[rng.below(orders.size())];
    VebTerm s = lemma_gen(X, rng);
    VebTerm t = lemma_gen(X, rng);
    if (s == t) {
      rep.ok();
      continue;
    }
    SubtermData a = subterm_data(X, s), b = subterm_data(X, t);
    if (a.H == b.H && a.T == b.T && a.R == b.R)
      rep.fail("(H,T,R) failed to distinguish " + format_veblen(s) + " and " + format_veblen(t));
    else
      rep.ok();
  }
  return rep;
}

CheckReport suite_embed(std::uint64_t seed, std::size_t iters) {
  CheckReport rep;
  rep.suite = "embed";
  rep.merge(check_embed_monotone_up(seed, iters / 4 + 1));
  rep.merge(check_embed_monotone_down(seed + 1, iters / 4 + 1));

  // iterative and recursive forms of the downward embedding coincide
  SplitMix64 rng(seed + 2);
  for (const auto& X : embed_orders()) {
    for (std::size_t it = 0; it < iters / 8 + 1; ++it) {
      VebTerm s = veb_gen(X, 10, rng.next());
      if (!(o_down(X, s) == o_down_recursive(X, s)))
        rep.fail("o_down forms disagree on " + format_veblen(s));
      else
        rep.ok();
    }
  }
  return rep;
}

CheckReport suite_goodstein(std::uint64_t seed, std::size_t iters) {
  (void)seed;
  CheckReport rep;
  rep.suite = "goodstein";
  BinaryDilator bin;

  // identity-coefficient, constant-base runs decrement exactly
  for (BigNat m = 0; m <= std::min<std::size_t>(iters, 15); ++m) {
    GoodsteinSystem sys{BaseSpec::constant(4), CoeffSpec::identity()};
    RunTrace tr = run(bin, sys, m, 64, {});
    bool ok = tr.status == RunTrace::Status::Terminated &&
              tr.at == static_cast<std::size_t>(m);
    for (std::size_t i = 0; i < tr.steps.size(); ++i)
      if (tr.steps[i].value != m - BigNat(i)) ok = false;
    if (!ok)
      rep.fail("identity run shape broken at m=" + m.str());
    else
      rep.ok();
  }

  // e_j o c_{ij} = e_i on the direct limit, exhaustively
  GoodsteinSystem shift{BaseSpec::affine(2, 1), CoeffSpec::shift(1)};
  auto lim = DirectLimitOrder::build(shift, 12);
  for (std::size_t i = 0; i <= 12; ++i)
    for (std::size_t j = i; j <= 12; ++j) {
      FinMap cij = shift.coeff_between(i, j);
      bool ok = true;
      for (std::size_t n = 0; n < shift.base_at(i); ++n)
        if (!(lim->embed(j, cij(n)) == lim->embed(i, n))) ok = false;
      if (!ok)
        rep.fail("e_j o c_ij != e_i at i=" + std::to_string(i) + ", j=" + std::to_string(j));
      else
        rep.ok();
    }

  // witness descent on the spec's desk-scale runs
  {
    GoodsteinSystem sys{BaseSpec::constant(2), CoeffSpec::identity()};
    RunTrace tr = run(bin, sys, 3, 16, {});
    auto g = witness_map(bin, sys, tr);
    OrderSpec X = direct_limit(sys, tr.steps.size() - 1);
    bool ok = g.size() == 4;
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
      if (tr.steps[i].value != 0 && bar_compare(bin, X, g[i + 1], g[i]) != Ordering::Less)
        ok = false;
    if (!ok)
      rep.fail("binary witness chain not descending");
    else
      rep.ok();
  }

  // descend_search dichotomy
  auto chain = descend_search(shift, 10, 5);
  if (!chain || chain->size() != 5)
    rep.fail("no length-5 chain found for the shifted system");
  else
    rep.ok();
  GoodsteinSystem ident{BaseSpec::affine(2, 1), CoeffSpec::identity()};
  if (descend_search(ident, 10, 2))
    rep.fail("identity system produced a descending chain");
  else
    rep.ok();
  return rep;
}

}  // namespace

std::vector<std::string> check_suite_names() {
  return {"orders",   "support", "dilator", "binary", "ackermann",
          "ahat",     "veblen",  "lemmas",  "embed",  "goodstein"};
}

CheckReport run_check_suite(const std::string& name, std::uint64_t seed, std::size_t iters) {
  if (name == "orders") return suite_orders(seed, iters);
  if (name == "support") return suite_support(seed, iters);
  if (name == "dilator") return suite_dilator(seed, iters);
  if (name == "binary") return suite_binary(seed, iters);
  if (name == "ackermann") return suite_ackermann(seed, iters);
  if (name == "ahat") return suite_ahat(seed, iters);
  if (name == "veblen") return suite_veblen(seed, iters);
  if (name == "lemmas") return suite_lemmas(seed, iters);
  if (name == "embed") return suite_embed(seed, iters);
  if (name == "goodstein") return suite_goodstein(seed, iters);
  throw OutOfDomain("unknown check suite: " + name);
}

}  // namespace ordforge
