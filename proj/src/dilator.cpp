#include "ordforge/dilator.hpp"

#include <algorithm>
#include <sstream>

#include "ordforge/errors.hpp"
#include "ordforge/rng.hpp"

namespace ordforge {

bool DilatorHandle::contains(std::size_t b, const BigNat& sigma) const {
  Cardinality c = card(b);
  switch (c.kind) {
    case Cardinality::Kind::AllNaturals: return true;
    case Cardinality::Kind::Finite: return sigma < c.bound;
    case Cardinality::Kind::Overflow:
      throw EvalOverflow("cardinality of " + name() + "(" + std::to_string(b) +
                         ") exceeds the evaluation budget");
  }
  return false;
}

std::optional<BigNat> invert_apply(const DilatorHandle& D, const FinMap& e, const BigNat& target,
                                   const EvalBudget& budget) {
  std::size_t m = e.domain();
  // apply(f, sigma) overflowing the budget means the value exceeds every
  // in-budget target, so overflow probes read as "too big".
  auto probe = [&](const BigNat& s) -> Ordering {
    auto v = D.apply(e, s, budget);
    if (!v) return Ordering::Greater;
    return compare_bignat(*v, target);
  };
  if (!D.contains(m, 0)) return std::nullopt;  // D(m) empty
  Ordering c0 = probe(0);
  if (c0 == Ordering::Equal) return BigNat(0);
  if (c0 == Ordering::Greater) return std::nullopt;

  BigNat lo = 0;  // probe(lo) < target
  BigNat hi = 1;
  while (D.contains(m, hi)) {
    Ordering c = probe(hi);
    if (c == Ordering::Equal) return hi;
    if (c == Ordering::Greater) break;
    lo = hi;
    hi <<= 1;
  }
  // invariant: probe(lo) < target, and hi (if in domain) probes > target
  while (hi - lo > 1) {
    BigNat mid = (lo + hi) >> 1;
    if (!D.contains(m, mid)) {
      hi = mid;
      continue;
    }
    Ordering c = probe(mid);
    if (c == Ordering::Equal) return mid;
    if (c == Ordering::Less)
      lo = mid;
    else
      hi = mid;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Support checker
// ---------------------------------------------------------------------------

namespace {

// All strictly increasing maps m -> n, i.e. m-subsets of n.
std::vector<FinMap> all_fin_maps(std::size_t m, std::size_t n) {
  std::vector<FinMap> out;
  if (m > n) return out;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    FinMap f;
    f.codomain = n;
    f.image = idx;
    out.push_back(f);
    // next combination
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (idx[i] + (m - i) < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
    if (m == 0) return out;
  }
}

std::vector<std::size_t> map_image_set(const FinMap& f, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(f(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Elements of D(b) to exercise: the full segment when small, otherwise a
// seeded sample below the cardinality (or below 2^budget for huge orders).
std::vector<BigNat> sample_sigmas(const DilatorHandle& D, std::size_t b, std::size_t want,
                                  SplitMix64& rng, const EvalBudget& budget) {
  std::vector<BigNat> out;
  Cardinality c = D.card(b);
  if (c.kind == Cardinality::Kind::Overflow)
    throw EvalOverflow("cannot sample " + D.name() + "(" + std::to_string(b) + ")");
  if (c.kind == Cardinality::Kind::Finite && c.bound <= want) {
    for (BigNat s = 0; s < c.bound; ++s) out.push_back(s);
    return out;
  }
  BigNat bound = c.kind == Cardinality::Kind::Finite ? c.bound : BigNat(0);
  out.push_back(0);
  for (std::size_t i = 1; i < want; ++i) {
    BigNat v = rng.next();
    if (c.kind == Cardinality::Kind::Finite) {
      v %= bound;
    } else {
      v %= pow2(std::min<std::size_t>(budget.max_bits, 64));
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SupportCheckResult check_support_criterion(const DilatorHandle& D, std::size_t max_b,
                                           std::size_t samples, std::uint64_t seed,
                                           const EvalBudget& budget) {
  SupportCheckResult res;
  SplitMix64 rng(seed ^ 0x5099e5ULL);
  std::size_t pairs = 0;
  for (std::size_t n = 0; n <= max_b; ++n)
    for (std::size_t m = 0; m <= n; ++m) pairs += all_fin_maps(m, n).size();
  std::size_t per_map = std::max<std::size_t>(1, samples / std::max<std::size_t>(pairs, 1));

  auto fail = [&](const FinMap& f, const BigNat& sigma, const std::string& what) {
    res.pass = false;
    res.witness_map = f;
    res.witness_sigma = sigma;
    res.detail = what;
  };

  for (std::size_t n = 0; n <= max_b && res.pass; ++n) {
    for (std::size_t m = 0; m <= n && res.pass; ++m) {
      for (const FinMap& f : all_fin_maps(m, n)) {
        // (1) naturality: supp_n(D(f)(sigma)) = [f](supp_m(sigma))
        for (const BigNat& sigma : sample_sigmas(D, m, per_map, rng, budget)) {
          ++res.cases;
          auto img = D.apply(f, sigma, budget);
          if (!img) continue;  // out of budget; nothing to check
          auto lhs = D.supp(n, *img);
          auto rhs = map_image_set(f, D.supp(m, sigma));
          if (lhs != rhs) {
            fail(f, sigma, "supp naturality violated");
            break;
          }
        }
        if (!res.pass) break;
        // (2) range criterion: supp_n(sigma) subseteq rng(f) => preimage exists
        for (const BigNat& sigma : sample_sigmas(D, n, per_map, rng, budget)) {
          ++res.cases;
          auto s = D.supp(n, sigma);
          bool inside = std::includes(f.image.begin(), f.image.end(), s.begin(), s.end());
          if (!inside) continue;
          auto pre = invert_apply(D, f, sigma, budget);
          if (!pre) {
            fail(f, sigma, "range criterion violated: no preimage");
            break;
          }
        }
        if (!res.pass) break;
      }
    }
  }
  return res;
}

std::vector<std::size_t> brute_min_support(const DilatorHandle& D, std::size_t n,
                                           const BigNat& sigma, const EvalBudget& budget) {
  if (n > 16) throw TooLarge("brute-force support enumeration is capped at n = 16");
  if (!D.contains(n, sigma)) throw OutOfDomain("sigma outside D(" + std::to_string(n) + ")");
  for (std::size_t m = 0; m <= n; ++m) {
    for (const FinMap& e : all_fin_maps(m, n)) {
      if (invert_apply(D, e, sigma, budget)) return e.image;
    }
  }
  throw InternalInconsistency("no enumeration reaches sigma; identity embedding must");
}

// ---------------------------------------------------------------------------
// The extension Dbar
// ---------------------------------------------------------------------------

std::string BarElement::str() const {
  std::ostringstream os;
  os << "({";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i) os << ",";
    os << support[i].str();
  }
  os << "}," << sigma.str() << ")";
  return os.str();
}

BarElement make_bar_element(const OrderSpec& X, std::vector<Elem> support, BigNat sigma) {
  return BarElement{sort_unique(X, std::move(support)), std::move(sigma)};
}

namespace {
bool full_support(const DilatorHandle& D, std::size_t m, const BigNat& sigma) {
  auto s = D.supp(m, sigma);
  if (s.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i)
    if (s[i] != i) return false;
  return true;
}
}  // namespace

bool bar_member(const DilatorHandle& D, const OrderSpec& X, const BarElement& el) {
  for (const auto& e : el.support)
    if (!valid_elem(X, e)) throw InvalidElement("support element " + e.str() + " is not in the order");
  for (std::size_t i = 1; i < el.support.size(); ++i)
    if (compare(X, el.support[i - 1], el.support[i]) != Ordering::Less)
      throw InvalidElement("support set must be sorted and duplicate-free");
  std::size_t m = el.support.size();
  if (!D.contains(m, el.sigma)) return false;
  return full_support(D, m, el.sigma);
}

Ordering bar_compare(const DilatorHandle& D, const OrderSpec& X, const BarElement& p,
                     const BarElement& q, const EvalBudget& budget) {
  if (p == q) return Ordering::Equal;
  auto u = merge_union(X, p.support, q.support);
  FinMap fp = induced_inclusion(X, p.support, u);
  FinMap fq = induced_inclusion(X, q.support, u);
  auto vp = D.apply(fp, p.sigma, budget);
  auto vq = D.apply(fq, q.sigma, budget);
  if (!vp || !vq) throw EvalOverflow("bar_compare exceeded the evaluation budget");
  Ordering c = compare_bignat(*vp, *vq);
  if (c == Ordering::Equal)
    throw InternalInconsistency("distinct full-support pairs with equal images");
  return c;
}

BarElement bar_apply(const DilatorHandle& D, const OrderEmbedding& f, const BarElement& el) {
  (void)D;
  std::vector<Elem> mapped;
  mapped.reserve(el.support.size());
  for (const auto& e : el.support) mapped.push_back(f(e));
  return BarElement{sort_unique(f.target, std::move(mapped)), el.sigma};
}

BigNat eta(const DilatorHandle& D, std::size_t n, const BarElement& el, const EvalBudget& budget) {
  FinMap e;
  e.codomain = n;
  e.image.reserve(el.support.size());
  for (const auto& x : el.support) {
    long long v = x.int_value();
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw InvalidElement("bar element does not live over fin:" + std::to_string(n));
    e.image.push_back(static_cast<std::size_t>(v));
  }
  auto r = D.apply(e, el.sigma, budget);
  if (!r) throw EvalOverflow("eta exceeded the evaluation budget");
  return *r;
}

BarElement mu(const DilatorHandle& D, std::size_t n, const BigNat& tau, const EvalBudget& budget) {
  if (!D.contains(n, tau)) throw OutOfDomain("tau outside D(" + std::to_string(n) + ")");
  auto a = D.supp(n, tau);
  FinMap e;
  e.codomain = n;
  e.image = a;
  auto sigma = invert_apply(D, e, tau, budget);
  if (!sigma)
    throw InternalInconsistency("supp range does not reach tau = " + tau.str() +
                                "; dilator violates the range criterion");
  BarElement el;
  el.sigma = *sigma;
  el.support.reserve(a.size());
  for (auto v : a) el.support.push_back(Elem::of(static_cast<long long>(v)));
  return el;
}

std::vector<BarElement> enumerate_bar(const DilatorHandle& D, std::size_t n,
                                      const EvalBudget& budget) {
  std::vector<BarElement> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> a;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) a.push_back(i);
    std::size_t m = a.size();
    Cardinality c = D.card(m);
    if (c.kind != Cardinality::Kind::Finite)
      throw TooLarge("enumerate_bar needs finite D(" + std::to_string(m) + ")");
    for (BigNat s = 0; s < c.bound; ++s) {
      if (!full_support(D, m, s)) continue;
      BarElement el;
      el.sigma = s;
      for (auto v : a) el.support.push_back(Elem::of(static_cast<long long>(v)));
      out.push_back(std::move(el));
    }
  }
  OrderSpec fin = OrderSpec::finite(n);
  std::sort(out.begin(), out.end(), [&](const BarElement& p, const BarElement& q) {
    return bar_compare(D, fin, p, q, budget) == Ordering::Less;
  });
  return out;
}

}  // namespace ordforge
