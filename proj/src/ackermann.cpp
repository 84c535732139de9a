#include "ordforge/ackermann.hpp"

#include <algorithm>

#include "ordforge/errors.hpp"

namespace ordforge {

// ---------------------------------------------------------------------------
// Fast-growing hierarchy
// ---------------------------------------------------------------------------

namespace {

std::mutex g_fgh_mutex;
std::map<std::pair<std::size_t, BigNat>, BigNat> g_fgh_memo;

std::optional<BigNat> lookup_fgh(std::size_t b, const BigNat& n, const EvalBudget& budget) {
  std::lock_guard<std::mutex> lock(g_fgh_mutex);
  auto it = g_fgh_memo.find({b, n});
  if (it == g_fgh_memo.end()) return std::nullopt;
  if (bit_length(it->second) > budget.max_bits) return std::nullopt;
  return it->second;
}

void store_fgh(std::size_t b, const BigNat& n, const BigNat& v) {
  std::lock_guard<std::mutex> lock(g_fgh_mutex);
  if (g_fgh_memo.size() < 200'000) g_fgh_memo.emplace(std::make_pair(b, n), v);
}

std::optional<BigNat> iter_impl(std::size_t b, const BigNat& k, BigNat n, const EvalBudget& budget,
                                std::size_t& steps);

std::optional<BigNat> eval_impl(std::size_t b, const BigNat& n, const EvalBudget& budget,
                                std::size_t& steps) {
  if (bit_length(n) > budget.max_bits) return std::nullopt;
  if (b == 0) return BigNat(n + 1);
  if (auto hit = lookup_fgh(b, n, budget)) return hit;
  if (++steps > budget.max_steps) return std::nullopt;
  auto r = iter_impl(b - 1, n + 1, n, budget, steps);
  if (r) store_fgh(b, n, *r);
  return r;
}

std::optional<BigNat> iter_impl(std::size_t b, const BigNat& k, BigNat n, const EvalBudget& budget,
                                std::size_t& steps) {
  if (k == 0) return n;
  if (b == 0) {
    // F_0 adds one per application
    BigNat r = n + k;
    if (bit_length(r) > budget.max_bits) return std::nullopt;
    return r;
  }
  if (b == 1) {
    // F_1(n) = 2n+1, so F_1^k(n) = 2^k (n+1) - 1
    if (k > budget.max_bits) return std::nullopt;
    BigNat r = ((n + 1) << static_cast<std::size_t>(k)) - 1;
    if (bit_length(r) > budget.max_bits) return std::nullopt;
    return r;
  }
  // For b >= 2 every application at least doubles any n >= 1, so the bit cap
  // stops this loop long before the step budget does.
  BigNat remaining = k;
  while (remaining > 0) {
    if (++steps > budget.max_steps) return std::nullopt;
    auto next = eval_impl(b, n, budget, steps);
    if (!next) return std::nullopt;
    n = std::move(*next);
    --remaining;
  }
  return n;
}

}  // namespace

std::optional<BigNat> fgh_eval(std::size_t b, const BigNat& n, const EvalBudget& budget) {
  std::size_t steps = 0;
  return eval_impl(b, n, budget, steps);
}

std::optional<BigNat> fgh_iter(std::size_t b, const BigNat& k, const BigNat& n,
                               const EvalBudget& budget) {
  std::size_t steps = 0;
  return iter_impl(b, k, n, budget, steps);
}

// ---------------------------------------------------------------------------
// Normal forms
// ---------------------------------------------------------------------------

AhatTerm ack_nf(const BigNat& m) {
  if (m == 0) return AhatTerm::zero();
  // All intermediate evaluations stay <= m, so this budget never rejects a
  // value we actually need; overflow probes just mean "bigger than m".
  EvalBudget budget{bit_length(m) + 2, 1'000'000'000};
  auto leq_m = [&](const std::optional<BigNat>& v) { return v && *v <= m; };

  std::vector<AhatTerm::Pair> pairs;
  BigNat mi = 1;
  while (mi < m) {
    // largest b with F_b(mi) <= m
    std::size_t b = 0;
    while (leq_m(fgh_eval(b + 1, mi, budget))) ++b;
    BigNat n;
    if (b == 0) {
      // F_0^{1+n}(mi) = mi + 1 + n
      n = m - mi - 1;
      mi = m;
    } else {
      n = 0;
      BigNat v = *fgh_eval(b, mi, budget);
      while (true) {
        auto next = fgh_eval(b, v, budget);
        if (!leq_m(next)) break;
        v = std::move(*next);
        ++n;
      }
      mi = v;
    }
    pairs.emplace_back(Elem::of(static_cast<long long>(b)), ack_nf(n));
  }
  return AhatTerm::comp(std::move(pairs));
}

std::optional<BigNat> ack_eval(const AhatTerm& t, const EvalBudget& budget) {
  if (t.is_zero()) return BigNat(0);
  BigNat v = 1;
  for (const auto& p : t.pairs()) {
    long long idx = p.first.int_value();
    if (idx < 0) throw InvalidTerm("negative index in an F-composition");
    auto e = ack_eval(p.second, budget);
    if (!e) return std::nullopt;
    auto next = fgh_iter(static_cast<std::size_t>(idx), *e + 1, v, budget);
    if (!next) return std::nullopt;
    v = std::move(*next);
  }
  return v;
}

bool ack_contains(std::size_t b, const BigNat& m) {
  if (m == 0) return true;
  AhatTerm t = ack_nf(m);
  if (t.is_one()) return true;
  long long top = t.pairs().front().first.int_value();
  return top >= 0 && static_cast<std::size_t>(top) < b;
}

std::optional<BigNat> ack_apply(const FinMap& f, const BigNat& m, const EvalBudget& budget) {
  if (!f.strictly_increasing()) throw NotIncreasing("index map must be strictly increasing");
  if (!ack_contains(f.domain(), m))
    throw OutOfDomain("value " + m.str() + " lies outside A(" + std::to_string(f.domain()) + ")");
  if (m == 0) return BigNat(0);
  AhatTerm t = ack_nf(m);
  AhatTerm mapped = ahat_apply(embedding_from_fin_map(f), t);
  return ack_eval(mapped, budget);
}

std::vector<std::size_t> ack_supp(std::size_t b, const BigNat& m) {
  if (!ack_contains(b, m))
    throw OutOfDomain("value " + m.str() + " lies outside A(" + std::to_string(b) + ")");
  auto elems = ahat_supp(OrderSpec::naturals(), ack_nf(m));
  std::vector<std::size_t> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(static_cast<std::size_t>(e.int_value()));
  return out;
}

// ---------------------------------------------------------------------------
// mu_b : Ahat(b) -> A(b) and its inverse (declared with the term system)
// ---------------------------------------------------------------------------

std::optional<BigNat> mu_iso(std::size_t b, const AhatTerm& t, const EvalBudget& budget) {
  if (!ahat_valid(OrderSpec::finite(b), t))
    throw InvalidTerm("term is not a valid element of Ahat(fin:" + std::to_string(b) + ")");
  return ack_eval(t, budget);
}

AhatTerm mu_inv(std::size_t b, const BigNat& m) {
  if (!ack_contains(b, m))
    throw OutOfDomain("value " + m.str() + " lies outside A(" + std::to_string(b) + ")");
  return ack_nf(m);
}

// ---------------------------------------------------------------------------
// Dilator interface
// ---------------------------------------------------------------------------

Cardinality AckermannDilator::card(std::size_t b) const {
  auto v = fgh_eval(b, 1, budget_);
  if (!v) return Cardinality::overflow();
  return Cardinality::finite(*v);
}

std::optional<BigNat> AckermannDilator::apply(const FinMap& f, const BigNat& sigma,
                                              const EvalBudget& budget) const {
  std::pair<std::vector<std::size_t>, BigNat> key{f.image, sigma};
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      if (bit_length(it->second) > budget.max_bits) return std::nullopt;
      return it->second;
    }
  }
  auto r = ack_apply(f, sigma, budget);
  if (r) {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (memo_.size() < 500'000) memo_.emplace(std::move(key), *r);
  }
  return r;
}

std::vector<std::size_t> AckermannDilator::supp(std::size_t b, const BigNat& sigma) const {
  return ack_supp(b, sigma);
}

bool AckermannDilator::contains(std::size_t b, const BigNat& sigma) const {
  return ack_contains(b, sigma);
}

}  // namespace ordforge
