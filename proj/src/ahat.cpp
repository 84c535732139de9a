#include "ordforge/ahat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ordforge/errors.hpp"
#include "ordforge/rng.hpp"

namespace ordforge {

AhatTerm AhatTerm::zero() { return AhatTerm{}; }

AhatTerm AhatTerm::one() {
  AhatTerm t;
  t.zero_ = false;
  return t;
}

AhatTerm AhatTerm::comp(std::vector<Pair> pairs_innermost_first) {
  AhatTerm t;
  t.zero_ = false;
  t.pairs_ = std::move(pairs_innermost_first);
  return t;
}

const std::vector<AhatTerm::Pair>& AhatTerm::pairs() const {
  if (zero_) throw InvalidTerm("the term 0 has no composition pairs");
  return pairs_;
}

std::size_t AhatTerm::node_count() const {
  if (zero_) return 1;
  std::size_t n = 1;
  for (const auto& p : pairs_) n += 1 + p.second.node_count();
  return n;
}

bool AhatTerm::operator==(const AhatTerm& o) const {
  return zero_ == o.zero_ && pairs_ == o.pairs_;
}

bool ahat_valid(const OrderSpec& X, const AhatTerm& t) {
  if (t.is_zero()) return true;
  const auto& ps = t.pairs();
  std::vector<AhatTerm::Pair> prefix;
  prefix.reserve(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!valid_elem(X, ps[i].first)) return false;
    // indices grow inward: pairs[0] carries the largest one
    if (i > 0 && compare(X, ps[i].first, ps[i - 1].first) != Ordering::Less) return false;
    if (!ahat_valid(X, ps[i].second)) return false;
    AhatTerm bound = AhatTerm::comp(prefix);
    if (ahat_compare(X, ps[i].second, bound) != Ordering::Less) return false;
    prefix.push_back(ps[i]);
  }
  return true;
}

Ordering ahat_compare(const OrderSpec& X, const AhatTerm& s, const AhatTerm& t) {
  if (s.is_zero() && t.is_zero()) return Ordering::Equal;
  if (s.is_zero()) return Ordering::Less;
  if (t.is_zero()) return Ordering::Greater;
  const auto& a = s.pairs();
  const auto& b = t.pairs();
  std::size_t k = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i) {
    Ordering c = compare(X, a[i].first, b[i].first);
    if (c != Ordering::Equal) return c;
    c = ahat_compare(X, a[i].second, b[i].second);
    if (c != Ordering::Equal) return c;
  }
  if (a.size() < b.size()) return Ordering::Less;
  if (a.size() > b.size()) return Ordering::Greater;
  return Ordering::Equal;
}

AhatTerm ahat_apply(const OrderEmbedding& f, const AhatTerm& t) {
  if (t.is_zero()) return t;
  std::vector<AhatTerm::Pair> out;
  out.reserve(t.pairs().size());
  for (const auto& p : t.pairs()) out.emplace_back(f(p.first), ahat_apply(f, p.second));
  return AhatTerm::comp(std::move(out));
}

namespace {
void collect_supp(const AhatTerm& t, std::vector<Elem>& out) {
  if (t.is_zero()) return;
  for (const auto& p : t.pairs()) {
    out.push_back(p.first);
    collect_supp(p.second, out);
  }
}
}  // namespace

std::vector<Elem> ahat_supp(const OrderSpec& X, const AhatTerm& t) {
  std::vector<Elem> raw;
  collect_supp(t, raw);
  std::sort(raw.begin(), raw.end(),
            [&](const Elem& a, const Elem& b) { return elem_less(X, a, b); });
  raw.erase(std::unique(raw.begin(), raw.end(),
                        [&](const Elem& a, const Elem& b) {
                          return compare(X, a, b) == Ordering::Equal;
                        }),
            raw.end());
  return raw;
}

namespace {

// Builds a composition inside-out so the exponent bound can be checked
// against the prefix as it grows.
AhatTerm gen_rec(const OrderSpec& X, std::size_t cap, SplitMix64& rng, std::size_t depth) {
  if (cap <= 1 || depth > 4 || rng.chance(1, 5)) {
    return rng.chance(1, 2) ? AhatTerm::zero() : AhatTerm::one();
  }
  std::size_t want = 1 + rng.below(3);
  std::vector<Elem> indices;
  for (std::size_t tries = 0; tries < 4 * want && indices.size() < want; ++tries) {
    auto e = sample_elem(X, rng, 6);
    if (!e) break;
    bool dup = false;
    for (const auto& x : indices)
      if (compare(X, x, *e) == Ordering::Equal) dup = true;
    if (!dup) indices.push_back(std::move(*e));
  }
  if (indices.empty()) return rng.chance(1, 2) ? AhatTerm::zero() : AhatTerm::one();
  // innermost index is the largest
  std::sort(indices.begin(), indices.end(),
            [&](const Elem& a, const Elem& b) { return elem_less(X, b, a); });

  std::vector<AhatTerm::Pair> prefix;
  std::size_t used = 1;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    AhatTerm bound = AhatTerm::comp(prefix);
    AhatTerm exp = AhatTerm::zero();
    if (i > 0 && used + 2 < cap) {
      std::size_t sub = (cap - used) / (indices.size() - i + 1);
      for (int attempt = 0; attempt < 3; ++attempt) {
        AhatTerm cand = gen_rec(X, sub, rng, depth + 1);
        if (ahat_compare(X, cand, bound) == Ordering::Less) {
          exp = std::move(cand);
          break;
        }
      }
    }
    used += 1 + exp.node_count();
    prefix.emplace_back(indices[i], std::move(exp));
    if (used >= cap) break;
  }
  return AhatTerm::comp(std::move(prefix));
}

}  // namespace

AhatTerm ahat_gen(const OrderSpec& X, std::size_t size_cap, std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0xa11a7000u);
  AhatTerm t = gen_rec(X, size_cap, rng, 0);
  // contract: always valid, within the cap
  if (t.node_count() > size_cap) return AhatTerm::zero();
  return t;
}

// ---------------------------------------------------------------------------
// Grammar
// ---------------------------------------------------------------------------

namespace {
void format_rec(const AhatTerm& t, std::ostringstream& os) {
  if (t.is_zero()) {
    os << "0";
    return;
  }
  if (t.is_one()) {
    os << "1";
    return;
  }
  os << "A[";
  const auto& ps = t.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) os << ",";
    os << "(" << ps[i].first.str() << ";";
    format_rec(ps[i].second, os);
    os << ")";
  }
  os << "]";
}

AhatTerm parse_ahat_at(const std::string& s, std::size_t& pos);

AhatTerm::Pair parse_pair(const std::string& s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '(') throw SyntaxError("expected '(' opening a pair", pos);
  ++pos;
  Elem idx = parse_elem(s, pos);
  if (pos >= s.size() || s[pos] != ';') throw SyntaxError("expected ';' in pair", pos);
  ++pos;
  AhatTerm exp = parse_ahat_at(s, pos);
  if (pos >= s.size() || s[pos] != ')') throw SyntaxError("expected ')' closing a pair", pos);
  ++pos;
  return {std::move(idx), std::move(exp)};
}

AhatTerm parse_ahat_at(const std::string& s, std::size_t& pos) {
  if (pos < s.size() && s[pos] == '0') {
    ++pos;
    return AhatTerm::zero();
  }
  if (pos < s.size() && s[pos] == '1') {
    ++pos;
    return AhatTerm::one();
  }
  if (s.compare(pos, 2, "A[") == 0) {
    pos += 2;
    std::vector<AhatTerm::Pair> ps;
    ps.push_back(parse_pair(s, pos));
    while (pos < s.size() && s[pos] == ',') {
      ++pos;
      ps.push_back(parse_pair(s, pos));
    }
    if (pos >= s.size() || s[pos] != ']') throw SyntaxError("expected ']' closing a term", pos);
    ++pos;
    return AhatTerm::comp(std::move(ps));
  }
  throw SyntaxError("expected an A-term", pos);
}
}  // namespace

std::string format_ahat(const AhatTerm& t) {
  std::ostringstream os;
  format_rec(t, os);
  return os.str();
}

AhatTerm parse_ahat(const std::string& text) {
  std::size_t pos = 0;
  AhatTerm t = parse_ahat_at(text, pos);
  if (pos != text.size()) throw SyntaxError("trailing input after term", pos);
  return t;
}

}  // namespace ordforge
