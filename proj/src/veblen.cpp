#include "ordforge/veblen.hpp"

#include <algorithm>
#include <sstream>

#include "ordforge/errors.hpp"
#include "ordforge/rng.hpp"

namespace ordforge {

VebTerm VebTerm::zero() { return VebTerm{}; }

VebTerm VebTerm::phi(Elem index, VebTerm arg) {
  VebTerm t;
  t.kind_ = Kind::Phi;
  t.index_ = std::move(index);
  t.kids_.push_back(std::move(arg));
  return t;
}

VebTerm VebTerm::sum(std::vector<VebTerm> summands) {
  std::vector<VebTerm> flat;
  for (auto& s : summands) {
    if (s.is_zero()) continue;
    if (s.kind() == Kind::Sum) {
      for (const auto& inner : s.summands()) flat.push_back(inner);
    } else {
      flat.push_back(std::move(s));
    }
  }
  if (flat.empty()) return zero();
  if (flat.size() == 1) return std::move(flat[0]);
  VebTerm t;
  t.kind_ = Kind::Sum;
  t.kids_ = std::move(flat);
  return t;
}

VebTerm VebTerm::sum_unchecked(std::vector<VebTerm> summands) {
  VebTerm t;
  t.kind_ = Kind::Sum;
  t.kids_ = std::move(summands);
  return t;
}

const Elem& VebTerm::index() const {
  if (kind_ != Kind::Phi) throw InvalidTerm("index of a non-principal term");
  return index_;
}

const VebTerm& VebTerm::arg() const {
  if (kind_ != Kind::Phi) throw InvalidTerm("argument of a non-principal term");
  return kids_[0];
}

const std::vector<VebTerm>& VebTerm::summands() const {
  if (kind_ != Kind::Sum) throw InvalidTerm("summands of a non-sum term");
  return kids_;
}

std::size_t VebTerm::node_count() const {
  std::size_t n = 1;
  for (const auto& k : kids_) n += k.node_count();
  return n;
}

bool VebTerm::operator==(const VebTerm& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == Kind::Phi && index_ != o.index_) return false;
  return kids_ == o.kids_;
}

Elem veb_h(const VebTerm& t) {
  if (t.kind() == VebTerm::Kind::Phi) return t.index();
  return Elem::of(0);  // bottom of 1+X
}

bool veb_valid(const OrderSpec& X, const VebTerm& t) {
  OrderSpec one_plus = OrderSpec::one_plus(X);
  switch (t.kind()) {
    case VebTerm::Kind::Zero:
      return true;
    case VebTerm::Kind::Phi: {
      if (!valid_elem(one_plus, t.index())) return false;
      if (!veb_valid(X, t.arg())) return false;
      return compare(one_plus, veb_h(t.arg()), t.index()) != Ordering::Greater;
    }
    case VebTerm::Kind::Sum: {
      const auto& ss = t.summands();
      if (ss.size() < 2) return false;
      for (std::size_t i = 0; i < ss.size(); ++i) {
        if (ss[i].kind() != VebTerm::Kind::Phi) return false;
        if (!veb_valid(X, ss[i])) return false;
        if (i > 0 && veb_compare(X, ss[i - 1], ss[i]) == Ordering::Less) return false;
      }
      return true;
    }
  }
  return false;
}

Ordering veb_compare(const OrderSpec& X, const VebTerm& s, const VebTerm& t) {
  using K = VebTerm::Kind;
  if (s.is_zero() && t.is_zero()) return Ordering::Equal;
  if (s.is_zero()) return Ordering::Less;
  if (t.is_zero()) return Ordering::Greater;

  if (s.kind() == K::Phi && t.kind() == K::Phi) {
    OrderSpec one_plus = OrderSpec::one_plus(X);
    Ordering ci = compare(one_plus, s.index(), t.index());
    if (ci == Ordering::Less) {
      // phi_x(a) < phi_y(b) with x < y iff a < phi_y(b)
      return veb_compare(X, s.arg(), t) == Ordering::Less ? Ordering::Less : Ordering::Greater;
    }
    if (ci == Ordering::Greater) {
      return veb_compare(X, s, t.arg()) == Ordering::Less ? Ordering::Less : Ordering::Greater;
    }
    return veb_compare(X, s.arg(), t.arg());
  }

  if (s.kind() == K::Sum && t.kind() == K::Sum) {
    const auto& a = s.summands();
    const auto& b = t.summands();
    std::size_t k = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < k; ++i) {
      Ordering c = veb_compare(X, a[i], b[i]);
      if (c != Ordering::Equal) return c;
    }
    if (a.size() < b.size()) return Ordering::Less;
    if (a.size() > b.size()) return Ordering::Greater;
    return Ordering::Equal;
  }

  // principal vs sum: the principal is additively principal, so the sum
  // compares through its leading summand
  if (s.kind() == K::Sum) {
    // s < t iff head(s) < t
    return veb_compare(X, s.summands().front(), t) == Ordering::Less ? Ordering::Less
                                                                     : Ordering::Greater;
  }
  // s principal, t sum: s < t iff s <= head(t)
  return veb_compare(X, s, t.summands().front()) != Ordering::Greater ? Ordering::Less
                                                                      : Ordering::Greater;
}

VebTerm veb_add(const OrderSpec& X, const VebTerm& s, const VebTerm& t) {
  if (s.is_zero()) return t;
  if (t.is_zero()) return s;
  auto parts = [](const VebTerm& u) -> std::vector<VebTerm> {
    if (u.kind() == VebTerm::Kind::Sum) return u.summands();
    return {u};
  };
  std::vector<VebTerm> left = parts(s);
  std::vector<VebTerm> right = parts(t);
  std::vector<VebTerm> out;
  for (const auto& p : left) {
    if (veb_compare(X, p, right.front()) != Ordering::Less) out.push_back(p);
  }
  for (auto& p : right) out.push_back(std::move(p));
  return VebTerm::sum(std::move(out));
}

// ---------------------------------------------------------------------------
// Generator
// ---------------------------------------------------------------------------

namespace {

VebTerm gen_rec(const OrderSpec& X, std::size_t cap, SplitMix64& rng, std::size_t depth) {
  OrderSpec one_plus = OrderSpec::one_plus(X);
  if (cap <= 1 || depth > 5) return rng.chance(1, 3) ? VebTerm::zero()
                                                     : VebTerm::phi(Elem::of(0), VebTerm::zero());
  std::uint64_t pick = rng.below(6);
  if (pick == 0) return VebTerm::zero();
  if (pick <= 3 || cap < 5) {
    VebTerm arg = gen_rec(X, cap - 1, rng, depth + 1);
    Elem floor = veb_h(arg);
    // sample an index >= h(arg) in 1+X; h(arg) itself always qualifies
    Elem idx = floor;
    for (int tries = 0; tries < 3; ++tries) {
      auto cand = sample_elem(one_plus, rng, 5);
      if (cand && compare(one_plus, *cand, floor) != Ordering::Less) {
        idx = std::move(*cand);
        break;
      }
    }
    return VebTerm::phi(std::move(idx), std::move(arg));
  }
  std::size_t n = 2 + rng.below(2);
  std::vector<VebTerm> ss;
  for (std::size_t i = 0; i < n; ++i) {
    VebTerm p = gen_rec(X, (cap - 1) / n, rng, depth + 1);
    if (p.kind() != VebTerm::Kind::Phi) p = VebTerm::phi(Elem::of(0), VebTerm::zero());
    ss.push_back(std::move(p));
  }
  std::sort(ss.begin(), ss.end(), [&](const VebTerm& a, const VebTerm& b) {
    return veb_compare(X, b, a) == Ordering::Less;  // weakly decreasing
  });
  return VebTerm::sum(std::move(ss));
}

}  // namespace

VebTerm veb_gen(const OrderSpec& X, std::size_t size_cap, std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0x7eb1e70ULL);
  VebTerm t = gen_rec(X, size_cap, rng, 0);
  if (t.node_count() > size_cap) return VebTerm::zero();
  return t;
}

// ---------------------------------------------------------------------------
// Grammar
// ---------------------------------------------------------------------------

namespace {

void format_rec(const VebTerm& t, std::ostringstream& os) {
  switch (t.kind()) {
    case VebTerm::Kind::Zero: os << "0"; return;
    case VebTerm::Kind::Phi:
      os << "p[" << t.index().str() << "](";
      format_rec(t.arg(), os);
      os << ")";
      return;
    case VebTerm::Kind::Sum: {
      const auto& ss = t.summands();
      for (std::size_t i = 0; i < ss.size(); ++i) {
        if (i) os << "+";
        format_rec(ss[i], os);
      }
      return;
    }
  }
}

VebTerm parse_prin(const std::string& s, std::size_t& pos) {
  if (s.compare(pos, 2, "p[") != 0) throw SyntaxError("expected \"p[\"", pos);
  pos += 2;
  Elem idx = parse_elem(s, pos);
  if (pos >= s.size() || s[pos] != ']') throw SyntaxError("expected ']' after index", pos);
  ++pos;
  if (pos >= s.size() || s[pos] != '(') throw SyntaxError("expected '(' before argument", pos);
  ++pos;
  VebTerm arg;
  if (pos < s.size() && s[pos] == '0' && pos + 1 < s.size() && s[pos + 1] == ')') {
    arg = VebTerm::zero();
    ++pos;
  } else {
    // a principal term or sum as the argument
    std::vector<VebTerm> ss;
    ss.push_back(parse_prin(s, pos));
    while (pos < s.size() && s[pos] == '+') {
      ++pos;
      ss.push_back(parse_prin(s, pos));
    }
    arg = ss.size() == 1 ? std::move(ss[0]) : VebTerm::sum(std::move(ss));
  }
  if (pos >= s.size() || s[pos] != ')') throw SyntaxError("expected ')' after argument", pos);
  ++pos;
  return VebTerm::phi(std::move(idx), std::move(arg));
}

}  // namespace

std::string format_veblen(const VebTerm& t) {
  std::ostringstream os;
  format_rec(t, os);
  return os.str();
}

VebTerm parse_veblen(const std::string& text) {
  std::size_t pos = 0;
  VebTerm t;
  if (pos < text.size() && text[pos] == '0') {
    ++pos;
    t = VebTerm::zero();
  } else {
    std::vector<VebTerm> ss;
    ss.push_back(parse_prin(text, pos));
    while (pos < text.size() && text[pos] == '+') {
      ++pos;
      ss.push_back(parse_prin(text, pos));
    }
    t = ss.size() == 1 ? std::move(ss[0]) : VebTerm::sum(std::move(ss));
  }
  if (pos != text.size()) throw SyntaxError("trailing input after term", pos);
  return t;
}

}  // namespace ordforge
