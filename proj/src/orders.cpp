#include "ordforge/orders.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ordforge {

// ---------------------------------------------------------------------------
// Elem
// ---------------------------------------------------------------------------

Elem Elem::of(long long v) {
  Elem e;
  e.kind_ = Kind::Int;
  e.iv_ = v;
  return e;
}

Elem Elem::pair(Elem l, Elem r) {
  Elem e;
  e.kind_ = Kind::Pair;
  e.kids_.push_back(std::move(l));
  e.kids_.push_back(std::move(r));
  return e;
}

Elem Elem::seq(std::vector<Elem> items) {
  Elem e;
  e.kind_ = Kind::Seq;
  e.kids_ = std::move(items);
  return e;
}

Elem Elem::limit_pt(std::size_t stage, std::size_t index) {
  Elem e;
  e.kind_ = Kind::LimitPt;
  e.stage_ = stage;
  e.index_ = index;
  return e;
}

long long Elem::int_value() const {
  if (kind_ != Kind::Int) throw InvalidElement("expected integer element, got " + str());
  return iv_;
}

const Elem& Elem::left() const {
  if (kind_ != Kind::Pair) throw InvalidElement("expected pair element, got " + str());
  return kids_[0];
}

const Elem& Elem::right() const {
  if (kind_ != Kind::Pair) throw InvalidElement("expected pair element, got " + str());
  return kids_[1];
}

const std::vector<Elem>& Elem::items() const {
  if (kind_ != Kind::Seq) throw InvalidElement("expected sequence element, got " + str());
  return kids_;
}

std::size_t Elem::stage() const {
  if (kind_ != Kind::LimitPt) throw InvalidElement("expected limit point, got " + str());
  return stage_;
}

std::size_t Elem::index() const {
  if (kind_ != Kind::LimitPt) throw InvalidElement("expected limit point, got " + str());
  return index_;
}

bool Elem::operator==(const Elem& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Int: return iv_ == o.iv_;
    case Kind::LimitPt: return stage_ == o.stage_ && index_ == o.index_;
    case Kind::Pair:
    case Kind::Seq: return kids_ == o.kids_;
  }
  return false;
}

std::string Elem::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Int: os << iv_; break;
    case Kind::Pair: os << "(" << kids_[0].str() << "," << kids_[1].str() << ")"; break;
    case Kind::Seq: {
      os << "<";
      for (std::size_t i = 0; i < kids_.size(); ++i) {
        if (i) os << ",";
        os << kids_[i].str();
      }
      os << ">";
      break;
    }
    case Kind::LimitPt: os << "{" << stage_ << ";" << index_ << "}"; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// OrderSpec
// ---------------------------------------------------------------------------

struct OrderSpec::Node {
  Kind kind;
  std::size_t n = 0;
  std::vector<OrderSpec> kids;
  std::shared_ptr<const LimitCarrier> limit;
};

namespace {
std::shared_ptr<const OrderSpec::Node> make_node(OrderSpec::Kind k, std::size_t n,
                                                 std::vector<OrderSpec> kids,
                                                 std::shared_ptr<const LimitCarrier> lim) {
  auto node = std::make_shared<OrderSpec::Node>();
  node->kind = k;
  node->n = n;
  node->kids = std::move(kids);
  node->limit = std::move(lim);
  return node;
}
}  // namespace

OrderSpec OrderSpec::finite(std::size_t n) {
  return OrderSpec(make_node(Kind::FiniteSegment, n, {}, {}));
}
OrderSpec OrderSpec::naturals() { return OrderSpec(make_node(Kind::Naturals, 0, {}, {})); }
OrderSpec OrderSpec::one_plus(OrderSpec inner) {
  return OrderSpec(make_node(Kind::OnePlus, 0, {std::move(inner)}, {}));
}
OrderSpec OrderSpec::two_plus(OrderSpec inner) {
  return OrderSpec(make_node(Kind::TwoPlus, 0, {std::move(inner)}, {}));
}
OrderSpec OrderSpec::product(OrderSpec l, OrderSpec r) {
  return OrderSpec(make_node(Kind::Product, 0, {std::move(l), std::move(r)}, {}));
}
OrderSpec OrderSpec::desc_seq(OrderSpec inner) {
  return OrderSpec(make_node(Kind::DescSeq, 0, {std::move(inner)}, {}));
}
OrderSpec OrderSpec::direct_limit(std::shared_ptr<const LimitCarrier> lim) {
  return OrderSpec(make_node(Kind::DirectLimit, 0, {}, std::move(lim)));
}

OrderSpec::Kind OrderSpec::kind() const { return node_->kind; }
std::size_t OrderSpec::segment_size() const { return node_->n; }
const OrderSpec& OrderSpec::inner() const { return node_->kids.at(0); }
const OrderSpec& OrderSpec::left() const { return node_->kids.at(0); }
const OrderSpec& OrderSpec::right() const { return node_->kids.at(1); }
const LimitCarrier& OrderSpec::limit() const { return *node_->limit; }

std::string OrderSpec::str() const {
  switch (kind()) {
    case Kind::FiniteSegment: return "fin:" + std::to_string(segment_size());
    case Kind::Naturals: return "nat";
    case Kind::OnePlus: return "1+" + inner().str();
    case Kind::TwoPlus: return "2+" + inner().str();
    case Kind::Product: return "(" + left().str() + ")x(" + right().str() + ")";
    case Kind::DescSeq: return "desc:" + inner().str();
    case Kind::DirectLimit: return "limit[" + limit().describe() + "]";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Validity and comparison
// ---------------------------------------------------------------------------

namespace {

// Decode an element of 1+X / 2+X back into X; nullopt means "a bottom".
// bottoms: number of added minima (1 or 2).
std::optional<Elem> decode_plus(const Elem& e, int bottoms) {
  if (e.kind() == Elem::Kind::Int) {
    long long v = e.int_value();
    long long lo = bottoms == 2 ? -1 : 0;
    if (v < lo) throw InvalidElement("integer element below the bottom of the order");
    if (v <= (bottoms == 2 ? 0 : 0) && v >= lo) {
      if (bottoms == 2 && (v == -1 || v == 0)) return std::nullopt;
      if (bottoms == 1 && v == 0) return std::nullopt;
    }
    return Elem::of(v - 1);
  }
  return e;  // non-Int inner elements pass through
}

// Rank of a bottom element; larger = higher. Non-bottoms get the max rank.
int plus_rank(const Elem& e, int bottoms) {
  if (e.kind() == Elem::Kind::Int) {
    long long v = e.int_value();
    if (bottoms == 2) {
      if (v == -1) return 0;
      if (v == 0) return 1;
      return 2;
    }
    if (v == 0) return 0;
    return 1;
  }
  return bottoms;  // pass-through inner element sits above all bottoms
}

}  // namespace

bool valid_elem(const OrderSpec& order, const Elem& e) {
  try {
    switch (order.kind()) {
      case OrderSpec::Kind::FiniteSegment: {
        if (!e.is_int()) return false;
        long long v = e.int_value();
        return v >= 0 && static_cast<std::size_t>(v) < order.segment_size();
      }
      case OrderSpec::Kind::Naturals:
        return e.is_int() && e.int_value() >= 0;
      case OrderSpec::Kind::OnePlus:
      case OrderSpec::Kind::TwoPlus: {
        int bottoms = order.kind() == OrderSpec::Kind::TwoPlus ? 2 : 1;
        if (e.is_int() && e.int_value() < (bottoms == 2 ? -1 : 0)) return false;
        auto dec = decode_plus(e, bottoms);
        if (!dec) return true;
        return valid_elem(order.inner(), *dec);
      }
      case OrderSpec::Kind::Product:
        return e.kind() == Elem::Kind::Pair && valid_elem(order.left(), e.left()) &&
               valid_elem(order.right(), e.right());
      case OrderSpec::Kind::DescSeq: {
        if (e.kind() != Elem::Kind::Seq) return false;
        const auto& items = e.items();
        for (std::size_t i = 0; i < items.size(); ++i) {
          if (!valid_elem(order.inner(), items[i])) return false;
          if (i > 0 && compare(order.inner(), items[i - 1], items[i]) != Ordering::Greater)
            return false;
        }
        return true;
      }
      case OrderSpec::Kind::DirectLimit:
        return e.kind() == Elem::Kind::LimitPt && order.limit().valid(e);
    }
  } catch (const InvalidElement&) {
    return false;
  }
  return false;
}

Ordering compare(const OrderSpec& order, const Elem& a, const Elem& b) {
  switch (order.kind()) {
    case OrderSpec::Kind::FiniteSegment:
    case OrderSpec::Kind::Naturals: {
      long long va = a.int_value(), vb = b.int_value();
      if (va < 0 || vb < 0) throw InvalidElement("negative element of a segment order");
      if (order.kind() == OrderSpec::Kind::FiniteSegment) {
        auto n = static_cast<long long>(order.segment_size());
        if (va >= n || vb >= n) throw InvalidElement("element outside fin:" + std::to_string(n));
      }
      return va < vb ? Ordering::Less : va > vb ? Ordering::Greater : Ordering::Equal;
    }
    case OrderSpec::Kind::OnePlus:
    case OrderSpec::Kind::TwoPlus: {
      int bottoms = order.kind() == OrderSpec::Kind::TwoPlus ? 2 : 1;
      auto da = decode_plus(a, bottoms);
      auto db = decode_plus(b, bottoms);
      if (!da || !db) {
        int ra = da ? bottoms : plus_rank(a, bottoms);
        int rb = db ? bottoms : plus_rank(b, bottoms);
        return ra < rb ? Ordering::Less : ra > rb ? Ordering::Greater : Ordering::Equal;
      }
      return compare(order.inner(), *da, *db);
    }
    case OrderSpec::Kind::Product: {
      Ordering l = compare(order.left(), a.left(), b.left());
      if (l != Ordering::Equal) return l;
      return compare(order.right(), a.right(), b.right());
    }
    case OrderSpec::Kind::DescSeq: {
      const auto& xs = a.items();
      const auto& ys = b.items();
      std::size_t k = std::min(xs.size(), ys.size());
      for (std::size_t i = 0; i < k; ++i) {
        Ordering c = compare(order.inner(), xs[i], ys[i]);
        if (c != Ordering::Equal) return c;
      }
      // proper prefix is smaller
      if (xs.size() < ys.size()) return Ordering::Less;
      if (xs.size() > ys.size()) return Ordering::Greater;
      return Ordering::Equal;
    }
    case OrderSpec::Kind::DirectLimit:
      return order.limit().compare(a, b);
  }
  throw InvalidElement("unknown order kind");
}

// ---------------------------------------------------------------------------
// FinMap
// ---------------------------------------------------------------------------

std::size_t FinMap::operator()(std::size_t i) const {
  if (i >= image.size()) throw OutOfDomain("fin-map argument " + std::to_string(i));
  return image[i];
}

bool FinMap::strictly_increasing() const {
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] >= codomain) return false;
    if (i > 0 && image[i - 1] >= image[i]) return false;
  }
  return true;
}

FinMap FinMap::identity(std::size_t n) {
  FinMap f;
  f.codomain = n;
  f.image.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.image[i] = i;
  return f;
}

FinMap FinMap::empty_into(std::size_t n) {
  FinMap f;
  f.codomain = n;
  return f;
}

FinMap FinMap::shifted(std::size_t n, std::size_t amount, std::size_t codomain) {
  FinMap f;
  f.codomain = codomain;
  f.image.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.image[i] = i + amount;
  return f;
}

FinMap FinMap::compose_after(const FinMap& inner) const {
  FinMap r;
  r.codomain = codomain;
  r.image.reserve(inner.domain());
  for (std::size_t i = 0; i < inner.domain(); ++i) r.image.push_back((*this)(inner(i)));
  return r;
}

std::string FinMap::str() const {
  std::ostringstream os;
  os << domain() << "->" << codomain << "[";
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i) os << ",";
    os << image[i];
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Finite suborders
// ---------------------------------------------------------------------------

const Elem& FiniteEnum::operator()(std::size_t i) const {
  if (i >= elems.size()) throw OutOfDomain("enumeration argument " + std::to_string(i));
  return elems[i];
}

std::vector<Elem> sort_unique(const OrderSpec& order, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end(),
            [&](const Elem& a, const Elem& b) { return elem_less(order, a, b); });
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (compare(order, elems[i - 1], elems[i]) == Ordering::Equal)
      throw InvalidElement("duplicate element in finite set: " + elems[i].str());
  }
  return elems;
}

std::vector<Elem> merge_union(const OrderSpec& order, const std::vector<Elem>& a,
                              const std::vector<Elem>& b) {
  std::vector<Elem> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Ordering c = compare(order, a[i], b[j]);
    if (c == Ordering::Less) {
      out.push_back(a[i++]);
    } else if (c == Ordering::Greater) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

std::optional<std::size_t> position_of(const OrderSpec& order, const std::vector<Elem>& sorted,
                                       const Elem& x) {
  std::size_t lo = 0, hi = sorted.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    Ordering c = compare(order, sorted[mid], x);
    if (c == Ordering::Equal) return mid;
    if (c == Ordering::Less)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

FiniteEnum enum_embedding(const OrderSpec& order, std::vector<Elem> a) {
  return FiniteEnum{sort_unique(order, std::move(a))};
}

FinMap induced_morphism(const OrderSpec& order, const std::vector<Elem>& a,
                        const std::vector<Elem>& b, const std::vector<Elem>& images) {
  if (images.size() != a.size()) throw InvalidElement("morphism images do not cover the domain");
  FinMap f;
  f.codomain = b.size();
  f.image.reserve(a.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i > 0 && compare(order, images[i - 1], images[i]) != Ordering::Less)
      throw NotIncreasing("morphism images must be strictly increasing");
    auto pos = position_of(order, b, images[i]);
    if (!pos) throw InvalidElement("morphism image " + images[i].str() + " lies outside the codomain set");
    f.image.push_back(*pos);
  }
  return f;
}

FinMap induced_inclusion(const OrderSpec& order, const std::vector<Elem>& a,
                         const std::vector<Elem>& b) {
  return induced_morphism(order, a, b, a);
}

OrderEmbedding identity_embedding(const OrderSpec& order) {
  return OrderEmbedding{order, order, [](const Elem& e) { return e; }};
}

OrderEmbedding embedding_from_fin_map(const FinMap& f) {
  return OrderEmbedding{OrderSpec::finite(f.domain()), OrderSpec::finite(f.codomain),
                        [f](const Elem& e) {
                          return Elem::of(static_cast<long long>(
                              f(static_cast<std::size_t>(e.int_value()))));
                        }};
}

OrderEmbedding embedding_from_enum(const OrderSpec& target, FiniteEnum e) {
  std::size_t n = e.size();
  return OrderEmbedding{OrderSpec::finite(n), target,
                        [e = std::move(e)](const Elem& x) {
                          return e(static_cast<std::size_t>(x.int_value()));
                        }};
}

// ---------------------------------------------------------------------------
// Enumeration and sampling
// ---------------------------------------------------------------------------

std::optional<std::vector<Elem>> enumerate_finite(const OrderSpec& order, std::size_t cap) {
  switch (order.kind()) {
    case OrderSpec::Kind::FiniteSegment: {
      std::size_t n = order.segment_size();
      if (n > cap) return std::nullopt;
      std::vector<Elem> out;
      for (std::size_t i = 0; i < n; ++i) out.push_back(Elem::of(static_cast<long long>(i)));
      return out;
    }
    case OrderSpec::Kind::Naturals:
      return std::nullopt;
    case OrderSpec::Kind::OnePlus:
    case OrderSpec::Kind::TwoPlus: {
      int bottoms = order.kind() == OrderSpec::Kind::TwoPlus ? 2 : 1;
      auto in = enumerate_finite(order.inner(), cap);
      if (!in || in->size() + bottoms > cap) return std::nullopt;
      std::vector<Elem> out;
      if (bottoms == 2) out.push_back(Elem::of(-1));
      out.push_back(Elem::of(0));
      for (const auto& e : *in)
        out.push_back(e.is_int() ? Elem::of(e.int_value() + 1) : e);
      return out;
    }
    case OrderSpec::Kind::Product: {
      auto l = enumerate_finite(order.left(), cap);
      auto r = enumerate_finite(order.right(), cap);
      if (!l || !r) return std::nullopt;
      if (!l->empty() && r->size() > 0 && l->size() > cap / std::max<std::size_t>(r->size(), 1))
        return std::nullopt;
      std::vector<Elem> out;
      for (const auto& x : *l)
        for (const auto& y : *r) out.push_back(Elem::pair(x, y));
      if (out.size() > cap) return std::nullopt;
      return out;
    }
    case OrderSpec::Kind::DescSeq: {
      auto in = enumerate_finite(order.inner(), 20);
      if (!in) return std::nullopt;
      std::size_t n = in->size();
      if (n >= 8 * sizeof(std::size_t) || (std::size_t{1} << n) > cap) return std::nullopt;
      std::vector<Elem> out;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Elem> items;
        for (std::size_t i = n; i-- > 0;)
          if (mask & (std::size_t{1} << i)) items.push_back((*in)[i]);
        out.push_back(Elem::seq(std::move(items)));
      }
      std::sort(out.begin(), out.end(),
                [&](const Elem& a, const Elem& b) { return elem_less(order, a, b); });
      return out;
    }
    case OrderSpec::Kind::DirectLimit: {
      auto out = order.limit().carrier();
      if (out.size() > cap) return std::nullopt;
      std::sort(out.begin(), out.end(),
                [&](const Elem& a, const Elem& b) { return elem_less(order, a, b); });
      return out;
    }
  }
  return std::nullopt;
}

std::optional<Elem> sample_elem(const OrderSpec& order, SplitMix64& rng, std::size_t magnitude) {
  switch (order.kind()) {
    case OrderSpec::Kind::FiniteSegment: {
      std::size_t n = order.segment_size();
      if (n == 0) return std::nullopt;
      return Elem::of(static_cast<long long>(rng.below(n)));
    }
    case OrderSpec::Kind::Naturals:
      return Elem::of(static_cast<long long>(rng.below(magnitude + 1)));
    case OrderSpec::Kind::OnePlus:
    case OrderSpec::Kind::TwoPlus: {
      int bottoms = order.kind() == OrderSpec::Kind::TwoPlus ? 2 : 1;
      if (rng.chance(1, 4)) {
        if (bottoms == 2) return Elem::of(rng.chance(1, 2) ? -1 : 0);
        return Elem::of(0);
      }
      auto in = sample_elem(order.inner(), rng, magnitude);
      if (!in) return Elem::of(0);
      return in->is_int() ? Elem::of(in->int_value() + 1) : *in;
    }
    case OrderSpec::Kind::Product: {
      auto l = sample_elem(order.left(), rng, magnitude);
      auto r = sample_elem(order.right(), rng, magnitude);
      if (!l || !r) return std::nullopt;
      return Elem::pair(std::move(*l), std::move(*r));
    }
    case OrderSpec::Kind::DescSeq: {
      std::size_t want = rng.below(4);
      std::vector<Elem> items;
      for (std::size_t i = 0; i < 3 * want && items.size() < want; ++i) {
        auto e = sample_elem(order.inner(), rng, magnitude);
        if (!e) break;
        bool dup = false;
        for (const auto& x : items)
          if (compare(order.inner(), x, *e) == Ordering::Equal) dup = true;
        if (!dup) items.push_back(std::move(*e));
      }
      std::sort(items.begin(), items.end(), [&](const Elem& a, const Elem& b) {
        return elem_less(order.inner(), b, a);  // descending
      });
      return Elem::seq(std::move(items));
    }
    case OrderSpec::Kind::DirectLimit: {
      auto pts = order.limit().carrier();
      if (pts.empty()) return std::nullopt;
      return pts[rng.below(pts.size())];
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

bool eat(const std::string& s, std::size_t& pos, const std::string& tok) {
  if (s.compare(pos, tok.size(), tok) == 0) {
    pos += tok.size();
    return true;
  }
  return false;
}

long long parse_int(const std::string& s, std::size_t& pos) {
  skip_ws(s, pos);
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
    throw SyntaxError("expected integer", start);
  return std::stoll(s.substr(start, pos - start));
}

OrderSpec parse_order_at(const std::string& s, std::size_t& pos) {
  skip_ws(s, pos);
  if (eat(s, pos, "fin:")) {
    long long n = parse_int(s, pos);
    if (n < 0) throw SyntaxError("fin: needs a non-negative size", pos);
    return OrderSpec::finite(static_cast<std::size_t>(n));
  }
  if (eat(s, pos, "nat")) return OrderSpec::naturals();
  if (eat(s, pos, "1+")) return OrderSpec::one_plus(parse_order_at(s, pos));
  if (eat(s, pos, "2+")) return OrderSpec::two_plus(parse_order_at(s, pos));
  if (eat(s, pos, "desc:")) return OrderSpec::desc_seq(parse_order_at(s, pos));
  if (eat(s, pos, "(")) {
    OrderSpec l = parse_order_at(s, pos);
    skip_ws(s, pos);
    if (!eat(s, pos, ")x(")) throw SyntaxError("expected \")x(\" in product", pos);
    OrderSpec r = parse_order_at(s, pos);
    skip_ws(s, pos);
    if (!eat(s, pos, ")")) throw SyntaxError("unbalanced product parentheses", pos);
    return OrderSpec::product(std::move(l), std::move(r));
  }
  throw SyntaxError("unrecognized order literal", pos);
}

}  // namespace

Elem lift_elem(const Elem& e) {
  if (e.is_int()) return Elem::of(e.int_value() + 1);
  return e;
}

OrderSpec parse_order(const std::string& text) {
  std::size_t pos = 0;
  OrderSpec s = parse_order_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw SyntaxError("trailing input after order literal", pos);
  return s;
}

Elem parse_elem(const std::string& text, std::size_t& pos) {
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    Elem l = parse_elem(text, pos);
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != ',') throw SyntaxError("expected ',' in pair", pos);
    ++pos;
    Elem r = parse_elem(text, pos);
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != ')') throw SyntaxError("expected ')' in pair", pos);
    ++pos;
    return Elem::pair(std::move(l), std::move(r));
  }
  return Elem::of(parse_int(text, pos));
}

Elem parse_elem(const std::string& text) {
  std::size_t pos = 0;
  Elem e = parse_elem(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw SyntaxError("trailing input after element", pos);
  return e;
}

}  // namespace ordforge
