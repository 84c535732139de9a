#include "ordforge/goodstein.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "ordforge/binary.hpp"
#include "ordforge/errors.hpp"

namespace ordforge {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Base and coefficient specs
// ---------------------------------------------------------------------------

BaseSpec BaseSpec::constant(std::size_t v) {
  BaseSpec b;
  b.kind = Kind::Constant;
  b.value = v;
  return b;
}

BaseSpec BaseSpec::affine(std::size_t init, std::size_t slope) {
  BaseSpec b;
  b.kind = Kind::Affine;
  b.init = init;
  b.slope = slope;
  return b;
}

BaseSpec BaseSpec::table(std::vector<std::size_t> prefix, std::size_t tail) {
  BaseSpec b;
  b.kind = Kind::Table;
  b.prefix = std::move(prefix);
  b.tail = tail;
  return b;
}

std::size_t BaseSpec::at(std::size_t i) const {
  switch (kind) {
    case Kind::Constant: return value;
    case Kind::Affine: return init + slope * i;
    case Kind::Table: return i < prefix.size() ? prefix[i] : tail;
  }
  return 0;
}

CoeffSpec CoeffSpec::identity() { return CoeffSpec{}; }

CoeffSpec CoeffSpec::shift(std::size_t amount) {
  CoeffSpec c;
  c.kind = Kind::Shift;
  c.amount = amount;
  return c;
}

CoeffSpec CoeffSpec::table(std::vector<FinMap> maps) {
  CoeffSpec c;
  c.kind = Kind::Table;
  c.maps = std::move(maps);
  return c;
}

CoeffSpec CoeffSpec::from_order(OrderSpec order, std::vector<std::vector<Elem>> sets, Elem star) {
  CoeffSpec c;
  c.kind = Kind::FromOrder;
  c.order = std::move(order);
  c.sets = std::move(sets);
  c.star = std::move(star);
  return c;
}

std::size_t GoodsteinSystem::base_at(std::size_t i) const { return base.at(i); }

namespace {

// Accumulated set {star} u a_0 u ... u a_i for FromOrder coefficients.
std::vector<Elem> accumulated_set(const CoeffSpec& c, std::size_t i) {
  std::vector<Elem> acc{*c.star};
  for (std::size_t k = 0; k <= i && k < c.sets.size(); ++k)
    acc = merge_union(c.order, acc, sort_unique(c.order, c.sets[k]));
  return acc;
}

}  // namespace

FinMap GoodsteinSystem::coeff_at(std::size_t i) const {
  std::size_t dom = base_at(i), cod = base_at(i + 1);
  switch (coeff.kind) {
    case CoeffSpec::Kind::Identity: {
      FinMap f = FinMap::shifted(dom, 0, cod);
      return f;
    }
    case CoeffSpec::Kind::Shift:
      return FinMap::shifted(dom, coeff.amount, cod);
    case CoeffSpec::Kind::Table:
      if (i < coeff.maps.size()) return coeff.maps[i];
      return FinMap::shifted(dom, 0, cod);
    case CoeffSpec::Kind::FromOrder: {
      auto a = accumulated_set(coeff, i);
      auto b = accumulated_set(coeff, i + 1);
      return induced_inclusion(coeff.order, a, b);
    }
  }
  return FinMap::identity(dom);
}

FinMap GoodsteinSystem::coeff_between(std::size_t i, std::size_t j) const {
  if (j < i) throw OutOfDomain("coeff_between needs i <= j");
  FinMap f = FinMap::identity(base_at(i));
  f.codomain = base_at(i);
  for (std::size_t k = i; k < j; ++k) f = coeff_at(k).compose_after(f);
  return f;
}

ValidationResult validate_system(const GoodsteinSystem& sys, std::size_t horizon) {
  if (sys.base_at(0) == 0) return {false, "b(0)>0 violated"};
  // constant work per index for the procedural coefficient kinds, so large
  // horizons stay cheap; explicit tables and from-order prefixes are checked
  // in full
  for (std::size_t i = 0; i < horizon; ++i) {
    std::size_t bi = sys.base_at(i), bn = sys.base_at(i + 1);
    if (bn < bi) return {false, "base not non-decreasing at i=" + std::to_string(i)};
    std::string tag = "c_" + std::to_string(i);
    switch (sys.coeff.kind) {
      case CoeffSpec::Kind::Identity:
        break;  // bi <= bn already holds
      case CoeffSpec::Kind::Shift:
        if (bi > 0 && bi - 1 + sys.coeff.amount >= bn) return {false, tag + " codomain overflow"};
        break;
      case CoeffSpec::Kind::Table: {
        if (i >= sys.coeff.maps.size()) break;  // identity tail
        const FinMap& c = sys.coeff.maps[i];
        if (c.domain() != bi) return {false, tag + " domain mismatch"};
        if (c.codomain != bn || !c.strictly_increasing())
          return {false, tag + " codomain overflow"};
        break;
      }
      case CoeffSpec::Kind::FromOrder: {
        if (i > sys.coeff.sets.size()) break;  // identity tail
        try {
          if (accumulated_set(sys.coeff, i).size() != bi)
            return {false, tag + " domain mismatch with accumulated sets"};
          if (accumulated_set(sys.coeff, i + 1).size() != bn)
            return {false, tag + " codomain mismatch with accumulated sets"};
        } catch (const std::exception& e) {
          return {false, tag + " unavailable: " + std::string(e.what())};
        }
        break;
      }
    }
  }
  return {true, ""};
}

// ---------------------------------------------------------------------------
// Direct limits
// ---------------------------------------------------------------------------

std::shared_ptr<const DirectLimitOrder> DirectLimitOrder::build(const GoodsteinSystem& sys,
                                                                std::size_t depth) {
  auto v = validate_system(sys, depth);
  if (!v.ok) throw InvalidElement("not a well-shaped system: " + v.reason);
  auto lim = std::make_shared<DirectLimitOrder>();
  for (std::size_t i = 0; i <= depth; ++i) lim->bases_.push_back(sys.base_at(i));
  for (std::size_t i = 0; i < depth; ++i) lim->coeffs_.push_back(sys.coeff_at(i));
  return lim;
}

// c_{ik}(n) for i <= k <= depth
std::size_t DirectLimitOrder::push_to(std::size_t i, std::size_t n, std::size_t k) const {
  std::size_t v = n;
  for (std::size_t s = i; s < k; ++s) v = coeffs_[s](v);
  return v;
}

bool DirectLimitOrder::valid(const Elem& e) const {
  if (e.kind() != Elem::Kind::LimitPt) return false;
  std::size_t i = e.stage(), n = e.index();
  if (i >= bases_.size() || n >= bases_[i]) return false;
  if (i == 0) return true;
  // stage i >= 1 holds only points outside rng(c_{i-1})
  const FinMap& c = coeffs_[i - 1];
  return !std::binary_search(c.image.begin(), c.image.end(), n);
}

Ordering DirectLimitOrder::compare(const Elem& a, const Elem& b) const {
  if (!valid(a) || !valid(b)) throw InvalidElement("not a point of this direct limit");
  std::size_t k = std::max(a.stage(), b.stage());
  std::size_t va = push_to(a.stage(), a.index(), k);
  std::size_t vb = push_to(b.stage(), b.index(), k);
  if (va < vb) return Ordering::Less;
  if (va > vb) return Ordering::Greater;
  return Ordering::Equal;
}

std::vector<Elem> DirectLimitOrder::carrier() const {
  std::vector<Elem> out;
  for (std::size_t n = 0; n < bases_[0]; ++n) out.push_back(Elem::limit_pt(0, n));
  for (std::size_t i = 1; i < bases_.size(); ++i) {
    const FinMap& c = coeffs_[i - 1];
    for (std::size_t n = 0; n < bases_[i]; ++n)
      if (!std::binary_search(c.image.begin(), c.image.end(), n))
        out.push_back(Elem::limit_pt(i, n));
  }
  return out;
}

std::string DirectLimitOrder::describe() const {
  std::ostringstream os;
  os << "depth " << depth() << ", bases " << bases_.front() << ".." << bases_.back();
  return os.str();
}

Elem DirectLimitOrder::embed(std::size_t j, std::size_t n) const {
  if (j >= bases_.size() || n >= bases_[j])
    throw OutOfDomain("embed: point outside b(" + std::to_string(j) + ")");
  std::size_t i = j, v = n;
  while (i > 0) {
    const FinMap& c = coeffs_[i - 1];
    auto it = std::lower_bound(c.image.begin(), c.image.end(), v);
    if (it == c.image.end() || *it != v) break;
    v = static_cast<std::size_t>(it - c.image.begin());
    --i;
  }
  return Elem::limit_pt(i, v);
}

OrderEmbedding DirectLimitOrder::embedding(std::size_t j) const {
  auto self = shared_from_this();
  return OrderEmbedding{OrderSpec::finite(bases_.at(j)), as_order(),
                        [self, j](const Elem& e) {
                          return self->embed(j, static_cast<std::size_t>(e.int_value()));
                        }};
}

OrderSpec DirectLimitOrder::as_order() const {
  return OrderSpec::direct_limit(shared_from_this());
}

OrderSpec direct_limit(const GoodsteinSystem& sys, std::size_t depth) {
  return OrderSpec::direct_limit(DirectLimitOrder::build(sys, depth));
}

std::optional<std::vector<Elem>> descend_search(const GoodsteinSystem& sys, std::size_t depth,
                                                std::size_t length) {
  auto lim = DirectLimitOrder::build(sys, depth);
  auto pts = lim->carrier();
  if (length == 0) return std::vector<Elem>{};
  // longest chain with strictly increasing stages and strictly descending
  // limit positions, by DP over stages in increasing order
  std::vector<std::size_t> best(pts.size(), 1);
  std::vector<std::ptrdiff_t> prev(pts.size(), -1);
  std::stable_sort(pts.begin(), pts.end(),
                   [](const Elem& a, const Elem& b) { return a.stage() < b.stage(); });
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (pts[j].stage() >= pts[i].stage()) continue;
      if (lim->compare(pts[j], pts[i]) != Ordering::Greater) continue;
      if (best[j] + 1 > best[i]) {
        best[i] = best[j] + 1;
        prev[i] = static_cast<std::ptrdiff_t>(j);
      }
    }
    if (best[i] >= length) {
      std::vector<Elem> chain;
      std::ptrdiff_t cur = static_cast<std::ptrdiff_t>(i);
      while (cur >= 0) {
        chain.push_back(pts[static_cast<std::size_t>(cur)]);
        cur = prev[static_cast<std::size_t>(cur)];
      }
      std::reverse(chain.begin(), chain.end());
      while (chain.size() > length) chain.pop_back();
      return chain;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Runners
// ---------------------------------------------------------------------------

std::optional<BigNat> step(const DilatorHandle& D, const GoodsteinSystem& sys, std::size_t i,
                           const BigNat& v, const EvalBudget& budget) {
  if (v == 0) return BigNat(0);
  auto img = D.apply(sys.coeff_at(i), v, budget);
  if (!img) return std::nullopt;
  return *img - 1;
}

RunTrace run(const DilatorHandle& D, const GoodsteinSystem& sys, const BigNat& m,
             std::size_t max_steps, const EvalBudget& budget) {
  auto v = validate_system(sys, max_steps);
  if (!v.ok) throw InvalidElement("not a well-shaped system: " + v.reason);
  if (!D.contains(sys.base_at(0), m))
    throw OutOfDomain("start value outside " + D.name() + "(" + std::to_string(sys.base_at(0)) +
                      ")");
  RunTrace trace;
  BigNat cur = m;
  trace.steps.push_back({0, sys.base_at(0), cur});
  for (std::size_t i = 0; i < max_steps; ++i) {
    if (cur == 0) {
      trace.status = RunTrace::Status::Terminated;
      trace.at = i;
      return trace;
    }
    auto next = step(D, sys, i, cur, budget);
    if (!next) {
      trace.status = RunTrace::Status::Overflow;
      trace.at = i;
      return trace;
    }
    cur = std::move(*next);
    trace.steps.push_back({i + 1, sys.base_at(i + 1), cur});
  }
  if (cur == 0) {
    trace.status = RunTrace::Status::Terminated;
    trace.at = max_steps;
  } else {
    trace.status = RunTrace::Status::Budget;
  }
  return trace;
}

std::vector<BarElement> witness_map(const DilatorHandle& D, const GoodsteinSystem& sys,
                                    const RunTrace& trace, const EvalBudget& budget) {
  std::size_t depth = trace.steps.empty() ? 0 : trace.steps.size() - 1;
  auto lim = DirectLimitOrder::build(sys, depth);
  std::vector<BarElement> out;
  out.reserve(trace.steps.size());
  for (const auto& st : trace.steps) {
    BarElement el = mu(D, st.base, st.value, budget);
    out.push_back(bar_apply(D, lim->embedding(st.i), el));
  }
  return out;
}

GoodsteinSystem system_from_order(const OrderSpec& X, const std::vector<std::vector<Elem>>& sets,
                                  const Elem& star) {
  if (!valid_elem(X, star)) throw InvalidElement("star element not in the order");
  for (const auto& s : sets)
    for (const auto& e : s)
      if (!valid_elem(X, e)) throw InvalidElement("set element " + e.str() + " not in the order");
  GoodsteinSystem sys;
  sys.coeff = CoeffSpec::from_order(X, sets, star);
  std::vector<std::size_t> prefix;
  for (std::size_t i = 0; i < sets.size(); ++i)
    prefix.push_back(accumulated_set(sys.coeff, i).size());
  std::size_t tail = prefix.empty() ? 1 : prefix.back();
  sys.base = BaseSpec::table(std::move(prefix), tail);
  return sys;
}

RunTrace classic_run(const BaseSpec& base, const BigNat& m, std::size_t max_steps,
                     std::size_t value_cap_bits) {
  if (base.at(0) < 2) throw BadBase("classical Goodstein runs need b(0) >= 2");
  RunTrace trace;
  BigNat cur = m;
  trace.steps.push_back({0, base.at(0), cur});
  for (std::size_t i = 0; i < max_steps; ++i) {
    if (cur == 0) {
      trace.status = RunTrace::Status::Terminated;
      trace.at = i;
      return trace;
    }
    BigNat b = base.at(i), bn = base.at(i + 1);
    try {
      cur = classic_step(cur, b, bn, value_cap_bits);
    } catch (const EvalOverflow&) {
      trace.status = RunTrace::Status::Overflow;
      trace.at = i;
      return trace;
    }
    trace.steps.push_back({i + 1, base.at(i + 1), cur});
  }
  if (cur == 0) {
    trace.status = RunTrace::Status::Terminated;
    trace.at = max_steps;
  } else {
    trace.status = RunTrace::Status::Budget;
  }
  return trace;
}

// ---------------------------------------------------------------------------
// JSON formats
// ---------------------------------------------------------------------------

namespace {

json elem_to_json(const Elem& e) {
  switch (e.kind()) {
    case Elem::Kind::Int: return json(e.int_value());
    case Elem::Kind::Pair: return json::array({elem_to_json(e.left()), elem_to_json(e.right())});
    case Elem::Kind::Seq: {
      json arr = json::array();
      for (const auto& x : e.items()) arr.push_back(elem_to_json(x));
      return json{{"seq", arr}};
    }
    case Elem::Kind::LimitPt:
      return json{{"stage", e.stage()}, {"index", e.index()}};
  }
  return json();
}

Elem elem_from_json(const json& j) {
  if (j.is_number_integer()) return Elem::of(j.get<long long>());
  if (j.is_array()) {
    if (j.size() != 2) throw InvalidElement("pair element JSON needs two entries");
    return Elem::pair(elem_from_json(j[0]), elem_from_json(j[1]));
  }
  if (j.is_object() && j.contains("seq")) {
    std::vector<Elem> items;
    for (const auto& x : j["seq"]) items.push_back(elem_from_json(x));
    return Elem::seq(std::move(items));
  }
  if (j.is_object() && j.contains("stage"))
    return Elem::limit_pt(j["stage"].get<std::size_t>(), j["index"].get<std::size_t>());
  throw InvalidElement("unrecognized element JSON");
}

}  // namespace

GoodsteinSystem system_from_json(const std::string& text) {
  json j = json::parse(text);
  GoodsteinSystem sys;
  const json& b = j.at("base");
  std::string bk = b.at("kind").get<std::string>();
  if (bk == "constant") {
    sys.base = BaseSpec::constant(b.at("value").get<std::size_t>());
  } else if (bk == "affine") {
    sys.base = BaseSpec::affine(b.at("init").get<std::size_t>(), b.at("slope").get<std::size_t>());
  } else if (bk == "table") {
    sys.base = BaseSpec::table(b.at("prefix").get<std::vector<std::size_t>>(),
                               b.at("tail").get<std::size_t>());
  } else {
    throw InvalidElement("unknown base kind: " + bk);
  }
  const json& c = j.at("coeff");
  std::string ck = c.at("kind").get<std::string>();
  if (ck == "identity") {
    sys.coeff = CoeffSpec::identity();
  } else if (ck == "shift") {
    sys.coeff = CoeffSpec::shift(c.at("amount").get<std::size_t>());
  } else if (ck == "table") {
    std::vector<FinMap> maps;
    std::size_t i = 0;
    for (const auto& arr : c.at("maps")) {
      FinMap f;
      f.image = arr.get<std::vector<std::size_t>>();
      f.codomain = sys.base.at(i + 1);
      maps.push_back(std::move(f));
      ++i;
    }
    sys.coeff = CoeffSpec::table(std::move(maps));
  } else if (ck == "from-order") {
    OrderSpec X = parse_order(c.at("order").get<std::string>());
    Elem star = elem_from_json(c.at("star"));
    std::vector<std::vector<Elem>> sets;
    for (const auto& arr : c.at("sets")) {
      std::vector<Elem> s;
      for (const auto& x : arr) s.push_back(elem_from_json(x));
      sets.push_back(std::move(s));
    }
    GoodsteinSystem derived = system_from_order(X, sets, star);
    sys.coeff = std::move(derived.coeff);
    // the accumulated sets pin the base; keep the derived one
    sys.base = std::move(derived.base);
  } else {
    throw InvalidElement("unknown coeff kind: " + ck);
  }
  return sys;
}

std::string system_to_json(const GoodsteinSystem& sys) {
  json b;
  switch (sys.base.kind) {
    case BaseSpec::Kind::Constant: b = {{"kind", "constant"}, {"value", sys.base.value}}; break;
    case BaseSpec::Kind::Affine:
      b = {{"kind", "affine"}, {"init", sys.base.init}, {"slope", sys.base.slope}};
      break;
    case BaseSpec::Kind::Table:
      b = {{"kind", "table"}, {"prefix", sys.base.prefix}, {"tail", sys.base.tail}};
      break;
  }
  json c;
  switch (sys.coeff.kind) {
    case CoeffSpec::Kind::Identity: c = {{"kind", "identity"}}; break;
    case CoeffSpec::Kind::Shift: c = {{"kind", "shift"}, {"amount", sys.coeff.amount}}; break;
    case CoeffSpec::Kind::Table: {
      json maps = json::array();
      for (const auto& f : sys.coeff.maps) maps.push_back(f.image);
      c = {{"kind", "table"}, {"maps", maps}};
      break;
    }
    case CoeffSpec::Kind::FromOrder: {
      json sets = json::array();
      for (const auto& s : sys.coeff.sets) {
        json arr = json::array();
        for (const auto& e : s) arr.push_back(elem_to_json(e));
        sets.push_back(arr);
      }
      c = {{"kind", "from-order"},
           {"order", sys.coeff.order.str()},
           {"star", elem_to_json(*sys.coeff.star)},
           {"sets", sets}};
      break;
    }
  }
  return json{{"base", b}, {"coeff", c}}.dump(2);
}

std::string trace_to_json(const RunTrace& trace) {
  json steps = json::array();
  for (const auto& st : trace.steps)
    steps.push_back({{"i", st.i}, {"base", st.base}, {"value", st.value.str()}});
  json j{{"steps", steps}};
  switch (trace.status) {
    case RunTrace::Status::Terminated:
      j["status"] = "terminated";
      j["at"] = trace.at;
      break;
    case RunTrace::Status::Budget: j["status"] = "budget"; break;
    case RunTrace::Status::Overflow:
      j["status"] = "overflow";
      j["at"] = trace.at;
      break;
  }
  return j.dump(2);
}

}  // namespace ordforge
