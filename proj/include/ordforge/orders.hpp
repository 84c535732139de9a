#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordforge/bignat.hpp"
#include "ordforge/errors.hpp"
#include "ordforge/rng.hpp"

namespace ordforge {

// ---------------------------------------------------------------------------
// Elements of countable linear orders.
//
// Integer encodings follow the flat CLI rendering: over 1+X and 2+X the added
// bottoms sit at 0 and -1, and every Int-encoded inner element is shifted up
// by one. Non-Int inner elements (pairs, sequences, limit points) pass
// through unchanged, so the encoding stays unambiguous under nesting.
// ---------------------------------------------------------------------------
class Elem {
 public:
  enum class Kind { Int, Pair, Seq, LimitPt };

  static Elem of(long long v);
  static Elem pair(Elem l, Elem r);
  static Elem seq(std::vector<Elem> items);
  static Elem limit_pt(std::size_t stage, std::size_t index);

  Kind kind() const { return kind_; }
  bool is_int() const { return kind_ == Kind::Int; }

  long long int_value() const;
  const Elem& left() const;
  const Elem& right() const;
  const std::vector<Elem>& items() const;
  std::size_t stage() const;
  std::size_t index() const;

  bool operator==(const Elem& o) const;
  bool operator!=(const Elem& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Kind kind_ = Kind::Int;
  long long iv_ = 0;
  std::size_t stage_ = 0, index_ = 0;
  std::vector<Elem> kids_;
};

// Comparison/carrier callbacks for direct-limit orders. The concrete
// construction lives with the Goodstein engine; the order layer only needs
// this interface to keep DirectLimit a first-class OrderSpec.
class LimitCarrier {
 public:
  virtual ~LimitCarrier() = default;
  virtual bool valid(const Elem& e) const = 0;
  virtual Ordering compare(const Elem& a, const Elem& b) const = 0;
  virtual std::vector<Elem> carrier() const = 0;
  virtual std::string describe() const = 0;
};

class OrderSpec {
 public:
  enum class Kind { FiniteSegment, Naturals, OnePlus, TwoPlus, Product, DescSeq, DirectLimit };

  static OrderSpec finite(std::size_t n);
  static OrderSpec naturals();
  static OrderSpec one_plus(OrderSpec inner);
  static OrderSpec two_plus(OrderSpec inner);
  static OrderSpec product(OrderSpec left, OrderSpec right);
  static OrderSpec desc_seq(OrderSpec inner);
  static OrderSpec direct_limit(std::shared_ptr<const LimitCarrier> lim);

  Kind kind() const;
  std::size_t segment_size() const;       // FiniteSegment
  const OrderSpec& inner() const;         // OnePlus / TwoPlus / DescSeq
  const OrderSpec& left() const;          // Product
  const OrderSpec& right() const;         // Product
  const LimitCarrier& limit() const;      // DirectLimit

  std::string str() const;

  // A default-constructed spec is empty and must be assigned before use.
  OrderSpec() = default;

  struct Node;  // implementation detail, defined in orders.cpp

 private:
  explicit OrderSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool valid_elem(const OrderSpec& order, const Elem& e);

// Total order on valid elements; throws InvalidElement on encoding mismatch.
Ordering compare(const OrderSpec& order, const Elem& a, const Elem& b);

inline bool elem_less(const OrderSpec& order, const Elem& a, const Elem& b) {
  return compare(order, a, b) == Ordering::Less;
}

// ---------------------------------------------------------------------------
// Finite suborders and morphisms between initial segments.
// ---------------------------------------------------------------------------

// Strictly increasing map {0..domain-1} -> {0..codomain-1}.
struct FinMap {
  std::vector<std::size_t> image;
  std::size_t codomain = 0;

  std::size_t domain() const { return image.size(); }
  std::size_t operator()(std::size_t i) const;
  bool strictly_increasing() const;

  static FinMap identity(std::size_t n);
  static FinMap empty_into(std::size_t n);
  static FinMap shifted(std::size_t n, std::size_t amount, std::size_t codomain);

  // (*this) o inner
  FinMap compose_after(const FinMap& inner) const;

  bool operator==(const FinMap& o) const { return image == o.image && codomain == o.codomain; }
  std::string str() const;
};

// The enumeration e_a^X : |a| -> X, strictly increasing with range a.
struct FiniteEnum {
  std::vector<Elem> elems;  // ascending in the ambient order

  std::size_t size() const { return elems.size(); }
  const Elem& operator()(std::size_t i) const;
};

// Sorts ascending; duplicates are rejected with InvalidElement.
std::vector<Elem> sort_unique(const OrderSpec& order, std::vector<Elem> elems);

// Union of two sorted element sets.
std::vector<Elem> merge_union(const OrderSpec& order, const std::vector<Elem>& a,
                              const std::vector<Elem>& b);

// Position of x in the sorted set; nullopt if absent.
std::optional<std::size_t> position_of(const OrderSpec& order, const std::vector<Elem>& sorted,
                                       const Elem& x);

FiniteEnum enum_embedding(const OrderSpec& order, std::vector<Elem> a);

// |f| for f given by its images on the sorted set a, landing in the sorted
// set b. Throws NotIncreasing when the images fail to increase, and
// InvalidElement when an image is not in b.
FinMap induced_morphism(const OrderSpec& order, const std::vector<Elem>& a,
                        const std::vector<Elem>& b, const std::vector<Elem>& images);

// |iota_a^b| for an inclusion a subseteq b.
FinMap induced_inclusion(const OrderSpec& order, const std::vector<Elem>& a,
                         const std::vector<Elem>& b);

// An order embedding between arbitrary OrderSpecs, given pointwise.
struct OrderEmbedding {
  OrderSpec source;
  OrderSpec target;
  std::function<Elem(const Elem&)> map;

  Elem operator()(const Elem& e) const { return map(e); }
};

OrderEmbedding identity_embedding(const OrderSpec& order);
OrderEmbedding embedding_from_fin_map(const FinMap& f);
// fin:|a| -> X with range a.
OrderEmbedding embedding_from_enum(const OrderSpec& target, FiniteEnum e);

// ---------------------------------------------------------------------------
// Utilities for tests and generators.
// ---------------------------------------------------------------------------

// All elements ascending when the order is finite with at most cap elements.
std::optional<std::vector<Elem>> enumerate_finite(const OrderSpec& order, std::size_t cap);

// Seeded element sampler; nullopt when the order is empty. magnitude bounds
// the integers drawn from infinite components.
std::optional<Elem> sample_elem(const OrderSpec& order, SplitMix64& rng, std::size_t magnitude);

// Representation of an inner X element inside 1+X or 2+X: Int-encoded
// elements shift up by one, everything else passes through.
Elem lift_elem(const Elem& e);

// CLI literals: fin:<n>, nat, 1+<spec>, 2+<spec>, (<spec>)x(<spec>), desc:<spec>.
OrderSpec parse_order(const std::string& text);

// Term-grammar elements: int or "(" elem "," elem ")".
Elem parse_elem(const std::string& text, std::size_t& pos);
Elem parse_elem(const std::string& text);

}  // namespace ordforge
