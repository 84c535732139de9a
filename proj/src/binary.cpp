#include "ordforge/binary.hpp"

#include <sstream>

#include "ordforge/errors.hpp"

namespace ordforge {

std::vector<std::size_t> bin_digits(const BigNat& m) {
  std::vector<std::size_t> out;
  if (m == 0) return out;
  for (std::size_t e = bit_length(m); e-- > 0;)
    if (boost::multiprecision::bit_test(m, static_cast<unsigned>(e))) out.push_back(e);
  return out;
}

BigNat bin_apply(const FinMap& f, const BigNat& m, std::size_t exp_cap_bits) {
  if (!f.strictly_increasing()) throw NotIncreasing("coefficient map must be strictly increasing");
  if (bit_length(m) > f.domain())
    throw OutOfDomain("value " + m.str() + " has no base-" + std::to_string(f.domain()) +
                      " binary representation");
  BigNat out = 0;
  for (std::size_t e : bin_digits(m)) {
    std::size_t img = f(e);
    if (img >= exp_cap_bits) throw EvalOverflow("binary exponent exceeds the configured cap");
    boost::multiprecision::bit_set(out, static_cast<unsigned>(img));
  }
  return out;
}

std::vector<std::size_t> bin_supp(std::size_t b, const BigNat& m) {
  if (bit_length(m) > b)
    throw OutOfDomain("value " + m.str() + " lies outside 2(" + std::to_string(b) + ")");
  auto exps = bin_digits(m);
  std::reverse(exps.begin(), exps.end());
  return exps;
}

// ---------------------------------------------------------------------------
// Hereditary representations
// ---------------------------------------------------------------------------

HerTree her_rep(const BigNat& m, const BigNat& base) {
  if (base < 2) throw BadBase("hereditary representation needs base >= 2");
  HerTree t;
  BigNat rest = m;
  BigNat exp = 0;
  // collect digits least-significant first, then reverse
  std::vector<HerTree::Digit> digits;
  while (rest > 0) {
    BigNat coeff = rest % base;
    if (coeff != 0) digits.push_back({her_rep(exp, base), coeff});
    rest /= base;
    ++exp;
  }
  std::reverse(digits.begin(), digits.end());
  t.digits = std::move(digits);
  return t;
}

BigNat her_value(const HerTree& t, const BigNat& base, std::size_t value_cap_bits) {
  if (base < 2) throw BadBase("hereditary value needs base >= 2");
  BigNat out = 0;
  std::size_t base_bits = bit_length(base);
  for (const auto& d : t.digits) {
    BigNat e = her_value(d.exponent, base, value_cap_bits);
    // b^e needs roughly e*log2(b) bits
    if (e > value_cap_bits || static_cast<std::size_t>(e) * base_bits > 2 * value_cap_bits + 64)
      throw EvalOverflow("hereditary value exceeds the configured cap");
    BigNat p = boost::multiprecision::pow(base, static_cast<unsigned>(e));
    out += p * d.coeff;
    if (bit_length(out) > value_cap_bits)
      throw EvalOverflow("hereditary value exceeds the configured cap");
  }
  return out;
}

BigNat classic_step(const BigNat& m, const BigNat& base, const BigNat& next_base,
                    std::size_t value_cap_bits) {
  if (base < 2 || next_base < base) throw BadBase("classic step needs 2 <= b <= b'");
  if (m == 0) throw OutOfDomain("classic step is only defined for positive values");
  return her_value(her_rep(m, base), next_base, value_cap_bits) - 1;
}

bool HerTree::is_zero() const { return digits.empty(); }

std::string HerTree::str(const std::string& b) const {
  if (digits.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) os << " + ";
    os << b << "^{" << digits[i].exponent.str(b) << "}";
    if (digits[i].coeff != 1) os << "*" << digits[i].coeff.str();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Dilator interface
// ---------------------------------------------------------------------------

Cardinality BinaryDilator::card(std::size_t b) const {
  if (b > kBinaryExpCapBits) return Cardinality::overflow();
  return Cardinality::finite(pow2(b));
}

std::optional<BigNat> BinaryDilator::apply(const FinMap& f, const BigNat& sigma,
                                           const EvalBudget& budget) const {
  try {
    return bin_apply(f, sigma, budget.max_bits);
  } catch (const EvalOverflow&) {
    return std::nullopt;
  }
}

std::vector<std::size_t> BinaryDilator::supp(std::size_t b, const BigNat& sigma) const {
  return bin_supp(b, sigma);
}

bool BinaryDilator::contains(std::size_t b, const BigNat& sigma) const {
  return bit_length(sigma) <= b;
}

}  // namespace ordforge
