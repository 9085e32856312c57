#pragma once
/**
 * @file field.hpp
 * @brief Exact characteristic-2 fields: GF(2^n) and GF(2^n)(x1[, x2]).
 *
 * A Field is a lightweight handle to an interned descriptor; two handles
 * describe the same field exactly when they point at the same descriptor.
 * Fe values are immutable. Rational elements are kept reduced with the
 * grlex-leading coefficient of the denominator equal to 1.
 */

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "octo2/gf2n.hpp"
#include "octo2/poly.hpp"

namespace octo2 {

enum class FieldKind { Finite, Rational };

struct FieldDescriptor {
  FieldKind kind;
  Gf2n base;
  std::vector<std::string> vars;  // indeterminates, rational kind only
};

class Fe;

class Field {
 public:
  Field() = default;

  static Field finite(unsigned degree) { return intern(FieldKind::Finite, degree, {}); }
  static Field rational(unsigned degree, std::vector<std::string> vars) {
    if (vars.size() > 2) fail(ErrorCode::UnsupportedField, "at most two indeterminates");
    if (vars.size() == 2 && vars[0] == vars[1]) fail(ErrorCode::UnsupportedField, "indeterminate names must be distinct");
    for (const auto& v : vars)
      if (v.empty() || v == "g") fail(ErrorCode::UnsupportedField, "invalid indeterminate name '" + v + "'");
    return intern(FieldKind::Rational, degree, std::move(vars));
  }

  [[nodiscard]] bool valid() const noexcept { return d_ != nullptr; }
  [[nodiscard]] const FieldDescriptor& desc() const { return *d_; }
  [[nodiscard]] const Gf2n& base() const { return d_->base; }
  [[nodiscard]] FieldKind kind() const { return d_->kind; }
  [[nodiscard]] bool is_finite() const { return d_->kind == FieldKind::Finite; }
  [[nodiscard]] std::size_t num_vars() const { return d_->vars.size(); }
  [[nodiscard]] const std::vector<std::string>& vars() const { return d_->vars; }
  /// Number of elements for the finite kind, 0 otherwise.
  [[nodiscard]] std::uint64_t size() const { return is_finite() ? base().size() : 0; }

  [[nodiscard]] Fe zero() const;
  [[nodiscard]] Fe one() const;
  [[nodiscard]] Fe from_int(long v) const;
  /// g^k, the fixed generator of the coefficient field.
  [[nodiscard]] Fe gen(std::int64_t k = 1) const;
  /// The i-th indeterminate.
  [[nodiscard]] Fe var(std::size_t i) const;
  /// Finite kind: the element with coefficient bit-vector `bits`.
  [[nodiscard]] Fe from_bits(std::uint32_t bits) const;
  [[nodiscard]] Fe from_poly(Poly num, Poly den) const;
  /// Caller guarantees gcd(num, den) = 1; only the denominator is normalized.
  [[nodiscard]] Fe from_reduced(Poly num, Poly den) const;
  /// All elements, finite kind only, in bit-vector order.
  [[nodiscard]] std::vector<Fe> elements() const;

  [[nodiscard]] std::string to_string() const {
    std::string b = base().degree() == 1 ? "gf(2)" : "gf(2^" + std::to_string(base().degree()) + ")";
    if (is_finite()) return b;
    std::string s = "ratfunc(" + b;
    for (std::size_t i = 0; i < vars().size(); ++i) s += (i == 0 ? "; " : ", ") + vars()[i];
    return s + ")";
  }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.d_ == b.d_; }

 private:
  explicit Field(const FieldDescriptor* d) : d_(d) {}

  static Field intern(FieldKind kind, unsigned degree, std::vector<std::string> vars) {
    using Key = std::tuple<int, unsigned, std::vector<std::string>>;
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<FieldDescriptor>> registry;
    std::lock_guard lock(mu);
    Key key{static_cast<int>(kind), degree, vars};
    auto it = registry.find(key);
    if (it == registry.end()) {
      auto d = std::make_unique<FieldDescriptor>(FieldDescriptor{kind, Gf2n(degree), std::move(vars)});
      it = registry.emplace(std::move(key), std::move(d)).first;
    }
    return Field(it->second.get());
  }

  const FieldDescriptor* d_ = nullptr;
};

/// Numerator/denominator pair of a rational function.
struct RatFunc {
  Poly num;
  Poly den;
};

class Fe {
 public:
  Fe() = default;

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] bool is_zero() const noexcept { return rat_ ? rat_->num.is_zero() : bits_ == 0; }
  [[nodiscard]] bool is_one() const noexcept {
    return rat_ ? (rat_->num.is_one() && rat_->den.is_one()) : bits_ == 1;
  }
  /// Finite kind only.
  [[nodiscard]] std::uint32_t bits() const noexcept { return bits_; }
  [[nodiscard]] const Poly& num() const { return rat_->num; }
  [[nodiscard]] const Poly& den() const { return rat_->den; }
  [[nodiscard]] bool is_rational() const noexcept { return static_cast<bool>(rat_); }
  /// True when the element lies in the coefficient field GF(2^n).
  [[nodiscard]] bool is_constant() const noexcept {
    return !rat_ || (rat_->num.is_constant() && rat_->den.is_constant());
  }

  friend Fe operator+(const Fe& a, const Fe& b) {
    check_same(a, b);
    if (!a.rat_) return Fe(a.field_, a.bits_ ^ b.bits_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto& f = a.field_.base();
    const auto &p1 = a.num(), &q1 = a.den(), &p2 = b.num(), &q2 = b.den();
    if (q1 == q2) return a.field_.from_poly(p1 + p2, q1);
    // Only common factors of num and g = gcd(q1, q2) can cancel.
    if (q1.is_one()) return a.field_.from_reduced(mul(f, p1, q2) + p2, q2);
    if (q2.is_one()) return a.field_.from_reduced(p1 + mul(f, p2, q1), q1);
    Poly g = gcd(f, q1, q2);
    if (g.is_one()) return a.field_.from_reduced(mul(f, p1, q2) + mul(f, p2, q1), mul(f, q1, q2));
    Poly r1 = divide_exact(f, q1, g), r2 = divide_exact(f, q2, g);
    Poly num = mul(f, p1, r2) + mul(f, p2, r1);
    if (num.is_zero()) return a.field_.zero();
    Poly den = mul(f, r1, q2);
    Poly h = gcd(f, num, g);
    if (!h.is_one()) {
      num = divide_exact(f, num, h);
      den = divide_exact(f, den, h);
    }
    return a.field_.from_reduced(std::move(num), std::move(den));
  }
  // Characteristic 2: subtraction and negation coincide with addition and identity.
  friend Fe operator-(const Fe& a, const Fe& b) { return a + b; }
  Fe operator-() const { return *this; }

  friend Fe operator*(const Fe& a, const Fe& b) {
    check_same(a, b);
    if (!a.rat_) return Fe(a.field_, a.field_.base().mul(a.bits_, b.bits_));
    if (a.is_zero() || b.is_zero()) return a.field_.zero();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    const auto& f = a.field_.base();
    if (a.den().is_one() && b.den().is_one()) {
      Fe r;
      r.field_ = a.field_;
      r.rat_ = std::make_shared<RatFunc>(RatFunc{mul(f, a.num(), b.num()), Poly::constant(1)});
      return r;
    }
    // Cross-cancel before multiplying to keep intermediate sizes small.
    Poly g1 = gcd(f, a.num(), b.den()), g2 = gcd(f, b.num(), a.den());
    Poly n1 = divide_exact(f, a.num(), g1), d2 = divide_exact(f, b.den(), g1);
    Poly n2 = divide_exact(f, b.num(), g2), d1 = divide_exact(f, a.den(), g2);
    return a.field_.from_reduced(mul(f, n1, n2), mul(f, d1, d2));
  }

  [[nodiscard]] Fe inv() const {
    if (is_zero()) fail(ErrorCode::ZeroInverse, "inverse of zero");
    if (!rat_) return Fe(field_, field_.base().inv(bits_));
    return field_.from_reduced(rat_->den, rat_->num);
  }

  friend Fe operator/(const Fe& a, const Fe& b) { return a * b.inv(); }

  Fe& operator+=(const Fe& b) { return *this = *this + b; }
  Fe& operator*=(const Fe& b) { return *this = *this * b; }

  [[nodiscard]] Fe square() const { return *this * *this; }

  [[nodiscard]] Fe pow(std::int64_t k) const {
    if (k < 0) return inv().pow(-k);
    Fe r = field_.one(), base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      base = base.square();
      k >>= 1;
    }
    return r;
  }

  friend bool operator==(const Fe& a, const Fe& b) {
    if (a.field_ != b.field_) return false;
    if (!a.rat_) return a.bits_ == b.bits_;
    return a.rat_ == b.rat_ || (a.num() == b.num() && a.den() == b.den());
  }
  friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }

  [[nodiscard]] std::string to_string() const {
    const auto& f = field_.base();
    if (!rat_) return f.to_string(bits_);
    auto n = octo2::to_string(f, num(), field_.vars());
    if (den().is_one()) return n;
    return "(" + n + ")/(" + octo2::to_string(f, den(), field_.vars()) + ")";
  }

 private:
  friend class Field;

  Fe(Field f, std::uint32_t bits) : field_(f), bits_(bits) {}

  static void check_same(const Fe& a, const Fe& b) {
    if (a.field_ != b.field_ || !a.field_.valid())
      fail(ErrorCode::DescriptorMismatch, "operands live in different fields");
  }

  Field field_;
  std::uint32_t bits_ = 0;
  std::shared_ptr<const RatFunc> rat_;

 public:
  // Used by Field; keeps construction of normalized rational values in one place.
  struct Access;
};

struct Fe::Access {
  static Fe finite(Field f, std::uint32_t bits) { return Fe(f, bits); }
  static Fe rational(Field f, Poly num, Poly den) {
    Fe r;
    r.field_ = f;
    r.rat_ = std::make_shared<RatFunc>(RatFunc{std::move(num), std::move(den)});
    return r;
  }
};

inline Fe Field::zero() const {
  if (!valid()) fail(ErrorCode::DescriptorMismatch, "invalid field handle");
  if (is_finite()) return Fe::Access::finite(*this, 0);
  return Fe::Access::rational(*this, Poly{}, Poly::constant(1));
}

inline Fe Field::one() const {
  if (is_finite()) return Fe::Access::finite(*this, 1);
  return Fe::Access::rational(*this, Poly::constant(1), Poly::constant(1));
}

inline Fe Field::from_int(long v) const { return (v & 1) ? one() : zero(); }

inline Fe Field::gen(std::int64_t k) const {
  auto c = base().gen_pow(k);
  if (is_finite()) return Fe::Access::finite(*this, c);
  return Fe::Access::rational(*this, Poly::constant(c), Poly::constant(1));
}

inline Fe Field::var(std::size_t i) const {
  if (is_finite() || i >= num_vars()) fail(ErrorCode::UnsupportedField, "no such indeterminate");
  Monomial m = i == 0 ? Monomial{1, 0} : Monomial{0, 1};
  return Fe::Access::rational(*this, Poly::monomial(m), Poly::constant(1));
}

inline Fe Field::from_bits(std::uint32_t bits) const {
  if (bits >= base().size()) fail(ErrorCode::UnsupportedField, "bit pattern outside field");
  if (is_finite()) return Fe::Access::finite(*this, bits);
  return Fe::Access::rational(*this, Poly::constant(bits), Poly::constant(1));
}

inline Fe Field::from_poly(Poly num, Poly den) const {
  if (is_finite()) fail(ErrorCode::UnsupportedField, "polynomial literal over a finite field");
  if (den.is_zero()) fail(ErrorCode::ZeroInverse, "zero denominator");
  if (num.is_zero()) return zero();
  const auto& f = base();
  Poly g = gcd(f, num, den);
  if (!g.is_one()) {
    num = divide_exact(f, num, g);
    den = divide_exact(f, den, g);
  }
  return from_reduced(std::move(num), std::move(den));
}

inline Fe Field::from_reduced(Poly num, Poly den) const {
  const auto& f = base();
  auto lc = den.leading().c;
  if (lc != 1) {
    auto c = f.inv(lc);
    num = scale(f, num, c);
    den = scale(f, den, c);
  }
  return Fe::Access::rational(*this, std::move(num), std::move(den));
}

inline std::vector<Fe> Field::elements() const {
  if (!is_finite()) fail(ErrorCode::UnsupportedField, "only finite fields can be enumerated");
  std::vector<Fe> out;
  out.reserve(base().size());
  for (std::uint32_t b = 0; b < base().size(); ++b) out.push_back(Fe::Access::finite(*this, b));
  return out;
}

}  // namespace octo2
