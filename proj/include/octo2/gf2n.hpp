#pragma once
/**
 * @file gf2n.hpp
 * @brief Table-driven arithmetic in GF(2^n), 1 <= n <= 16.
 *
 * Elements are bit-vectors of polynomial coefficients modulo a fixed
 * primitive polynomial. The class g of x is the generator used for
 * printing (every nonzero element is g^k).
 */

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octo2/error.hpp"

namespace octo2 {

/// Fixed moduli (bit i = coefficient of x^i), indexed by degree.
inline constexpr std::array<std::uint32_t, 17> kDefaultModuli = {
    0,
    0b11,                     // x + 1
    0b111,                    // x^2 + x + 1
    0b1011,                   // x^3 + x + 1
    0b10011,                  // x^4 + x + 1
    0b100101,                 // x^5 + x^2 + 1
    0b1011011,                // x^6 + x^4 + x^3 + x + 1
    0b10000011,               // x^7 + x + 1
    0b100011101,              // x^8 + x^4 + x^3 + x^2 + 1
    0b1000010001,             // x^9 + x^4 + 1
    0b10001101111,            // x^10 + x^6 + x^5 + x^3 + x^2 + x + 1
    0b100000000101,           // x^11 + x^2 + 1
    0b1000011101011,          // x^12 + x^7 + x^6 + x^5 + x^3 + x + 1
    0b10000000011011,         // x^13 + x^4 + x^3 + x + 1
    0b100000010101001,        // x^14 + x^7 + x^5 + x^3 + 1
    0b1000000000110101,       // x^15 + x^5 + x^4 + x^2 + 1
    0b10000000000101101,      // x^16 + x^5 + x^3 + x^2 + 1
};

class Gf2n {
 public:
  using Elem = std::uint32_t;

  explicit Gf2n(unsigned degree) : Gf2n(degree, degree <= 16 ? kDefaultModuli[degree] : 0) {}

  Gf2n(unsigned degree, std::uint32_t modulus) : degree_(degree), modulus_(modulus) {
    if (degree < 1 || degree > 16) fail(ErrorCode::UnsupportedField, "extension degree must be in 1..16");
    if ((modulus >> degree) != 1u) fail(ErrorCode::UnsupportedField, "modulus degree does not match");
    size_ = 1u << degree;
    exp_.assign(2 * size_, 0);
    log_.assign(size_, 0);
    Elem x = 1;
    for (std::uint32_t k = 0; k + 1 < size_; ++k) {
      if (k > 0 && x == 1) fail(ErrorCode::UnsupportedField, "modulus is not primitive");
      exp_[k] = x;
      log_[x] = k;
      x = mul_slow(x, degree == 1 ? 1u : 2u);
    }
    if (x != 1) fail(ErrorCode::UnsupportedField, "modulus is not primitive");
    for (std::uint32_t k = size_ - 1; k < 2 * size_; ++k) exp_[k] = exp_[k - (size_ - 1)];
  }

  [[nodiscard]] unsigned degree() const noexcept { return degree_; }
  [[nodiscard]] std::uint32_t modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::uint32_t size() const noexcept { return size_; }
  /// Order of the multiplicative group.
  [[nodiscard]] std::uint32_t order() const noexcept { return size_ - 1; }

  [[nodiscard]] static Elem add(Elem a, Elem b) noexcept { return a ^ b; }

  [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  [[nodiscard]] Elem inv(Elem a) const {
    if (a == 0) fail(ErrorCode::ZeroInverse, "inverse of zero in GF(2^n)");
    return exp_[(order() - log_[a]) % order()];
  }

  [[nodiscard]] Elem pow(Elem a, std::int64_t k) const {
    if (a == 0) {
      if (k < 0) fail(ErrorCode::ZeroInverse, "negative power of zero");
      return k == 0 ? 1 : 0;
    }
    std::int64_t e = (static_cast<std::int64_t>(log_[a]) * (k % order())) % order();
    if (e < 0) e += order();
    return exp_[static_cast<std::uint32_t>(e)];
  }

  /// g^k for the fixed generator g.
  [[nodiscard]] Elem gen_pow(std::int64_t k) const {
    std::int64_t e = k % static_cast<std::int64_t>(order());
    if (e < 0) e += order();
    return exp_[static_cast<std::uint32_t>(e)];
  }

  [[nodiscard]] std::uint32_t log(Elem a) const {
    if (a == 0) fail(ErrorCode::ZeroArgument, "log of zero");
    return log_[a];
  }

  /// Frobenius is bijective on a finite field; the square root is a^(2^(n-1)).
  [[nodiscard]] Elem sqrt(Elem a) const noexcept {
    if (a == 0) return 0;
    std::uint64_t e = (static_cast<std::uint64_t>(log_[a]) << (degree_ - 1)) % order();
    return exp_[static_cast<std::uint32_t>(e)];
  }

  /// Absolute trace to GF(2).
  [[nodiscard]] Elem trace(Elem a) const noexcept {
    Elem t = 0, x = a;
    for (unsigned i = 0; i < degree_; ++i) {
      t ^= x;
      x = mul(x, x);
    }
    return t;
  }

  [[nodiscard]] std::string to_string(Elem a) const {
    if (a == 0) return "0";
    if (a == 1) return "1";
    auto k = log_[a];
    return k == 1 ? std::string("g") : "g^" + std::to_string(k);
  }

 private:
  [[nodiscard]] Elem mul_slow(Elem a, Elem b) const noexcept {
    Elem r = 0;
    while (b != 0) {
      if (b & 1u) r ^= a;
      b >>= 1;
      a <<= 1;
      if ((a >> degree_) & 1u) a ^= modulus_;
    }
    return r;
  }

  unsigned degree_;
  std::uint32_t modulus_;
  std::uint32_t size_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace octo2
