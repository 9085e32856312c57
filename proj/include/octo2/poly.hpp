#pragma once
/**
 * @file poly.hpp
 * @brief Polynomials over GF(2^n) in at most two indeterminates.
 *
 * Terms are kept sorted in decreasing graded-lexicographic order with
 * x1 > x2, so the first term is the leading term. The gcd works on the
 * recursive representation GF(2^n)[x1][x2] with a primitive remainder
 * sequence in x2 and Euclid in GF(2^n)[x1] for contents.
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "octo2/gf2n.hpp"

namespace octo2 {

struct Monomial {
  std::uint32_t e1 = 0;
  std::uint32_t e2 = 0;

  [[nodiscard]] std::uint32_t degree() const noexcept { return e1 + e2; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// True when a comes strictly before b in decreasing grlex order.
inline bool grlex_greater(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a.e1 > b.e1;
}

struct Term {
  Monomial m;
  Gf2n::Elem c = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

class Poly {
 public:
  Poly() = default;

  static Poly constant(Gf2n::Elem c) {
    Poly p;
    if (c != 0) p.terms_.push_back({{0, 0}, c});
    return p;
  }
  static Poly monomial(Monomial m, Gf2n::Elem c = 1) {
    Poly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  /// Builds from arbitrary terms, combining duplicates and sorting.
  static Poly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_greater(a.m, b.m); });
    Poly p;
    for (const auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().m == t.m) {
        p.terms_.back().c ^= t.c;
        if (p.terms_.back().c == 0) p.terms_.pop_back();
      } else if (t.c != 0) {
        p.terms_.push_back(t);
      }
    }
    return p;
  }

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].m == Monomial{} && terms_[0].c == 1;
  }
  [[nodiscard]] bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m == Monomial{});
  }
  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] const Term& leading() const { return terms_.front(); }
  [[nodiscard]] std::uint32_t total_degree() const noexcept { return terms_.empty() ? 0 : terms_.front().m.degree(); }
  [[nodiscard]] std::uint32_t degree_in(int var) const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, var == 0 ? t.m.e1 : t.m.e2);
    return d;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Term> terms_;
};

inline Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && grlex_greater(ia->m, ib->m))) {
      out.push_back(*ia++);
    } else if (ia == a.terms().end() || grlex_greater(ib->m, ia->m)) {
      out.push_back(*ib++);
    } else {
      auto c = ia->c ^ ib->c;
      if (c != 0) out.push_back({ia->m, c});
      ++ia;
      ++ib;
    }
  }
  return Poly::from_terms(std::move(out));
}

inline Poly scale(const Gf2n& f, const Poly& a, Gf2n::Elem c) {
  if (c == 0) return {};
  std::vector<Term> out(a.terms());
  for (auto& t : out) t.c = f.mul(t.c, c);
  return Poly::from_terms(std::move(out));
}

inline Poly mul(const Gf2n& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  std::vector<Term> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) out.push_back({{s.m.e1 + t.m.e1, s.m.e2 + t.m.e2}, f.mul(s.c, t.c)});
  return Poly::from_terms(std::move(out));
}

/// Exact quotient a / b; throws when b does not divide a.
inline Poly divide_exact(const Gf2n& f, Poly a, const Poly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroInverse, "polynomial division by zero");
  if (b.is_one()) return a;
  const auto& lt = b.leading();
  auto lc_inv = f.inv(lt.c);
  std::vector<Term> q;
  while (!a.is_zero()) {
    const auto& la = a.leading();
    if (la.m.e1 < lt.m.e1 || la.m.e2 < lt.m.e2) fail(ErrorCode::Singular, "inexact polynomial division");
    Term qt{{la.m.e1 - lt.m.e1, la.m.e2 - lt.m.e2}, f.mul(la.c, lc_inv)};
    q.push_back(qt);
    a = a + mul(f, Poly::monomial(qt.m, qt.c), b);
  }
  return Poly::from_terms(std::move(q));
}

/// Scales so the grlex-leading coefficient is 1.
inline Poly make_monic(const Gf2n& f, const Poly& a) {
  if (a.is_zero() || a.leading().c == 1) return a;
  return scale(f, a, f.inv(a.leading().c));
}

namespace detail {

/// Dense univariate polynomial, coefficient of x^i at index i, no trailing zeros.
using UPoly = std::vector<Gf2n::Elem>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly uadd(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] ^= a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] ^= b[i];
  trim(r);
  return r;
}

inline UPoly umul(const Gf2n& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= f.mul(a[i], b[j]);
  trim(r);
  return r;
}

/// Returns (quotient, remainder).
inline std::pair<UPoly, UPoly> udivmod(const Gf2n& f, UPoly a, const UPoly& b) {
  if (b.empty()) fail(ErrorCode::ZeroInverse, "univariate division by zero");
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1, 0);
  auto inv_lc = f.inv(b.back());
  while (a.size() >= b.size()) {
    auto shift = a.size() - b.size();
    auto c = f.mul(a.back(), inv_lc);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] ^= f.mul(c, b[i]);
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline UPoly umonic(const Gf2n& f, const UPoly& a) {
  if (a.empty() || a.back() == 1) return a;
  auto c = f.inv(a.back());
  UPoly r(a);
  for (auto& x : r) x = f.mul(x, c);
  return r;
}

inline UPoly ugcd(const Gf2n& f, UPoly a, UPoly b) {
  while (!b.empty()) {
    auto r = udivmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(f, a);
}

/// Recursive view: index = exponent of x2, entry = coefficient in GF[x1].
using RPoly = std::vector<UPoly>;

inline void rtrim(RPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

inline RPoly to_recursive(const Poly& p) {
  RPoly r(p.degree_in(1) + 1);
  for (const auto& t : p.terms()) {
    auto& u = r[t.m.e2];
    if (u.size() <= t.m.e1) u.resize(t.m.e1 + 1, 0);
    u[t.m.e1] ^= t.c;
  }
  for (auto& u : r) trim(u);
  rtrim(r);
  return r;
}

inline Poly from_recursive(const RPoly& r) {
  std::vector<Term> terms;
  for (std::uint32_t j = 0; j < r.size(); ++j)
    for (std::uint32_t i = 0; i < r[j].size(); ++i)
      if (r[j][i] != 0) terms.push_back({{i, j}, r[j][i]});
  return Poly::from_terms(std::move(terms));
}

inline UPoly content(const Gf2n& f, const RPoly& r) {
  UPoly c;
  for (const auto& u : r) {
    c = ugcd(f, c, u);
    if (c.size() == 1) break;
  }
  return c;
}

inline RPoly divide_content(const Gf2n& f, const RPoly& r, const UPoly& c) {
  RPoly out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = udivmod(f, r[i], c).first;
  return out;
}

/// Pseudo-remainder of a by b in x2 with coefficients in GF[x1].
inline RPoly prem(const Gf2n& f, RPoly a, const RPoly& b) {
  const auto& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    auto shift = a.size() - b.size();
    UPoly la = a.back();
    for (auto& u : a) u = umul(f, u, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = uadd(a[i + shift], umul(f, la, b[i]));
    rtrim(a);
  }
  return a;
}

}  // namespace detail

/// Monic gcd (leading grlex coefficient 1); gcd(0, 0) = 0.
inline Poly gcd(const Gf2n& f, const Poly& a, const Poly& b) {
  using namespace detail;
  if (a.is_zero()) return make_monic(f, b);
  if (b.is_zero()) return make_monic(f, a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(1);
  RPoly ra = to_recursive(a), rb = to_recursive(b);
  UPoly ca = content(f, ra), cb = content(f, rb);
  UPoly cg = ugcd(f, ca, cb);
  ra = divide_content(f, ra, ca);
  rb = divide_content(f, rb, cb);
  if (ra.size() < rb.size()) std::swap(ra, rb);
  while (!rb.empty() && rb.size() > 1) {
    RPoly r = prem(f, ra, rb);
    ra = std::move(rb);
    if (r.empty()) {
      rb.clear();
      break;
    }
    rb = divide_content(f, r, content(f, r));
  }
  RPoly g;
  if (rb.empty()) {
    g = ra;
  } else {
    // rb is a nonzero constant in x2, so the primitive parts are coprime.
    g = RPoly{UPoly{1}};
  }
  for (auto& u : g) u = umul(f, u, cg);
  rtrim(g);
  return make_monic(f, from_recursive(g));
}

/// Polynomial printing with coefficients as powers of the generator.
inline std::string to_string(const Gf2n& f, const Poly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += "+";
    std::string mono;
    auto add_var = [&](std::uint32_t e, int idx) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += vars.at(static_cast<std::size_t>(idx));
      if (e > 1) mono += "^" + std::to_string(e);
    };
    add_var(t.m.e1, 0);
    add_var(t.m.e2, 1);
    if (mono.empty()) {
      out += f.to_string(t.c);
    } else if (t.c == 1) {
      out += mono;
    } else {
      out += f.to_string(t.c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace octo2
