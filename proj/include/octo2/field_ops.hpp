#pragma once
/**
 * @file field_ops.hpp
 * @brief Square roots, Artin-Schreier membership and the k^2-structure of k.
 *
 * For k = GF(2^n)(x1, ..., xm) the square subfield is k^2 = GF(2^n)(x1^2, ...),
 * and k = sum over eps in {0,1}^m of k^2 * x^eps. Coordinates are indexed by
 * the bitmask eps (bit 0 for x1, bit 1 for x2).
 */

#include <cstdint>
#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "octo2/field.hpp"
#include "octo2/matrix.hpp"

namespace octo2 {

namespace detail {

inline bool all_even(const Poly& p) {
  for (const auto& t : p.terms())
    if ((t.m.e1 & 1u) || (t.m.e2 & 1u)) return false;
  return true;
}

inline Poly sqrt_poly(const Gf2n& f, const Poly& p) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) out.push_back({{t.m.e1 / 2, t.m.e2 / 2}, f.sqrt(t.c)});
  return Poly::from_terms(std::move(out));
}

/// Dense GF(2) linear system solver; rows are bitsets over the unknowns.
class Gf2System {
 public:
  explicit Gf2System(std::size_t unknowns) : n_(unknowns), words_((unknowns + 64) / 64) {}

  /// Adds the equation sum_{i in lhs} x_i = rhs.
  void add(const std::vector<std::size_t>& lhs, bool rhs) {
    std::vector<std::uint64_t> row(words_, 0);
    for (auto i : lhs) row[i / 64] ^= std::uint64_t{1} << (i % 64);
    if (rhs) row[n_ / 64] ^= std::uint64_t{1} << (n_ % 64);
    rows_.push_back(std::move(row));
  }

  /// Some solution, or nullopt when inconsistent.
  [[nodiscard]] std::optional<std::vector<bool>> solve() const {
    auto rows = rows_;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c <= n_ && r < rows.size(); ++c) {
      auto bit = [&](std::size_t i) { return (rows[i][c / 64] >> (c % 64)) & 1u; };
      std::size_t p = r;
      while (p < rows.size() && !bit(p)) ++p;
      if (p == rows.size()) continue;
      if (c == n_) return std::nullopt;
      std::swap(rows[p], rows[r]);
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (i != r && bit(i))
          for (std::size_t w = 0; w < words_; ++w) rows[i][w] ^= rows[r][w];
      pivots.push_back(c);
      ++r;
    }
    std::vector<bool> x(n_, false);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = (rows[i][n_ / 64] >> (n_ % 64)) & 1u;
    return x;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace detail

inline bool is_square(const Fe& a) {
  if (!a.is_rational()) return true;
  return detail::all_even(a.num()) && detail::all_even(a.den());
}

inline Fe sqrt(const Fe& a) {
  const Field& k = a.field();
  if (!a.is_rational()) return k.from_bits(k.base().sqrt(a.bits()));
  if (!is_square(a)) fail(ErrorCode::NotASquare, a.to_string() + " is not a square");
  // The square root of a reduced fraction is reduced, and a monic denominator has a monic root.
  return k.from_reduced(detail::sqrt_poly(k.base(), a.num()), detail::sqrt_poly(k.base(), a.den()));
}

enum class Decision { Yes, No, Unknown };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "Yes";
    case Decision::No: return "No";
    case Decision::Unknown: return "Unknown";
  }
  return "?";
}

struct AsResult {
  Decision verdict = Decision::Unknown;
  std::optional<Fe> witness;  // x with x^2 + x = a when verdict is Yes
};

/**
 * Decides a in {x^2 + x}. Over GF(2^n)(x1, x2) a witness x = f/g in lowest
 * terms forces g^2 = den(a) and f^2 + f g = num(a), which is GF(2)-linear in
 * the coefficient bits of f, with deg f <= max(deg g, deg num / 2). When that
 * degree fits under `degree_bound` the answer is exact, otherwise Unknown.
 */
inline AsResult artin_schreier_solvable(const Fe& a, int degree_bound = 8) {
  const Field& k = a.field();
  const Gf2n& f = k.base();
  const unsigned n = f.degree();
  if (a.is_zero()) return {Decision::Yes, k.zero()};

  if (!a.is_rational()) {
    if (f.trace(a.bits()) != 0) return {Decision::No, std::nullopt};
    // x -> x^2 + x is GF(2)-linear on the coefficient bits.
    detail::Gf2System sys(n);
    for (unsigned row = 0; row < n; ++row) {
      std::vector<std::size_t> lhs;
      for (unsigned col = 0; col < n; ++col) {
        auto x = std::uint32_t{1} << col;
        if (((f.mul(x, x) ^ x) >> row) & 1u) lhs.push_back(col);
      }
      sys.add(lhs, (a.bits() >> row) & 1u);
    }
    auto sol = sys.solve();
    if (!sol) return {Decision::No, std::nullopt};
    std::uint32_t x = 0;
    for (unsigned i = 0; i < n; ++i)
      if ((*sol)[i]) x |= 1u << i;
    return {Decision::Yes, k.from_bits(x)};
  }

  if (!detail::all_even(a.den())) return {Decision::No, std::nullopt};
  Poly g = detail::sqrt_poly(f, a.den());
  const Poly& p = a.num();
  const int dmax = static_cast<int>(std::max(g.total_degree(), p.total_degree() / 2));
  if (static_cast<int>(g.total_degree()) > degree_bound || dmax > degree_bound) return {Decision::Unknown, std::nullopt};

  std::vector<Monomial> monos;
  for (int d = 0; d <= dmax; ++d)
    for (int e1 = d; e1 >= 0; --e1) {
      int e2 = d - e1;
      if (k.num_vars() < 2 && e2 != 0) continue;
      if (k.num_vars() < 1 && e1 != 0) continue;
      monos.push_back({static_cast<std::uint32_t>(e1), static_cast<std::uint32_t>(e2)});
    }
  // Unknown j = monomial index * n + bit. Output monomials go up to degree 2*dmax.
  const std::size_t unknowns = monos.size() * n;
  auto mono_key = [](Monomial m) { return (static_cast<std::uint64_t>(m.e1) << 32) | m.e2; };
  std::map<std::uint64_t, std::vector<std::vector<std::size_t>>> eq;  // monomial -> per output bit, unknowns
  auto touch = [&](Monomial m) -> std::vector<std::vector<std::size_t>>& {
    auto& v = eq[mono_key(m)];
    if (v.empty()) v.resize(n);
    return v;
  };
  for (std::size_t i = 0; i < monos.size(); ++i) {
    for (unsigned bit = 0; bit < n; ++bit) {
      std::uint32_t c = std::uint32_t{1} << bit;
      std::size_t var = i * n + bit;
      // f^2 contribution: c^2 at 2m.
      auto& sq = touch({2 * monos[i].e1, 2 * monos[i].e2});
      auto c2 = f.mul(c, c);
      for (unsigned ob = 0; ob < n; ++ob)
        if ((c2 >> ob) & 1u) sq[ob].push_back(var);
      // f*g contribution.
      for (const auto& t : g.terms()) {
        auto& row = touch({monos[i].e1 + t.m.e1, monos[i].e2 + t.m.e2});
        auto cg = f.mul(c, t.c);
        for (unsigned ob = 0; ob < n; ++ob)
          if ((cg >> ob) & 1u) row[ob].push_back(var);
      }
    }
  }
  std::map<std::uint64_t, std::uint32_t> target;
  for (const auto& t : p.terms()) target[mono_key(t.m)] = t.c;
  detail::Gf2System sys(unknowns);
  for (const auto& [key, rows] : eq) {
    auto it = target.find(key);
    std::uint32_t rhs = it == target.end() ? 0 : it->second;
    for (unsigned ob = 0; ob < n; ++ob) sys.add(rows[ob], (rhs >> ob) & 1u);
  }
  for (const auto& [key, c] : target)
    if (!eq.count(key)) return {Decision::No, std::nullopt};
  auto sol = sys.solve();
  if (!sol) return {Decision::No, std::nullopt};
  std::vector<Term> terms;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    std::uint32_t c = 0;
    for (unsigned bit = 0; bit < n; ++bit)
      if ((*sol)[i * n + bit]) c |= 1u << bit;
    if (c) terms.push_back({monos[i], c});
  }
  Fe x = k.from_poly(Poly::from_terms(std::move(terms)), g);
  if (x.square() + x != a) fail(ErrorCode::Singular, "Artin-Schreier witness failed verification");
  return {Decision::Yes, x};
}

/// Coordinates of a over k^2 in the basis x^eps; entry eps lies in k^2.
inline std::vector<Fe> k2_coordinates(const Fe& a) {
  const Field& k = a.field();
  if (k.is_finite()) fail(ErrorCode::UnsupportedField, "k^2-coordinates need a rational function field");
  const Gf2n& f = k.base();
  const std::size_t m = k.num_vars();
  std::vector<Fe> out(std::size_t{1} << m, k.zero());
  if (a.is_zero()) return out;
  Poly pq = mul(f, a.num(), a.den());
  Poly q2 = mul(f, a.den(), a.den());
  std::vector<std::vector<Term>> parts(out.size());
  for (const auto& t : pq.terms()) {
    std::size_t eps = (t.m.e1 & 1u) | ((t.m.e2 & 1u) << 1);
    parts[eps].push_back({{t.m.e1 - (t.m.e1 & 1u), t.m.e2 - (t.m.e2 & 1u)}, t.c});
  }
  for (std::size_t eps = 0; eps < out.size(); ++eps)
    if (!parts[eps].empty()) out[eps] = k.from_poly(Poly::from_terms(std::move(parts[eps])), q2);
  return out;
}

/// [k^2(beta, gamma) : k^2], the k^2-rank of {1, beta, gamma, beta*gamma}.
inline int k2_extension_degree(const Fe& beta, const Fe& gamma) {
  if (beta.is_zero() || gamma.is_zero()) fail(ErrorCode::ZeroArgument, "parameters must be nonzero");
  if (beta.field() != gamma.field()) fail(ErrorCode::DescriptorMismatch, "parameters live in different fields");
  const Field& k = beta.field();
  if (k.is_finite()) return 1;
  // Rank over k of vectors with entries in k^2 equals their rank over k^2.
  std::vector<Vec> rows = {k2_coordinates(k.one()), k2_coordinates(beta), k2_coordinates(gamma),
                           k2_coordinates(beta * gamma)};
  return static_cast<int>(rank(Matrix::from_rows(k, rows, rows[0].size())));
}

}  // namespace octo2
