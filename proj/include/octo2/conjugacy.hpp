#pragma once
/**
 * @file conjugacy.hpp
 * @brief Conjugacy of involutions and their centralizers.
 *
 * An automorphism is fixed by a basic triple (u', v', w'). Conjugating the
 * canonical involution t_{D0,r} (D0 = <e,u,v,uv>) to s means u', v' lie in
 * Fix(s) and s(w') = g(r)w'; for t_{B0,b} (B0 = <e,v,w,vw>) it means v', w'
 * lie in Fix(s) and s(u') = u' + g(b). All of these are linear conditions
 * plus one norm equation per vector, so the search walks affine spaces.
 */

#include <map>
#include <set>
#include <string>
#include <vector>

#include "octo2/field_ops.hpp"
#include "octo2/involution.hpp"

namespace octo2 {

struct Affine {
  Vec base;
  Matrix dirs;  // rows
};

/// Solutions of rows * x = rhs, or nothing when inconsistent.
inline std::optional<Affine> solve_affine(const Field& k, std::size_t n, const std::vector<Vec>& rows, const Vec& rhs) {
  Matrix aug(k, rows.size(), n + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = rows[i][j];
    aug(i, n) = rhs[i];
  }
  auto piv = rref(aug);
  Vec base(n, k.zero());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == n) return std::nullopt;
    base[piv[i]] = aug(i, n);
  }
  Matrix a(k, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
  return Affine{base, rows.empty() ? Matrix::identity(k, n) : kernel_basis(a)};
}

/// Accumulates linear conditions on a vector of the algebra.
class LinearConditions {
 public:
  explicit LinearConditions(const Algebra& alg) : alg_(alg) {}

  /// <x, y> = value
  void orthogonal(const Vec& y, const Fe& value) {
    Vec row;
    for (std::size_t j = 0; j < alg_.dim(); ++j) row.push_back(alg_.bil(alg_.basis(j), y));
    rows_.push_back(row);
    rhs_.push_back(value);
  }
  void orthogonal(const Vec& y) { orthogonal(y, alg_.field().zero()); }

  /// m x = target
  void equation(const Matrix& m, const Vec& target) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      rows_.push_back(m.row(i));
      rhs_.push_back(target[i]);
    }
  }

  [[nodiscard]] std::optional<Affine> solve() const { return solve_affine(alg_.field(), alg_.dim(), rows_, rhs_); }

 private:
  Algebra alg_;
  std::vector<Vec> rows_;
  Vec rhs_;
};

struct Budget {
  std::size_t left;
  bool complete = true;  // false once a search was cut short or sampled

  bool take() {
    if (left == 0) {
      complete = false;
      return false;
    }
    --left;
    return true;
  }
};

namespace detail {

/// Roots lambda of q(p + lambda d) = target.
inline std::vector<Fe> norm_line_roots(const Algebra& alg, const Vec& p, const Vec& d, const Fe& target) {
  const Field& k = alg.field();
  Fe a = alg.norm(d), b = alg.bil(p, d), c = alg.norm(p) + target;
  if (a.is_zero() && b.is_zero()) return c.is_zero() ? std::vector<Fe>{k.zero()} : std::vector<Fe>{};
  if (a.is_zero()) return {c / b};
  if (b.is_zero()) {
    Fe x = c / a;
    if (!is_square(x)) return {};
    return {sqrt(x)};
  }
  auto as = artin_schreier_solvable(c * a / b.square());
  if (as.verdict != Decision::Yes) return {};
  Fe s = b / a;
  return {s * *as.witness, s * (*as.witness + k.one())};
}

}  // namespace detail

/**
 * Calls fn(x) on points of `aff` with q(x) = target until fn returns true.
 * Finite fields: every point is visited. Otherwise the base point, lines
 * through it along each direction, and lines through base + c d_i along d_j
 * for small c are solved exactly, and `budget.complete` is cleared.
 */
template <class F>
bool for_each_norm_point(const Algebra& alg, const Affine& aff, const Fe& target, Budget& budget, F&& fn) {
  const Field& k = alg.field();
  const std::size_t m = aff.dirs.rows();
  if (k.is_finite()) {
    auto elems = k.elements();
    std::vector<std::size_t> idx(m, 0);
    do {
      if (!budget.take()) return false;
      Vec x = aff.base;
      for (std::size_t i = 0; i < m; ++i)
        if (!elems[idx[i]].is_zero()) x = Algebra::add(x, alg.scale(elems[idx[i]], aff.dirs.row(i)));
      if (alg.norm(x) == target && fn(x)) return true;
    } while (detail::advance(idx, elems.size()));
    return false;
  }
  budget.complete = false;
  std::vector<Vec> seen;
  auto visit = [&](const Vec& x) {
    for (const auto& s : seen)
      if (s == x) return false;
    seen.push_back(x);
    return budget.take() && alg.norm(x) == target && fn(x);
  };
  if (visit(aff.base)) return true;
  std::vector<Fe> pool = {k.one()};
  for (std::size_t i = 0; i < k.num_vars(); ++i) pool.push_back(k.var(i));
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& l : detail::norm_line_roots(alg, aff.base, aff.dirs.row(i), target))
      if (visit(Algebra::add(aff.base, alg.scale(l, aff.dirs.row(i))))) return true;
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& c : pool) {
      Vec p = Algebra::add(aff.base, alg.scale(c, aff.dirs.row(i)));
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        for (const auto& l : detail::norm_line_roots(alg, p, aff.dirs.row(j), target))
          if (visit(Algebra::add(p, alg.scale(l, aff.dirs.row(j))))) return true;
        if (budget.left == 0) return false;
      }
    }
  return false;
}

inline Matrix fix_equations(const Matrix& s) { return s + Matrix::identity(s.field(), s.rows()); }

/// Combination of the images of the D0 (or B0) basis with coefficients read from x.
inline Vec image_in(const Algebra& alg, const std::vector<Vec>& images, const std::vector<Fe>& coeffs) {
  Vec out = alg.zero();
  for (std::size_t i = 0; i < images.size(); ++i)
    if (!coeffs[i].is_zero()) out = Algebra::add(out, alg.scale(coeffs[i], images[i]));
  return out;
}

/**
 * g from a basic triple with g t_{D0,r} g^-1 = s; without r, any triple with
 * u', v' in Fix(s) (then g^-1 s g is of that shape for some r).
 */
inline std::optional<Matrix> search_type_I(const Algebra& alg, const Matrix& s, const std::optional<Vec>& r, Budget& budget) {
  const Field& k = alg.field();
  const Vec e = alg.one();
  Matrix fix = fix_equations(s);
  Vec zero = alg.zero();
  std::optional<Matrix> found;
  LinearConditions cu(alg);
  cu.equation(fix, zero);
  cu.orthogonal(e, k.one());
  auto au = cu.solve();
  if (!au) return std::nullopt;
  for_each_norm_point(alg, *au, alg.alpha(), budget, [&](const Vec& u2) {
    LinearConditions cv(alg);
    cv.equation(fix, zero);
    cv.orthogonal(e);
    cv.orthogonal(u2);
    auto av = cv.solve();
    if (!av) return false;
    return for_each_norm_point(alg, *av, alg.beta(), budget, [&](const Vec& v2) {
      Vec uv = alg.mul(u2, v2);
      LinearConditions cw(alg);
      for (const auto& x : {e, u2, v2, uv}) cw.orthogonal(x);
      if (r) {
        Vec gr = image_in(alg, {e, u2, v2, uv}, {(*r)[0], (*r)[1], (*r)[2], (*r)[3]});
        cw.equation(s + alg.left_mul_matrix(gr), zero);
      }
      auto aw = cw.solve();
      if (!aw) return false;
      return for_each_norm_point(alg, *aw, alg.gamma(), budget, [&](const Vec& w2) {
        if (!is_basic_triple(alg, u2, v2, w2)) return false;
        found = map_from_triple(alg, u2, v2, w2);
        return true;
      });
    });
  });
  return found;
}

/// As search_type_I for t_{B0,b}: v', w' in Fix(s) and s(u') = u' + g(b).
inline std::optional<Matrix> search_type_II(const Algebra& alg, const Matrix& s, const std::optional<Vec>& b, Budget& budget) {
  const Field& k = alg.field();
  const Vec e = alg.one();
  Matrix fix = fix_equations(s);
  Vec zero = alg.zero();
  std::optional<Matrix> found;
  LinearConditions cv(alg);
  cv.equation(fix, zero);
  cv.orthogonal(e);
  auto av = cv.solve();
  if (!av) return std::nullopt;
  for_each_norm_point(alg, *av, alg.beta(), budget, [&](const Vec& v2) {
    LinearConditions cw(alg);
    cw.equation(fix, zero);
    cw.orthogonal(e);
    cw.orthogonal(v2);
    auto aw = cw.solve();
    if (!aw) return false;
    return for_each_norm_point(alg, *aw, alg.gamma(), budget, [&](const Vec& w2) {
      Vec vw = alg.mul(v2, w2);
      LinearConditions cu(alg);
      cu.orthogonal(e, k.one());
      cu.orthogonal(v2);
      cu.orthogonal(w2);
      // <u' v', w'> = <u', w' conj(v')>
      cu.orthogonal(alg.mul(w2, alg.conj(v2)));
      if (b) cu.equation(fix, image_in(alg, {e, v2, w2, vw}, {(*b)[0], (*b)[2], (*b)[4], (*b)[6]}));
      auto au = cu.solve();
      if (!au) return false;
      return for_each_norm_point(alg, *au, alg.alpha(), budget, [&](const Vec& u2) {
        if (!is_basic_triple(alg, u2, v2, w2)) return false;
        found = map_from_triple(alg, u2, v2, w2);
        return true;
      });
    });
  });
  return found;
}

/// Canonical involutions t_{D0,r} and t_{B0,b}, with the parameter stored on the D0 / B0 coordinates.
inline Matrix canonical_involution(const Algebra& alg, InvolutionType type, const Vec& param) {
  return type == InvolutionType::I ? type_I_matrix(canonical_quaternion(alg), param)
                                   : type_II_style_matrix(canonical_totally_singular(alg), alg.basis(1),
                                                          canonical_totally_singular(alg).rows().row_list(), param);
}

/// The parameter when m is canonical of the given type.
inline std::optional<Vec> canonical_parameter(const Algebra& alg, InvolutionType type, const Matrix& m) {
  Vec p = alg.zero();
  if (type == InvolutionType::I) {
    for (std::size_t i : {0, 1, 2, 3})
      if (m.col(i) != alg.basis(i)) return std::nullopt;
    Vec mw = m.col(4);
    for (std::size_t i = 0; i < 4; ++i) {
      if (!mw[i].is_zero()) return std::nullopt;
      p[i] = mw[4 + i];
    }
  } else {
    for (std::size_t i : {0, 2, 4, 6})
      if (m.col(i) != alg.basis(i)) return std::nullopt;
    Vec mu = Algebra::add(m.col(1), alg.basis(1));
    for (std::size_t i : {1, 3, 5, 7})
      if (!mu[i].is_zero()) return std::nullopt;
    p = mu;
  }
  if (canonical_involution(alg, type, p) != m) return std::nullopt;
  return p;
}

enum class ConjVerdict { Conjugate, NotConjugate, Unknown };

inline const char* to_string(ConjVerdict v) {
  switch (v) {
    case ConjVerdict::Conjugate: return "conjugate";
    case ConjVerdict::NotConjugate: return "not_conjugate";
    default: return "unknown";
  }
}

struct ConjugacyResult {
  ConjVerdict verdict;
  std::optional<Matrix> witness;  // g with g t g^-1 = s
  std::string reason;
};

struct Reduction {
  Matrix g;  // g^-1 t g is canonical
  InvolutionType type;
  Vec param;
};

/// Canonical representative of the conjugacy class of t, if a triple is found.
inline std::optional<Reduction> reduce_to_canonical(const Algebra& alg, const Matrix& t, InvolutionType type, Budget& budget) {
  const Field& k = alg.field();
  if (auto p = canonical_parameter(alg, type, t)) return Reduction{Matrix::identity(k, 8), type, *p};
  auto g = type == InvolutionType::I ? search_type_I(alg, t, std::nullopt, budget) : search_type_II(alg, t, std::nullopt, budget);
  if (!g) return std::nullopt;
  Matrix tc = inverse(*g) * t * *g;
  auto p = canonical_parameter(alg, type, tc);
  if (!p) fail(ErrorCode::Internal, "adapted triple did not give a canonical involution");
  return Reduction{*g, type, *p};
}

/**
 * Decides whether s = g t g^-1 for some automorphism g. Returned witnesses are
 * verified. Negative answers come from invariants (fixed dimension, type,
 * rank of the bilinear form on Fix), from the division argument for type II
 * (Fix(t) = Fix(s) = B division forces g to fix B and commute with t), or from
 * an exhaustive triple search over a finite field.
 */
inline ConjugacyResult conjugacy_test(const Algebra& alg, const Matrix& t, const Matrix& s, std::size_t budget_points = 2000000) {
  if (alg.dim() != 8) fail(ErrorCode::DimensionMismatch, "conjugacy is implemented for octonion algebras");
  const Field& k = alg.field();
  if (t == s) return {ConjVerdict::Conjugate, Matrix::identity(k, 8), "equal"};
  FixedReport ft = fixed_subalgebra(alg, t), fs = fixed_subalgebra(alg, s);
  if (ft.sub.dim() != fs.sub.dim())
    return {ConjVerdict::NotConjugate, std::nullopt,
            "fixed spaces have dimensions " + std::to_string(ft.sub.dim()) + " and " + std::to_string(fs.sub.dim())};
  if (!ft.detected || !fs.detected) return {ConjVerdict::NotConjugate, std::nullopt, "exactly one map is the identity"};
  if (*ft.detected != *fs.detected)
    return {ConjVerdict::NotConjugate, std::nullopt, "one fixed space lies in e-perp and the other does not"};
  if (ft.bilinear_rank != fs.bilinear_rank)
    return {ConjVerdict::NotConjugate, std::nullopt, "bilinear form has different ranks on the fixed spaces"};
  if (*ft.detected == InvolutionType::II && ft.sub.same_space(fs.sub) && ft.sub.dim() == 4 &&
      is_division(ft.sub).verdict == Decision::Yes)
    return {ConjVerdict::NotConjugate, std::nullopt,
            "Fix(t) = Fix(s) = B is a division algebra: a conjugating g fixes B pointwise and sends u to u + m, so it commutes "
            "with t"};
  Budget budget{budget_points};
  auto red = reduce_to_canonical(alg, t, *ft.detected, budget);
  if (!red) return {ConjVerdict::Unknown, std::nullopt, "no adapted basic triple found for t"};
  Matrix tc = canonical_involution(alg, red->type, red->param);
  Budget search{budget.left};
  auto gs = red->type == InvolutionType::I ? search_type_I(alg, s, red->param, search) : search_type_II(alg, s, red->param, search);
  if (gs) {
    Matrix g = *gs * inverse(red->g);
    if (!is_automorphism(alg, g) || g * t != s * g || *gs * tc != s * *gs)
      fail(ErrorCode::Internal, "conjugating witness failed verification");
    return {ConjVerdict::Conjugate, g, "basic triple search"};
  }
  if (search.complete)
    return {ConjVerdict::NotConjugate, std::nullopt, "exhaustive basic triple search over a finite field found no conjugator"};
  return {ConjVerdict::Unknown, std::nullopt, "search budget exhausted"};
}

inline ConjugacyResult conjugacy_test(const Involution& t, const Involution& s, std::size_t budget_points = 2000000) {
  if (!t.algebra.same_as(s.algebra)) fail(ErrorCode::AlgebraMismatch, "involutions live in different algebras");
  return conjugacy_test(t.algebra, t.matrix, s.matrix, budget_points);
}

namespace detail {
inline std::string matrix_key(const Matrix& m) { return m.to_string(); }
}  // namespace detail

/// Automorphisms of a totally singular B over a finite field, as images of the rows of B.
inline std::vector<std::vector<Vec>> b_automorphisms(const Subalgebra& b) {
  const Algebra& alg = b.algebra();
  const Field& k = alg.field();
  if (!k.is_finite()) fail(ErrorCode::UnsupportedField, "enumeration needs a finite field");
  // generators b1, b2 with e, b1, b2, b1b2 a basis
  std::vector<Vec> gens;
  Vec e = alg.one();
  for (std::size_t i = 0; i < b.dim() && gens.size() < 2; ++i)
    for (std::size_t j = i + 1; j < b.dim() && gens.empty(); ++j) {
      Vec x = b.rows().row(i), y = b.rows().row(j);
      if (rank(Matrix::from_rows(k, {e, x, y, alg.mul(x, y)}, 8)) == 4) gens = {x, y};
    }
  if (gens.size() != 2) fail(ErrorCode::Internal, "B is not generated by two of its basis rows");
  std::vector<Vec> src = {e, gens[0], gens[1], alg.mul(gens[0], gens[1])};
  std::vector<Vec> p = Matrix::from_columns(k, src, 8).row_list();
  std::vector<Vec> coords;  // rows of B in the basis src
  for (const auto& row : b.rows().row_list()) coords.push_back(solve_affine(k, 4, p, row)->base);
  std::vector<Vec> elems;
  for_each_in_span(alg, b.rows(), [&](const Vec& x) { elems.push_back(x); });
  std::vector<std::vector<Vec>> out;
  for (const auto& a1 : elems) {
    if (alg.norm(a1) != alg.norm(gens[0]) || !alg.bil(a1, e).is_zero()) continue;
    for (const auto& a2 : elems) {
      if (alg.norm(a2) != alg.norm(gens[1])) continue;
      std::vector<Vec> dst = {e, a1, a2, alg.mul(a1, a2)};
      if (rank(Matrix::from_rows(k, dst, 8)) != 4) continue;
      std::vector<Vec> imgs;
      for (const auto& c : coords) imgs.push_back(image_in(alg, dst, c));
      out.push_back(imgs);
    }
  }
  return out;
}

struct FixedPointGroup {
  std::string description;
  std::vector<Matrix> elements;  // enumerated family (finite fields)
  std::optional<std::uint64_t> aut_b_order;
  std::optional<std::uint64_t> extendable_count;  // type II: B automorphisms occurring in the family
  std::optional<std::uint64_t> bhat_order;
};

/**
 * Type I: the maps x + yw -> cxc^-1 + (pcyc^-1)w commuting with t.
 * Type II: extensions x + yu -> g_B(x) + g_B(y)(u + m) commuting with t.
 * Finite fields enumerate the family; other fields only get the description.
 */
inline FixedPointGroup fixed_point_group(const Involution& t) {
  const Algebra& alg = t.algebra;
  const Field& k = alg.field();
  FixedPointGroup out;
  std::map<std::string, Matrix> seen;
  if (t.type == InvolutionType::I) {
    out.description = "{x + yw -> cxc^-1 + (pcyc^-1)w : c in D*, q(p) = 1, commuting with t}";
    if (!k.is_finite()) return out;
    std::vector<Vec> units, ones;
    for_each_in_span(alg, t.fixed.rows(), [&](const Vec& x) {
      Fe n = alg.norm(x);
      if (!n.is_zero()) units.push_back(x);
      if (n.is_one()) ones.push_back(x);
    });
    for (const auto& c : units)
      for (const auto& p : ones) {
        Matrix g = invD_map(t.fixed, c, p);
        if (g * t.matrix == t.matrix * g) seen.emplace(detail::matrix_key(g), g);
      }
  } else {
    bool division = is_division(t.fixed).verdict == Decision::Yes;
    out.description = division ? "B^ (B division)" : "Aut(B) x| B^";
    if (!k.is_finite()) return out;
    BhatSet bh = bhat(t.fixed);
    out.bhat_order = bh.elements->size();
    auto autos = b_automorphisms(t.fixed);
    out.aut_b_order = autos.size();
    std::uint64_t ext = 0;
    for (const auto& gb : autos) {
      bool any = false;
      for (const auto& m : *bh.elements) {
        Matrix g = type_II_style_matrix(t.fixed, bh.u, gb, m);
        if (!is_automorphism(alg, g) || g * t.matrix != t.matrix * g) continue;
        any = true;
        seen.emplace(detail::matrix_key(g), g);
      }
      if (any) ++ext;
    }
    out.extendable_count = ext;
  }
  for (auto& [key, g] : seen) out.elements.push_back(g);
  return out;
}

}  // namespace octo2
