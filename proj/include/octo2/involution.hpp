#pragma once
/**
 * @file involution.hpp
 * @brief Type I and type II involutions of an octonion algebra.
 *
 * Type I: C = D + Dw for a quaternion subalgebra D, t(x + yw) = x + (ry)w.
 * Type II: C = B + Bu for a totally singular B, t(x + yu) = x + y(u + b)
 * with b in B^ = {b in B : q(b) = <b,u>}.
 */

#include <optional>
#include <string>
#include <vector>

#include "octo2/composition.hpp"

namespace octo2 {

enum class InvolutionType { I, II };

inline const char* to_string(InvolutionType t) { return t == InvolutionType::I ? "I" : "II"; }

struct Involution {
  Algebra algebra;
  Matrix matrix;
  InvolutionType type;  // how it was constructed
  Vec param;            // r for type I, b for type II
  Subalgebra fixed;     // D or B
};

/// Matrix of the linear map sending basis[i] to images[i].
inline Matrix linear_map(const Field& k, const std::vector<Vec>& basis, const std::vector<Vec>& images) {
  const std::size_t n = basis.size();
  return Matrix::from_columns(k, images, n) * inverse(Matrix::from_columns(k, basis, n));
}

/// First ambient basis vector (then pairwise sum) in D-perp with nonzero norm.
inline Vec quaternion_complement(const Subalgebra& d) {
  const Algebra& alg = d.algebra();
  Matrix cons(alg.field(), d.dim(), alg.dim());
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) cons(i, j) = alg.bil(d.rows().row(i), alg.basis(j));
  std::vector<Vec> cand;
  for (std::size_t j = 0; j < alg.dim(); ++j) cand.push_back(alg.basis(j));
  Matrix perp = kernel_basis(cons);
  for (std::size_t i = 0; i < perp.rows(); ++i) cand.push_back(perp.row(i));
  for (std::size_t i = 0; i < perp.rows(); ++i)
    for (std::size_t j = i + 1; j < perp.rows(); ++j) cand.push_back(Algebra::add(perp.row(i), perp.row(j)));
  for (const auto& x : cand)
    if (in_row_span(perp, x) && !alg.norm(x).is_zero()) return x;
  fail(ErrorCode::NotQuaternion, "orthogonal complement has no anisotropic vector");
}

/// Matrix of x + yw -> x + (ry)w for the canonical complement w of D.
inline Matrix type_I_matrix(const Subalgebra& d, const Vec& r) {
  const Algebra& alg = d.algebra();
  Vec w = quaternion_complement(d);
  std::vector<Vec> basis, images;
  for (std::size_t i = 0; i < d.dim(); ++i) {
    Vec x = d.rows().row(i);
    basis.push_back(x);
    images.push_back(x);
  }
  for (std::size_t i = 0; i < d.dim(); ++i) {
    Vec y = d.rows().row(i);
    basis.push_back(alg.mul(y, w));
    images.push_back(alg.mul(alg.mul(r, y), w));
  }
  return linear_map(alg.field(), basis, images);
}

/// r is admissible when r in D, r^2 = e, q(r) = 1 and r != e; returns the failure reason otherwise.
inline std::optional<std::string> type_I_defect(const Subalgebra& d, const Vec& r) {
  const Algebra& alg = d.algebra();
  alg.check(r);
  if (!d.contains(r)) return "r is not in D";
  if (r == alg.one()) return "r = e gives the identity";
  if (alg.mul(r, r) != alg.one()) return "r^2 != e";
  if (!alg.norm(r).is_one()) return "q(r) != 1";
  return std::nullopt;
}

inline Involution make_type_I(const Subalgebra& d, const Vec& r) {
  if (d.tag() != SubTag::Quaternion) fail(ErrorCode::NotQuaternion, "D is not a quaternion subalgebra");
  if (auto why = type_I_defect(d, r)) {
    std::string msg = *why;
    if (is_division(d).verdict == Decision::Yes)
      msg += "; D is a division algebra, and any admissible r would make e + r a nonzero element of norm 0";
    fail(ErrorCode::BadR, msg);
  }
  const Algebra& alg = d.algebra();
  Matrix m = type_I_matrix(d, r);
  if (m * m != Matrix::identity(alg.field(), 8) || !is_automorphism(alg, m))
    fail(ErrorCode::Internal, "type I construction is not an involutive automorphism");
  return {alg, m, InvolutionType::I, r, d};
}

struct AdmissibleRSearch {
  bool none_by_certificate = false;  // D certified division, so q(e + r) = 0 rules out every r
  std::optional<Vec> found;
  std::size_t candidates = 0;
};

/**
 * Looks for r in D with r^2 = e, r != e. Such r has <r,e> = 0 and q(r) = 1, so
 * q(e + r) = 0. Coefficients on the basis of D come from {0, 1, g, x_i, x_i^-1}
 * (all of k for finite fields).
 */
inline AdmissibleRSearch find_admissible_r(const Subalgebra& d, std::size_t max_candidates = 100000) {
  AdmissibleRSearch out;
  out.none_by_certificate = is_division(d).verdict == Decision::Yes;
  const Algebra& alg = d.algebra();
  const Field& k = alg.field();
  std::vector<Fe> pool;
  if (k.is_finite()) {
    pool = k.elements();
  } else {
    pool = {k.zero(), k.one()};
    if (k.base().degree() > 1) pool.push_back(k.gen());
    for (std::size_t i = 0; i < k.num_vars(); ++i) {
      pool.push_back(k.var(i));
      pool.push_back(k.var(i).inv());
      pool.push_back(k.var(i) + k.one());
    }
  }
  std::vector<std::size_t> idx(d.dim(), 0);
  while (detail::advance(idx, pool.size()) && out.candidates < max_candidates) {
    ++out.candidates;
    Vec r = alg.zero();
    for (std::size_t i = 0; i < d.dim(); ++i)
      if (!pool[idx[i]].is_zero()) r = Algebra::add(r, alg.scale(pool[idx[i]], d.rows().row(i)));
    if (!type_I_defect(d, r)) {
      out.found = r;
      break;
    }
  }
  return out;
}

/// A vector u with <u,e> = 1 and C = B + Bu for which u -> u + e is an automorphism.
inline Vec ts_complement(const Subalgebra& b) {
  const Algebra& alg = b.algebra();
  const Field& k = alg.field();
  std::vector<Vec> cand;
  for (std::size_t j = 1; j < alg.dim(); ++j) cand.push_back(alg.basis(j));
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) cand.push_back(Algebra::add(alg.basis(i), alg.basis(j)));
  for (const auto& u : cand) {
    if (!alg.bil(u, alg.one()).is_one()) continue;
    std::vector<Vec> basis, images;
    for (std::size_t i = 0; i < b.dim(); ++i) basis.push_back(b.rows().row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) basis.push_back(alg.mul(b.rows().row(i), u));
    if (rank(Matrix::from_columns(k, basis, alg.dim())) != alg.dim()) continue;
    for (std::size_t i = 0; i < b.dim(); ++i) images.push_back(b.rows().row(i));
    Vec ue = Algebra::add(u, alg.one());
    for (std::size_t i = 0; i < b.dim(); ++i) images.push_back(alg.mul(b.rows().row(i), ue));
    if (is_automorphism(alg, linear_map(k, basis, images))) return u;
  }
  fail(ErrorCode::NotTotallySingular, "no complement u found for B");
}

inline bool in_bhat(const Subalgebra& b, const Vec& u, const Vec& x) {
  const Algebra& alg = b.algebra();
  return b.contains(x) && alg.norm(x) == alg.bil(x, u);
}

/// Matrix of x + yu -> gB(x) + gB(y)(u + m); gB given on the rows of B (columns = images of rows).
inline Matrix type_II_style_matrix(const Subalgebra& b, const Vec& u, const std::vector<Vec>& row_images, const Vec& m) {
  const Algebra& alg = b.algebra();
  std::vector<Vec> basis, images;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    basis.push_back(b.rows().row(i));
    images.push_back(row_images[i]);
  }
  Vec um = Algebra::add(u, m);
  for (std::size_t i = 0; i < b.dim(); ++i) {
    basis.push_back(alg.mul(b.rows().row(i), u));
    images.push_back(alg.mul(row_images[i], um));
  }
  return linear_map(alg.field(), basis, images);
}

inline Involution make_type_II(const Subalgebra& b, const Vec& x) {
  if (b.tag() != SubTag::TotallySingular) fail(ErrorCode::NotTotallySingular, "B is not a totally singular subalgebra");
  const Algebra& alg = b.algebra();
  alg.check(x);
  if (!b.contains(x)) fail(ErrorCode::NotInBhat, "b is not in B");
  bool zero = true;
  for (const auto& c : x) zero = zero && c.is_zero();
  if (zero) fail(ErrorCode::ZeroB, "b = 0 gives the identity");
  Vec u = ts_complement(b);
  if (!in_bhat(b, u, x)) fail(ErrorCode::NotInBhat, "q(b) differs from the identity coefficient <b,u>");
  Matrix m = type_II_style_matrix(b, u, b.rows().row_list(), x);
  if (m * m != Matrix::identity(alg.field(), 8) || !is_automorphism(alg, m))
    fail(ErrorCode::ExtensionFails, "type II map is not an involutive automorphism");
  return {alg, m, InvolutionType::II, x, b};
}

struct FixedReport {
  Subalgebra sub;                           // kernel of M + I
  std::optional<InvolutionType> detected;   // empty for the identity
  std::size_t bilinear_rank = 0;            // rank of the bilinear form restricted to the fixed space
};

/**
 * Fixed points and intrinsic type. The fixed space of an involution is I when
 * it contains some z with <z,e> != 0 (a quaternion subalgebra is then fixed
 * elementwise) and II when it lies inside e-perp.
 */
inline FixedReport fixed_subalgebra(const Algebra& alg, const Matrix& m) {
  const Field& k = alg.field();
  Matrix id = Matrix::identity(k, alg.dim());
  if (m.rows() != alg.dim() || m.cols() != alg.dim()) fail(ErrorCode::DimensionMismatch, "matrix size does not match the algebra");
  if (m * m != id) fail(ErrorCode::NotInvolution, "M^2 != I");
  if (!is_automorphism(alg, m)) fail(ErrorCode::NotInvolution, "M is not an automorphism");
  Matrix ker = kernel_basis(m + id);
  Subalgebra sub = make_subalgebra(alg, ker.row_list());
  FixedReport out{sub, std::nullopt, 0};
  Matrix g(k, ker.rows(), ker.rows());
  for (std::size_t i = 0; i < ker.rows(); ++i)
    for (std::size_t j = 0; j < ker.rows(); ++j) g(i, j) = alg.bil(ker.row(i), ker.row(j));
  out.bilinear_rank = rank(g);
  if (m == id) return out;
  bool meets_e = false;
  for (std::size_t i = 0; i < ker.rows(); ++i) meets_e = meets_e || !alg.bil(ker.row(i), alg.one()).is_zero();
  out.detected = meets_e ? InvolutionType::I : InvolutionType::II;
  return out;
}

struct BhatSet {
  Subalgebra b;
  Vec u;
  std::optional<std::vector<Vec>> elements;  // finite fields only

  [[nodiscard]] bool contains(const Vec& x) const { return in_bhat(b, u, x); }
};

/// Visits every element of the span of `rows` over a finite field.
template <class F>
void for_each_in_span(const Algebra& alg, const Matrix& rows, F&& fn) {
  auto elems = alg.field().elements();
  std::vector<std::size_t> idx(rows.rows(), 0);
  do {
    Vec x = alg.zero();
    for (std::size_t i = 0; i < rows.rows(); ++i)
      if (!elems[idx[i]].is_zero()) x = Algebra::add(x, alg.scale(elems[idx[i]], rows.row(i)));
    fn(x);
  } while (detail::advance(idx, elems.size()));
}

inline BhatSet bhat(const Subalgebra& b) {
  if (b.tag() != SubTag::TotallySingular) fail(ErrorCode::NotTotallySingular, "B is not a totally singular subalgebra");
  BhatSet out{b, ts_complement(b), std::nullopt};
  const Algebra& alg = b.algebra();
  if (alg.field().is_finite()) {
    std::vector<Vec> all;
    for_each_in_span(alg, b.rows(), [&](const Vec& x) {
      if (out.contains(x)) all.push_back(x);
    });
    out.elements = std::move(all);
  }
  return out;
}

struct BhatStructure {
  std::string description;
  std::optional<std::uint64_t> order;
};

/// Over a perfect field q is the square of a linear form on B~, giving |k|^3 elements.
inline BhatStructure bhat_structure(const Subalgebra& b) {
  BhatSet s = bhat(b);
  const Field& k = b.algebra().field();
  if (k.is_finite()) return {"G+(k)^3 (k perfect)", static_cast<std::uint64_t>(s.elements->size())};
  if (is_division(b).verdict == Decision::Yes) return {"B^ additive subgroup of B (B division)", std::nullopt};
  return {"G+(k^2) x G+(k) x G+(k)", std::nullopt};
}

struct NormalForm {
  Matrix p;
  Matrix normal;
};

/// P with P R P^-1 = [[1,1],[0,1]] for R^2 = I, R != I.
inline NormalForm r_normal_form(const Matrix& r) {
  if (r.rows() != 2 || r.cols() != 2) fail(ErrorCode::DimensionMismatch, "R must be 2x2");
  const Field& k = r.field();
  Matrix id = Matrix::identity(k, 2);
  if (r * r != id || r == id) fail(ErrorCode::NotOrder2, "R must have order exactly 2");
  Matrix swap(k, 2, 2);
  swap(0, 1) = swap(1, 0) = k.one();
  Matrix s = id, rr = r;
  if (r(0, 1).is_zero()) {
    s = swap;
    rr = swap * r * swap;
  }
  Matrix p(k, 2, 2);
  p(0, 0) = k.one();
  p(1, 0) = rr(0, 0) + k.one();
  p(1, 1) = rr(0, 1);
  Matrix total = p * s;
  Matrix normal = total * r * inverse(total);
  Matrix unip = id;
  unip(0, 1) = k.one();
  if (normal != unip) fail(ErrorCode::Internal, "normal form computation failed");
  return {total, normal};
}

/// g(x + yw) = c x c^-1 + (p c y c^-1) w.
inline Matrix invD_map(const Subalgebra& d, const Vec& c, const Vec& p) {
  const Algebra& alg = d.algebra();
  if (!d.contains(c) || !d.contains(p)) fail(ErrorCode::BadNorms, "c and p must lie in D");
  if (alg.norm(c).is_zero() || !alg.norm(p).is_one()) fail(ErrorCode::BadNorms, "need q(c) != 0 and q(p) = 1");
  Vec w = quaternion_complement(d);
  Vec ci = alg.inverse(c);
  Vec pc = alg.mul(p, c);
  std::vector<Vec> basis, images;
  for (std::size_t i = 0; i < d.dim(); ++i) {
    Vec x = d.rows().row(i);
    basis.push_back(x);
    images.push_back(alg.mul(alg.mul(c, x), ci));
  }
  for (std::size_t i = 0; i < d.dim(); ++i) {
    Vec y = d.rows().row(i);
    basis.push_back(alg.mul(y, w));
    images.push_back(alg.mul(alg.mul(alg.mul(pc, y), ci), w));
  }
  return linear_map(alg.field(), basis, images);
}

/// Extends gB (images of the rows of B) by u -> u + m; throws when the result is not multiplicative.
inline Matrix extend_B_automorphism(const Subalgebra& b, const std::vector<Vec>& row_images, const Vec& m) {
  if (b.tag() != SubTag::TotallySingular) fail(ErrorCode::NotTotallySingular, "B is not a totally singular subalgebra");
  Vec u = ts_complement(b);
  if (!in_bhat(b, u, m)) fail(ErrorCode::NotInBhat, "m is not in B^");
  if (row_images.size() != b.dim()) fail(ErrorCode::DimensionMismatch, "need one image per basis row of B");
  Matrix g = type_II_style_matrix(b, u, row_images, m);
  if (!is_automorphism(b.algebra(), g)) fail(ErrorCode::ExtensionFails, "extension is not an automorphism");
  return g;
}

}  // namespace octo2
