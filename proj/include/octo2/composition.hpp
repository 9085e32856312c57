#pragma once
/**
 * @file composition.hpp
 * @brief Composition algebras of dimension 2, 4, 8 by Cayley-Dickson doubling.
 *
 * K = ke + ku with u^2 = u + alpha e. Each doubling A -> A + Av uses
 *   (a + b v)(c + d v) = (ac + beta conj(d) b) + (da + b conj(c)) v
 * and conj(a + b v) = conj(a) + b v. Coordinates follow the basis
 *   e, u, v, uv, w, uw, vw, (uv)w
 * and elements are plain coordinate vectors.
 */

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "octo2/matrix.hpp"
#include "octo2/quadform.hpp"

namespace octo2 {

inline constexpr std::array<const char*, 8> kBasisLabels = {"e", "u", "v", "uv", "w", "uw", "vw", "(uv)w"};

enum class SubTag { Quaternion, TotallySingular, Other };

inline const char* to_string(SubTag t) {
  switch (t) {
    case SubTag::Quaternion: return "Quaternion";
    case SubTag::TotallySingular: return "TotallySingular";
    case SubTag::Other: return "Other";
  }
  return "?";
}

class Algebra {
 public:
  struct Entry {
    std::size_t index;
    Fe coeff;
  };

  Algebra() = default;

  /// beta and gamma are ignored below the dimension that uses them.
  static Algebra build(const Field& k, std::size_t dim, const Fe& alpha, std::optional<Fe> beta = std::nullopt,
                       std::optional<Fe> gamma = std::nullopt) {
    if (dim != 2 && dim != 4 && dim != 8) fail(ErrorCode::DimensionMismatch, "dimension must be 2, 4 or 8");
    auto impl = std::make_shared<Impl>();
    impl->k = k;
    impl->dim = dim;
    impl->params.push_back(alpha);
    if (dim >= 4) {
      if (!beta || beta->is_zero()) fail(ErrorCode::ZeroParameter, "beta must be nonzero");
      impl->params.push_back(*beta);
    }
    if (dim == 8) {
      if (!gamma || gamma->is_zero()) fail(ErrorCode::ZeroParameter, "gamma must be nonzero");
      impl->params.push_back(*gamma);
    }
    for (const auto& p : impl->params)
      if (p.field() != k) fail(ErrorCode::DescriptorMismatch, "parameter lives in another field");
    if (dim == 2 && k.is_finite() && k.base().degree() == 1 && alpha.is_zero())
      fail(ErrorCode::ExcludedSmallCase, "dimension 2 over GF(2) with isotropic norm has no basis of the required shape");
    Algebra a(std::move(impl));
    a.fill_table();
    return a;
  }

  [[nodiscard]] bool valid() const noexcept { return static_cast<bool>(p_); }
  [[nodiscard]] const Field& field() const { return p_->k; }
  [[nodiscard]] std::size_t dim() const { return p_->dim; }
  [[nodiscard]] const Fe& alpha() const { return p_->params[0]; }
  [[nodiscard]] const Fe& beta() const { return p_->params.at(1); }
  [[nodiscard]] const Fe& gamma() const { return p_->params.at(2); }
  [[nodiscard]] const std::vector<Fe>& params() const { return p_->params; }
  [[nodiscard]] bool same_as(const Algebra& o) const {
    return p_ == o.p_ || (p_->k == o.p_->k && p_->dim == o.p_->dim && p_->params == o.p_->params && !p_->corrupted &&
                          !o.p_->corrupted);
  }

  [[nodiscard]] Vec zero() const { return Vec(dim(), field().zero()); }
  [[nodiscard]] Vec basis(std::size_t i) const {
    Vec v = zero();
    v.at(i) = field().one();
    return v;
  }
  [[nodiscard]] Vec one() const { return basis(0); }

  /// Product of basis vectors i and j as sparse coordinates.
  [[nodiscard]] const std::vector<Entry>& table(std::size_t i, std::size_t j) const { return p_->table[i * dim() + j]; }

  [[nodiscard]] Vec mul(const Vec& a, const Vec& b) const {
    check(a);
    check(b);
    Vec out = zero();
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j].is_zero()) continue;
        Fe c = a[i] * b[j];
        for (const auto& en : p_->table[i * n + j]) out[en.index] += c * en.coeff;
      }
    }
    return out;
  }

  /// Norm via the polynomial of the orthogonal decomposition.
  [[nodiscard]] Fe norm(const Vec& x) const {
    check(x);
    return p_->form.evaluate(to_form_coords(x));
  }

  [[nodiscard]] Fe bil(const Vec& x, const Vec& y) const {
    check(x);
    check(y);
    return p_->form.bilinear(to_form_coords(x), to_form_coords(y));
  }

  /// The norm form [1,a] P [b,a/b] P [g,a/g] P [bg,a/(bg)] (truncated to dim).
  [[nodiscard]] const QuadraticForm& form() const { return p_->form; }

  /// Coordinates in which norm() is form().evaluate(): the second entry of each pair is scaled.
  [[nodiscard]] Vec to_form_coords(const Vec& x) const {
    Vec y = x;
    for (std::size_t blk = 1; blk < dim() / 2; ++blk) y[2 * blk + 1] = y[2 * blk + 1] * p_->block_scale[blk];
    return y;
  }

  [[nodiscard]] Matrix gram() const {
    Matrix g(field(), dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) g(i, j) = bil(basis(i), basis(j));
    return g;
  }

  /// conj(x) = <x,e> e + x, and <x,e> is the u-coordinate.
  [[nodiscard]] Vec conj(const Vec& x) const {
    check(x);
    Vec y = x;
    y[0] += x[1];
    return y;
  }

  [[nodiscard]] Vec inverse(const Vec& x) const {
    Fe n = norm(x);
    if (n.is_zero()) fail(ErrorCode::NotInvertible, "element of norm 0 has no inverse");
    return scale(n.inv(), conj(x));
  }

  [[nodiscard]] Vec scale(const Fe& c, const Vec& x) const {
    Vec y = x;
    for (auto& t : y) t = c * t;
    return y;
  }
  [[nodiscard]] static Vec add(const Vec& a, const Vec& b) {
    Vec y = a;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += b[i];
    return y;
  }

  /// Left multiplication by a as a matrix acting on coordinate columns.
  [[nodiscard]] Matrix left_mul_matrix(const Vec& a) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul(a, basis(j)));
    return Matrix::from_columns(field(), cols, dim());
  }
  [[nodiscard]] Matrix right_mul_matrix(const Vec& a) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul(basis(j), a));
    return Matrix::from_columns(field(), cols, dim());
  }

  /// Copy with one structure constant perturbed; used only as a negative control.
  [[nodiscard]] Algebra corrupted(std::size_t i, std::size_t j, std::size_t l) const {
    auto impl = std::make_shared<Impl>(*p_);
    impl->corrupted = true;
    auto& entries = impl->table[i * dim() + j];
    bool found = false;
    for (auto it = entries.begin(); it != entries.end(); ++it)
      if (it->index == l) {
        it->coeff += field().one();
        if (it->coeff.is_zero()) entries.erase(it);
        found = true;
        break;
      }
    if (!found) entries.push_back({l, field().one()});
    return Algebra(std::move(impl));
  }

  [[nodiscard]] std::string element_to_string(const Vec& x) const {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      std::string c = x[i].to_string();
      bool compound = c.find_first_of("+/") != std::string::npos;
      if (i == 0) {
        s += x[i].is_one() ? std::string("e") : compound ? "(" + c + ")" : c;
      } else if (x[i].is_one()) {
        s += kBasisLabels[i];
      } else {
        s += (compound ? "(" + c + ")" : c) + "*" + kBasisLabels[i];
      }
    }
    return s.empty() ? "0" : s;
  }

  void check(const Vec& x) const {
    if (x.size() != dim()) fail(ErrorCode::AlgebraMismatch, "element has the wrong number of coordinates");
    for (const auto& c : x)
      if (c.field() != field()) fail(ErrorCode::AlgebraMismatch, "element coordinates live in another field");
  }

 private:
  struct Impl {
    Field k;
    std::size_t dim = 0;
    std::vector<Fe> params;
    std::vector<std::vector<Entry>> table;
    QuadraticForm form;
    std::vector<Fe> block_scale;
    bool corrupted = false;
  };

  explicit Algebra(std::shared_ptr<const Impl> p) : p_(std::move(p)) {}
  explicit Algebra(std::shared_ptr<Impl> p) : p_(std::move(p)) {}

  // Recursive doubling on coordinate vectors of length 2^level.
  static Vec cd_conj(const Vec& x) {
    Vec y = x;
    y[0] += x[1];
    return y;
  }

  Vec cd_mul(std::size_t level, const Vec& a, const Vec& b) const {
    const Field& k = p_->k;
    if (level == 1) {
      const Fe& al = p_->params[0];
      return {a[0] * b[0] + al * a[1] * b[1], a[0] * b[1] + a[1] * b[0] + a[1] * b[1]};
    }
    const std::size_t h = a.size() / 2;
    Vec a0(a.begin(), a.begin() + static_cast<long>(h)), a1(a.begin() + static_cast<long>(h), a.end());
    Vec c0(b.begin(), b.begin() + static_cast<long>(h)), c1(b.begin() + static_cast<long>(h), b.end());
    const Fe& par = p_->params[level - 1];
    Vec x = cd_mul(level - 1, a0, c0);
    Vec y = cd_mul(level - 1, cd_conj(c1), a1);
    Vec z = cd_mul(level - 1, c1, a0);
    Vec t = cd_mul(level - 1, a1, cd_conj(c0));
    Vec out(a.size(), k.zero());
    for (std::size_t i = 0; i < h; ++i) {
      out[i] = x[i] + par * y[i];
      out[h + i] = z[i] + t[i];
    }
    return out;
  }

  void fill_table() {
    auto& p = *std::const_pointer_cast<Impl>(p_);
    const Field& k = p.k;
    const std::size_t n = p.dim;
    std::size_t level = n == 2 ? 1 : n == 4 ? 2 : 3;
    p.table.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec r = cd_mul(level, basis(i), basis(j));
        for (std::size_t l = 0; l < n; ++l)
          if (!r[l].is_zero()) p.table[i * n + j].push_back({l, r[l]});
      }
    const Fe& a = p.params[0];
    std::vector<Fe> scales = {k.one()};
    if (n >= 4) scales.push_back(p.params[1]);
    if (n == 8) {
      scales.push_back(p.params[2]);
      scales.push_back(p.params[1] * p.params[2]);
    }
    std::vector<std::pair<Fe, Fe>> blocks;
    for (const auto& s : scales) blocks.emplace_back(s, a / s);
    p.block_scale = scales;
    p.form = QuadraticForm(k, std::move(blocks), {});
  }

  std::shared_ptr<const Impl> p_;
};

/// Parses 8 (or dim) comma-separated field literals, or a sum of terms like "x1*v + (x1+1)*uv + e".
inline Vec parse_algebra_element(const Algebra& alg, std::string_view text) {
  const Field& k = alg.field();
  std::string s = detail::strip(text);
  auto split_top = [](const std::string& str, auto is_sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (std::size_t i = 0; i < str.size(); ++i) {
      char c = str[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && is_sep(str, i)) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  };
  auto commas = split_top(s, [](const std::string& str, std::size_t i) { return str[i] == ','; });
  if (commas.size() > 1) {
    if (commas.size() != alg.dim()) fail(ErrorCode::DimensionMismatch, "expected one coordinate per basis vector");
    Vec v;
    for (const auto& c : commas) v.push_back(parse_element(k, c));
    return v;
  }
  // Replace the parenthesized label so that top-level splitting sees one token.
  std::string t;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 5, "(uv)w") == 0) {
      t += "uvw";
      i += 4;
    } else {
      t += s[i];
    }
  }
  auto terms = split_top(t, [](const std::string& str, std::size_t i) {
    return str[i] == '+' || (str[i] == '-' && i > 0 && str[i - 1] != '^');
  });
  Vec out = alg.zero();
  for (const auto& term : terms) {
    if (term.empty()) fail(ErrorCode::ParseError, "empty term in element literal");
    auto factors = split_top(term, [](const std::string& str, std::size_t i) { return str[i] == '*'; });
    std::size_t label = 0;
    bool have_label = false;
    Fe coeff = k.one();
    for (const auto& f : factors) {
      std::size_t idx = alg.dim();
      for (std::size_t b = 0; b < alg.dim(); ++b)
        if (f == kBasisLabels[b] || (b == 7 && f == "uvw")) idx = b;
      if (idx < alg.dim()) {
        if (have_label) fail(ErrorCode::ParseError, "products of basis labels are not supported in literals");
        have_label = true;
        label = idx;
      } else {
        coeff *= parse_element(k, f);
      }
    }
    out[label] += coeff;
  }
  return out;
}

class Subalgebra {
 public:
  Subalgebra() = default;
  Subalgebra(Algebra alg, Matrix rows, SubTag tag) : alg_(std::move(alg)), rows_(std::move(rows)), tag_(tag) {}

  [[nodiscard]] const Algebra& algebra() const { return alg_; }
  /// Basis vectors as rows.
  [[nodiscard]] const Matrix& rows() const { return rows_; }
  [[nodiscard]] SubTag tag() const { return tag_; }
  [[nodiscard]] std::size_t dim() const { return rows_.rows(); }
  [[nodiscard]] bool contains(const Vec& x) const { return in_row_span(rows_, x); }
  /// Same subspace, regardless of the chosen basis.
  [[nodiscard]] bool same_space(const Subalgebra& o) const {
    return alg_.same_as(o.alg_) && row_space(rows_) == row_space(o.rows_);
  }

 private:
  Algebra alg_;
  Matrix rows_;
  SubTag tag_ = SubTag::Other;
};

/// Quaternion when the bilinear form is nondegenerate on the span, totally singular when it vanishes.
inline SubTag classify_subspace(const Algebra& alg, const Matrix& rows) {
  if (rows.rows() != 4) return SubTag::Other;
  Matrix g(alg.field(), 4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = alg.bil(rows.row(i), rows.row(j));
  std::size_t r = rank(g);
  if (r == 4) return SubTag::Quaternion;
  return r == 0 ? SubTag::TotallySingular : SubTag::Other;
}

inline Subalgebra make_subalgebra(const Algebra& alg, const std::vector<Vec>& rows) {
  if (rows.empty()) fail(ErrorCode::MissingIdentity, "empty subspace");
  for (const auto& r : rows) alg.check(r);
  Matrix m = Matrix::from_rows(alg.field(), rows, alg.dim());
  if (rank(m) != rows.size()) fail(ErrorCode::DimensionMismatch, "subalgebra rows are linearly dependent");
  if (!in_row_span(m, alg.one())) fail(ErrorCode::MissingIdentity, "identity is not in the span");
  for (const auto& a : rows)
    for (const auto& b : rows)
      if (!in_row_span(m, alg.mul(a, b))) fail(ErrorCode::NotClosed, "span is not closed under multiplication");
  return Subalgebra(alg, m, classify_subspace(alg, m));
}

inline Subalgebra canonical_quaternion(const Algebra& alg) {
  if (alg.dim() < 4) fail(ErrorCode::DimensionMismatch, "algebra has no quaternion subalgebra");
  return make_subalgebra(alg, {alg.basis(0), alg.basis(1), alg.basis(2), alg.basis(3)});
}

inline Subalgebra canonical_totally_singular(const Algebra& alg) {
  if (alg.dim() != 8) fail(ErrorCode::DimensionMismatch, "needs an octonion algebra");
  return make_subalgebra(alg, {alg.basis(0), alg.basis(2), alg.basis(4), alg.basis(6)});
}

struct DivisionResult {
  Decision verdict = Decision::Unknown;
  std::optional<Vec> zero_divisor;  // nonzero element of norm 0 when verdict is No
  std::string reason;
};

/**
 * Springer-type certificate for a quaternion norm [1,a] P b[1,a] over
 * GF(2^n)(x1, x2): if a and c lie in GF(2^n)(x1), [1,a] is anisotropic and
 * b = x2 * c, the residue forms at the x2-adic valuation are [1,a] and c[1,a],
 * both anisotropic, so the norm is anisotropic. The roles of x1, x2 may swap.
 */
inline bool quaternion_division_certificate(const Fe& alpha, const Fe& beta) {
  const Field& k = alpha.field();
  if (k.is_finite() || k.num_vars() != 2 || beta.is_zero()) return false;
  for (int var = 0; var < 2; ++var) {
    int other = 1 - var;
    auto free_of = [&](const Fe& a, int v) { return a.num().degree_in(v) == 0 && a.den().degree_in(v) == 0; };
    Fe c = beta / k.var(static_cast<std::size_t>(other));
    if (!free_of(alpha, other) || !free_of(c, other)) continue;
    if (artin_schreier_solvable(alpha, 64).verdict == Decision::No) return true;
  }
  return false;
}

/// Zero-divisor search on the span of `rows` (the whole algebra when rows is the identity).
inline DivisionResult is_division(const Algebra& alg, const Matrix& rows, int search_bound = 1) {
  const Field& k = alg.field();
  const std::size_t d = rows.rows();
  auto combo = [&](const Vec& coeffs) {
    Vec x = alg.zero();
    for (std::size_t i = 0; i < d; ++i)
      if (!coeffs[i].is_zero()) x = Algebra::add(x, alg.scale(coeffs[i], rows.row(i)));
    return x;
  };
  if (k.is_finite()) {
    double points = 1;
    for (std::size_t i = 0; i < d; ++i) points *= k.size();
    if (points > double(1u << 24)) fail(ErrorCode::DomainTooLarge, "subspace too large for exhaustive search");
    auto elems = k.elements();
    std::vector<std::size_t> idx(d, 0);
    while (detail::advance(idx, elems.size())) {
      Vec c;
      for (auto i : idx) c.push_back(elems[i]);
      Vec x = combo(c);
      if (alg.norm(x).is_zero()) return {Decision::No, x, "exhaustive search found an element of norm 0"};
    }
    return {Decision::Yes, std::nullopt, "exhaustive search: every nonzero element has nonzero norm"};
  }
  // Totally singular spans: q is additive on squares, so isotropy is a k^2-dependence question.
  bool orthogonal = true;
  for (std::size_t i = 0; i < d && orthogonal; ++i)
    for (std::size_t j = i + 1; j < d && orthogonal; ++j) orthogonal = alg.bil(rows.row(i), rows.row(j)).is_zero();
  if (orthogonal) {
    std::vector<Fe> norms;
    for (std::size_t i = 0; i < d; ++i) norms.push_back(alg.norm(rows.row(i)));
    auto r = totally_singular_isotropy(k, norms);
    if (r.verdict == Decision::Yes) return {Decision::No, combo(*r.witness), "k^2-dependent norms of a totally singular basis"};
    return {Decision::Yes, std::nullopt, "norms of a totally singular basis are k^2-independent"};
  }
  // An element t e + u of norm 0 exists exactly when alpha is in the Artin-Schreier set.
  Vec u = alg.basis(1);
  if (in_row_span(rows, alg.one()) && in_row_span(rows, u)) {
    auto as = artin_schreier_solvable(alg.alpha(), 16);
    if (as.verdict == Decision::Yes) {
      Vec x = alg.scale(*as.witness, alg.one());
      x[1] += k.one();
      return {Decision::No, x, "alpha = t^2 + t gives the norm-0 element t e + u"};
    }
    Matrix d4 = Matrix::from_rows(k, {alg.basis(0), alg.basis(1), alg.basis(2), alg.basis(3)}, alg.dim());
    if (alg.dim() >= 4 && d == 4 && row_space(rows) == row_space(d4) &&
        quaternion_division_certificate(alg.alpha(), alg.beta()))
      return {Decision::Yes, std::nullopt, "valuation certificate: both residue forms of [1,alpha] P beta[1,alpha] are anisotropic"};
  }
  std::vector<Fe> pool = {k.zero(), k.one()};
  for (std::size_t i = 0; i < k.num_vars(); ++i) {
    Fe t = k.var(i);
    for (int e = 1; e <= search_bound; ++e, t *= k.var(i)) pool.push_back(t);
  }
  double points = 1;
  for (std::size_t i = 0; i < d; ++i) points *= static_cast<double>(pool.size());
  if (points <= 2e5) {
    std::vector<std::size_t> idx(d, 0);
    while (detail::advance(idx, pool.size())) {
      Vec c;
      for (auto i : idx) c.push_back(pool[i]);
      Vec x = combo(c);
      if (alg.norm(x).is_zero()) return {Decision::No, x, "bounded search found an element of norm 0"};
    }
  }
  return {Decision::Unknown, std::nullopt, "no certificate applies and bounded search found no zero divisor"};
}

inline DivisionResult is_division(const Algebra& alg) { return is_division(alg, Matrix::identity(alg.field(), alg.dim())); }
inline DivisionResult is_division(const Subalgebra& s) { return is_division(s.algebra(), s.rows()); }

/// Multiplicative, unital and invertible; isometry and conj-compatibility are then asserted.
inline bool is_automorphism(const Algebra& alg, const Matrix& m) {
  const std::size_t n = alg.dim();
  if (m.rows() != n || m.cols() != n) fail(ErrorCode::DimensionMismatch, "matrix size does not match the algebra");
  if (m.col(0) != alg.one()) return false;
  if (det(m).is_zero()) return false;
  std::vector<Vec> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(m.col(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.apply(alg.mul(alg.basis(i), alg.basis(j))) != alg.mul(img[i], img[j])) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (alg.norm(img[i]) != alg.norm(alg.basis(i)) || m.apply(alg.conj(alg.basis(i))) != alg.conj(img[i]))
      fail(ErrorCode::Internal, "multiplicative map is not an isometry");
    for (std::size_t j = i + 1; j < n; ++j)
      if (alg.bil(img[i], img[j]) != alg.bil(alg.basis(i), alg.basis(j)))
        fail(ErrorCode::Internal, "multiplicative map does not preserve the bilinear form");
  }
  return true;
}

/// The map sending (u, v, w) to (u2, v2, w2), with columns e, u2, v2, u2v2, w2, u2w2, v2w2, (u2v2)w2.
inline Matrix map_from_triple(const Algebra& alg, const Vec& u2, const Vec& v2, const Vec& w2) {
  if (alg.dim() != 8) fail(ErrorCode::DimensionMismatch, "basic triples live in octonion algebras");
  Vec uv = alg.mul(u2, v2);
  std::vector<Vec> cols = {alg.one(), u2, v2, uv, w2, alg.mul(u2, w2), alg.mul(v2, w2), alg.mul(uv, w2)};
  return Matrix::from_columns(alg.field(), cols, 8);
}

/// The conditions under which map_from_triple is an automorphism.
inline bool is_basic_triple(const Algebra& alg, const Vec& u2, const Vec& v2, const Vec& w2) {
  const Vec e = alg.one();
  if (!alg.bil(u2, e).is_one() || alg.norm(u2) != alg.alpha()) return false;
  if (!alg.bil(v2, e).is_zero() || !alg.bil(v2, u2).is_zero() || alg.norm(v2) != alg.beta()) return false;
  const Vec uv = alg.mul(u2, v2);
  for (const Vec* x : {&e, &u2, &v2, &uv})
    if (!alg.bil(w2, *x).is_zero()) return false;
  return alg.norm(w2) == alg.gamma();
}

}  // namespace octo2
