#pragma once
/**
 * @file quadform.hpp
 * @brief Characteristic-2 quadratic forms [a1,b1] P ... P <c1,...,cs>.
 *
 * Coordinates are laid out block by block as (x_i, y_i), followed by the
 * diagonal coordinates z_j, so
 *   q(v) = sum a_i x_i^2 + x_i y_i + b_i y_i^2 + sum c_j z_j^2.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "octo2/field_ops.hpp"
#include "octo2/matrix.hpp"
#include "octo2/parse.hpp"

namespace octo2 {

class QuadraticForm {
 public:
  QuadraticForm() = default;
  QuadraticForm(Field k, std::vector<std::pair<Fe, Fe>> blocks, std::vector<Fe> diagonal)
      : k_(k), blocks_(std::move(blocks)), diag_(std::move(diagonal)) {
    for (const auto& [a, b] : blocks_)
      if (a.field() != k_ || b.field() != k_) fail(ErrorCode::DescriptorMismatch, "form entries live in another field");
    for (const auto& c : diag_)
      if (c.field() != k_) fail(ErrorCode::DescriptorMismatch, "form entries live in another field");
  }

  /// The quasi-Pfister form <<beta, gamma>> = <1, beta, gamma, beta*gamma>.
  static QuadraticForm quasi_pfister(const Fe& beta, const Fe& gamma) {
    const Field& k = beta.field();
    return QuadraticForm(k, {}, {k.one(), beta, gamma, beta * gamma});
  }

  [[nodiscard]] const Field& field() const noexcept { return k_; }
  [[nodiscard]] const std::vector<std::pair<Fe, Fe>>& blocks() const noexcept { return blocks_; }
  [[nodiscard]] const std::vector<Fe>& diagonal() const noexcept { return diag_; }
  [[nodiscard]] std::size_t dim() const noexcept { return 2 * blocks_.size() + diag_.size(); }
  [[nodiscard]] bool totally_singular() const noexcept { return blocks_.empty(); }

  [[nodiscard]] Fe evaluate(const Vec& x) const {
    if (x.size() != dim()) fail(ErrorCode::DimensionMismatch, "vector length does not match the form");
    Fe s = k_.zero();
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      const Fe &X = x[2 * i], &Y = x[2 * i + 1];
      s += blocks_[i].first * X.square() + X * Y + blocks_[i].second * Y.square();
    }
    for (std::size_t j = 0; j < diag_.size(); ++j) s += diag_[j] * x[2 * blocks_.size() + j].square();
    return s;
  }

  /// b(x, y) = q(x+y) + q(x) + q(y); only the blocks contribute.
  [[nodiscard]] Fe bilinear(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim()) fail(ErrorCode::DimensionMismatch, "vector length does not match the form");
    Fe s = k_.zero();
    for (std::size_t i = 0; i < blocks_.size(); ++i) s += x[2 * i] * y[2 * i + 1] + x[2 * i + 1] * y[2 * i];
    return s;
  }

  [[nodiscard]] Matrix gram() const {
    Matrix g(k_, dim(), dim());
    for (std::size_t i = 0; i < blocks_.size(); ++i) g(2 * i, 2 * i + 1) = g(2 * i + 1, 2 * i) = k_.one();
    return g;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (const auto& [a, b] : blocks_) {
      if (!s.empty()) s += " P ";
      s += "[" + a.to_string() + "," + b.to_string() + "]";
    }
    if (!diag_.empty()) {
      if (!s.empty()) s += " P ";
      s += "<";
      for (std::size_t j = 0; j < diag_.size(); ++j) s += (j ? "," : "") + diag_[j].to_string();
      s += ">";
    }
    return s.empty() ? "<>" : s;
  }

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.k_ == b.k_ && a.blocks_ == b.blocks_ && a.diag_ == b.diag_;
  }

 private:
  Field k_;
  std::vector<std::pair<Fe, Fe>> blocks_;
  std::vector<Fe> diag_;
};

enum class RewriteVariant { Swap, Shift };

struct Rewrite {
  QuadraticForm form;
  Matrix witness;  // rewritten(witness * v) = original(v) for every v
};

/**
 * Applies one of the six standard equivalences.
 *   1: <a> -> <x^2 a>                       (diagonal position i, scalar x)
 *   2: [a,b] -> [a x^2, b x^-2]             (block i, scalar x)
 *   3: <a,b> -> <b,a> | <a,a+b>             (diagonal positions i, j)
 *   4: [a,b] -> [b,a] | [a,a+b+1]           (block i)
 *   5: [a,b] P <c> -> [a+c,b] P <c>         (block i, diagonal j)
 *   6: [a,b] P [c,d] -> [a+c,b] P [c,b+d]   (blocks i, j)
 */
inline Rewrite rewrite(int rule, const QuadraticForm& q, std::size_t i, std::size_t j = 0,
                       std::optional<Fe> x = std::nullopt, RewriteVariant variant = RewriteVariant::Swap) {
  const Field& k = q.field();
  auto blocks = q.blocks();
  auto diag = q.diagonal();
  const std::size_t off = 2 * blocks.size();
  Matrix m = Matrix::identity(k, q.dim());
  auto need_block = [&](std::size_t p) {
    if (p >= blocks.size()) fail(ErrorCode::InvalidPosition, "no block at position " + std::to_string(p));
  };
  auto need_diag = [&](std::size_t p) {
    if (p >= diag.size()) fail(ErrorCode::InvalidPosition, "no diagonal entry at position " + std::to_string(p));
  };
  auto need_scalar = [&]() -> Fe {
    if (!x || x->is_zero()) fail(ErrorCode::ZeroScalar, "rule needs a nonzero scalar");
    if (x->field() != k) fail(ErrorCode::DescriptorMismatch, "scalar lives in another field");
    return *x;
  };
  switch (rule) {
    case 1: {
      need_diag(i);
      Fe s = need_scalar();
      diag[i] = s.square() * diag[i];
      m(off + i, off + i) = s.inv();
      break;
    }
    case 2: {
      need_block(i);
      Fe s = need_scalar();
      blocks[i] = {blocks[i].first * s.square(), blocks[i].second * s.square().inv()};
      m(2 * i, 2 * i) = s.inv();
      m(2 * i + 1, 2 * i + 1) = s;
      break;
    }
    case 3: {
      need_diag(i);
      need_diag(j);
      if (i == j) fail(ErrorCode::InvalidPosition, "rule 3 needs two distinct diagonal positions");
      if (variant == RewriteVariant::Swap) {
        std::swap(diag[i], diag[j]);
        m(off + i, off + i) = m(off + j, off + j) = k.zero();
        m(off + i, off + j) = m(off + j, off + i) = k.one();
      } else {
        diag[j] = diag[i] + diag[j];
        m(off + i, off + j) = k.one();
      }
      break;
    }
    case 4: {
      need_block(i);
      auto [a, b] = blocks[i];
      if (variant == RewriteVariant::Swap) {
        blocks[i] = {b, a};
        m(2 * i, 2 * i) = m(2 * i + 1, 2 * i + 1) = k.zero();
        m(2 * i, 2 * i + 1) = m(2 * i + 1, 2 * i) = k.one();
      } else {
        blocks[i] = {a, a + b + k.one()};
        m(2 * i, 2 * i + 1) = k.one();
      }
      break;
    }
    case 5: {
      need_block(i);
      need_diag(j);
      blocks[i].first += diag[j];
      m(off + j, 2 * i) = k.one();
      break;
    }
    case 6: {
      need_block(i);
      need_block(j);
      if (i == j) fail(ErrorCode::InvalidPosition, "rule 6 needs two distinct blocks");
      Fe a = blocks[i].first, b = blocks[i].second, c = blocks[j].first, d = blocks[j].second;
      blocks[i] = {a + c, b};
      blocks[j] = {c, b + d};
      m(2 * j, 2 * i) = k.one();          // x_j' = x_j + x_i
      m(2 * i + 1, 2 * j + 1) = k.one();  // y_i' = y_i + y_j
      break;
    }
    default:
      fail(ErrorCode::InvalidPosition, "rule must be in 1..6");
  }
  return {QuadraticForm(k, std::move(blocks), std::move(diag)), std::move(m)};
}

struct IsotropyResult {
  Decision verdict = Decision::Unknown;
  std::optional<Vec> witness;
};

namespace detail {

inline bool advance(std::vector<std::size_t>& idx, std::size_t base) {
  for (auto& d : idx) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

}  // namespace detail

/// Exact for totally singular forms: sum c_j z_j^2 = 0 iff the c_j are k^2-dependent.
inline IsotropyResult totally_singular_isotropy(const Field& k, const std::vector<Fe>& c) {
  if (c.empty()) return {Decision::No, std::nullopt};
  std::vector<Vec> cols;
  for (const auto& cj : c) cols.push_back(k.is_finite() ? Vec{cj} : k2_coordinates(cj));
  Matrix a = Matrix::from_columns(k, cols, cols[0].size());
  Matrix ker = kernel_basis(a);
  if (ker.rows() == 0) return {Decision::No, std::nullopt};
  // Elimination on a matrix with entries in k^2 stays in k^2, so every entry has a square root.
  Vec z;
  for (const auto& lambda : ker.row(0)) z.push_back(sqrt(lambda));
  return {Decision::Yes, z};
}

/**
 * Finite fields: exhaustive when |k|^dim <= 2^24. Rational fields: exact for
 * totally singular forms and for a single block ([a,b] is isotropic iff a = 0
 * or ab is in the Artin-Schreier set); otherwise a search over coordinates
 * drawn from {0, 1, g, indeterminates} that can only answer Yes or Unknown.
 */
inline IsotropyResult is_isotropic(const QuadraticForm& q, int search_bound = 2) {
  const Field& k = q.field();
  const std::size_t n = q.dim();
  if (n == 0) return {Decision::No, std::nullopt};
  const std::size_t off = 2 * q.blocks().size();
  for (std::size_t j = 0; j < q.diagonal().size(); ++j)
    if (q.diagonal()[j].is_zero()) {
      Vec v(n, k.zero());
      v[off + j] = k.one();
      return {Decision::Yes, v};
    }

  if (k.is_finite()) {
    double points = 1;
    for (std::size_t i = 0; i < n; ++i) points *= k.size();
    if (points <= double(1u << 24)) {
      auto elems = k.elements();
      std::vector<std::size_t> idx(n, 0);
      while (detail::advance(idx, elems.size())) {
        Vec v;
        for (auto d : idx) v.push_back(elems[d]);
        if (q.evaluate(v).is_zero()) return {Decision::Yes, v};
      }
      return {Decision::No, std::nullopt};
    }
  }

  if (q.totally_singular()) {
    auto r = totally_singular_isotropy(k, q.diagonal());
    if (r.witness) {
      Vec v(n, k.zero());
      for (std::size_t j = 0; j < r.witness->size(); ++j) v[off + j] = (*r.witness)[j];
      r.witness = v;
    }
    return r;
  }

  // Any isotropic block or isotropic diagonal part gives a witness in the whole form.
  for (std::size_t i = 0; i < q.blocks().size(); ++i) {
    const auto& [a, b] = q.blocks()[i];
    Vec v(n, k.zero());
    if (a.is_zero()) {
      v[2 * i] = k.one();
      return {Decision::Yes, v};
    }
    // a X^2 + X + b = 0 with X = t / a means t^2 + t = ab.
    auto as = artin_schreier_solvable(a * b, search_bound + 4);
    if (as.verdict == Decision::Yes) {
      v[2 * i] = *as.witness / a;
      v[2 * i + 1] = k.one();
      return {Decision::Yes, v};
    }
    if (q.blocks().size() == 1 && q.diagonal().empty()) return {as.verdict, std::nullopt};
  }
  if (q.diagonal().size() > 1) {
    auto r = totally_singular_isotropy(k, q.diagonal());
    if (r.verdict == Decision::Yes) {
      Vec v(n, k.zero());
      for (std::size_t j = 0; j < r.witness->size(); ++j) v[off + j] = (*r.witness)[j];
      return {Decision::Yes, v};
    }
  }

  std::vector<Fe> pool = {k.zero(), k.one()};
  if (k.base().degree() > 1) pool.push_back(k.gen());
  for (std::size_t i = 0; i < k.num_vars(); ++i) {
    Fe t = k.var(i);
    for (int d = 1; d <= search_bound; ++d, t *= k.var(i)) {
      pool.push_back(t);
      pool.push_back(t.inv());
    }
  }
  double points = 1;
  for (std::size_t i = 0; i < n; ++i) points *= static_cast<double>(pool.size());
  if (points > 2e6) return {Decision::Unknown, std::nullopt};
  std::vector<std::size_t> idx(n, 0);
  while (detail::advance(idx, pool.size())) {
    Vec v;
    for (auto d : idx) v.push_back(pool[d]);
    if (q.evaluate(v).is_zero()) return {Decision::Yes, v};
  }
  return {Decision::Unknown, std::nullopt};
}

enum class QpClass { Split, Intermediate, Division };

inline const char* to_string(QpClass c) {
  switch (c) {
    case QpClass::Split: return "Split";
    case QpClass::Intermediate: return "Intermediate";
    case QpClass::Division: return "Division";
  }
  return "?";
}

inline QpClass classify_quasi_pfister(const Fe& beta, const Fe& gamma) {
  switch (k2_extension_degree(beta, gamma)) {
    case 1: return QpClass::Split;
    case 2: return QpClass::Intermediate;
    default: return QpClass::Division;
  }
}

/// Parses "[a,b] P [c,d] P <e,f>" or "qp(b,g)".
inline QuadraticForm parse_form(const Field& k, std::string_view text) {
  std::string s = detail::strip(text);
  auto split_args = [&](const std::string& body) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : body) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  };
  if (s.rfind("qp(", 0) == 0 && s.back() == ')') {
    auto args = split_args(s.substr(3, s.size() - 4));
    if (args.size() != 2) fail(ErrorCode::ParseError, "qp takes two arguments");
    return QuadraticForm::quasi_pfister(parse_element(k, args[0]), parse_element(k, args[1]));
  }
  std::vector<std::pair<Fe, Fe>> blocks;
  std::vector<Fe> diag;
  std::size_t p = 0;
  while (p < s.size()) {
    char open = s[p];
    char close = open == '[' ? ']' : open == '<' ? '>' : 0;
    if (!close) fail(ErrorCode::ParseError, "expected '[' or '<' in form literal");
    auto end = s.find(close, p);
    if (end == std::string::npos) fail(ErrorCode::ParseError, "unterminated form component");
    auto args = split_args(s.substr(p + 1, end - p - 1));
    if (open == '[') {
      if (args.size() != 2) fail(ErrorCode::ParseError, "a block [a,b] has two entries");
      blocks.emplace_back(parse_element(k, args[0]), parse_element(k, args[1]));
    } else {
      for (const auto& a : args) diag.push_back(parse_element(k, a));
    }
    p = end + 1;
    if (p < s.size()) {
      if (s[p] != 'P') fail(ErrorCode::ParseError, "components are separated by 'P'");
      ++p;
    }
  }
  return QuadraticForm(k, std::move(blocks), std::move(diag));
}

}  // namespace octo2
