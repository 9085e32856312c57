#pragma once
/**
 * @file oracle.hpp
 * @brief Brute-force checks over small finite fields.
 *
 * Sweeps are capped at 2^24 points; OCTO2_MAX_SWEEP may lower the cap.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "octo2/conjugacy.hpp"

namespace octo2 {

inline constexpr std::uint64_t kSweepCap = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kClosureCap = 1000000;

/// Hard cap, lowered (never raised) by OCTO2_MAX_SWEEP.
inline std::uint64_t sweep_cap() {
  std::uint64_t cap = kSweepCap;
  if (const char* env = std::getenv("OCTO2_MAX_SWEEP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v < cap) cap = v;
  }
  return cap;
}

struct SweepReport {
  std::string property;
  std::uint64_t domain = 0;
  std::uint64_t violations = 0;
  std::optional<std::string> counterexample;
  double elapsed_ms = 0;
};

enum class Property { Composition, MinEq, MinEqLinearized, GramRank, ConjInvolutive };

inline const char* to_string(Property p) {
  switch (p) {
    case Property::Composition: return "composition";
    case Property::MinEq: return "min_eq";
    case Property::MinEqLinearized: return "min_eq_linearized";
    case Property::GramRank: return "gram_rank";
    default: return "conj_involutive";
  }
}

inline Property parse_property(const std::string& s) {
  for (Property p : {Property::Composition, Property::MinEq, Property::MinEqLinearized, Property::GramRank, Property::ConjInvolutive})
    if (s == to_string(p)) return p;
  fail(ErrorCode::ParseError, "unknown property '" + s + "'");
}

inline bool is_pair_property(Property p) { return p == Property::Composition || p == Property::MinEqLinearized; }

namespace detail {

inline bool holds_single(const Algebra& a, Property p, const Vec& x) {
  if (p == Property::MinEq) {
    // x^2 + <x,e>x + q(x)e = 0
    Vec s = Algebra::add(a.mul(x, x), a.scale(a.bil(x, a.one()), x));
    return Algebra::add(s, a.scale(a.norm(x), a.one())) == a.zero();
  }
  Vec c = a.conj(x);
  return a.conj(c) == x && Algebra::add(x, c) == a.scale(a.bil(x, a.one()), a.one());
}

inline bool holds_pair(const Algebra& a, Property p, const Vec& x, const Vec& y) {
  if (p == Property::Composition) return a.norm(a.mul(x, y)) == a.norm(x) * a.norm(y);
  // xy + yx + <x,e>y + <y,e>x + <x,y>e = 0
  Vec s = Algebra::add(a.mul(x, y), a.mul(y, x));
  s = Algebra::add(s, a.scale(a.bil(x, a.one()), y));
  s = Algebra::add(s, a.scale(a.bil(y, a.one()), x));
  s = Algebra::add(s, a.scale(a.bil(x, y), a.one()));
  return s == a.zero();
}

inline Vec vec_from_index(const Algebra& a, const std::vector<Fe>& elems, std::uint64_t idx) {
  Vec x;
  const std::uint64_t q = elems.size();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    x.push_back(elems[idx % q]);
    idx /= q;
  }
  return x;
}

}  // namespace detail

/// Sweeps every element (or pair) of a finite algebra, split across threads.
inline SweepReport exhaustive_check(const Algebra& a, Property p) {
  auto start = std::chrono::steady_clock::now();
  const Field& k = a.field();
  if (!k.is_finite()) fail(ErrorCode::DomainTooLarge, "exhaustive sweeps need a finite field");
  SweepReport rep;
  rep.property = to_string(p);
  if (p == Property::GramRank) {
    rep.domain = a.dim() * a.dim();
    std::size_t r = rank(a.gram());
    if (r != a.dim()) {
      rep.violations = 1;
      rep.counterexample = "rank " + std::to_string(r);
    }
  } else {
    long double elems_ld = std::pow(static_cast<long double>(k.size()), static_cast<long double>(a.dim()));
    long double domain_ld = is_pair_property(p) ? elems_ld * elems_ld : elems_ld;
    if (domain_ld > static_cast<long double>(sweep_cap()))
      fail(ErrorCode::DomainTooLarge, "sweep of |k|^" + std::to_string(is_pair_property(p) ? 2 * a.dim() : a.dim()) + " = " +
               std::to_string(k.size()) + "^" + std::to_string(is_pair_property(p) ? 2 * a.dim() : a.dim()) +
               " points exceeds the cap of " + std::to_string(sweep_cap()) + "; sample randomly instead");
    const std::uint64_t n = static_cast<std::uint64_t>(elems_ld);
    rep.domain = static_cast<std::uint64_t>(domain_ld);
    auto elems = k.elements();
    std::vector<Vec> all;
    for (std::uint64_t i = 0; i < n; ++i) all.push_back(detail::vec_from_index(a, elems, i));
    std::atomic<std::uint64_t> bad{0};
    std::mutex mu;
    std::optional<std::uint64_t> first;
    unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        std::uint64_t local = 0;
        std::optional<std::uint64_t> local_first;
        for (std::uint64_t i = w; i < n; i += workers) {
          if (is_pair_property(p)) {
            for (std::uint64_t j = 0; j < n; ++j)
              if (!detail::holds_pair(a, p, all[i], all[j])) {
                ++local;
                if (!local_first) local_first = i * n + j;
              }
          } else if (!detail::holds_single(a, p, all[i])) {
            ++local;
            if (!local_first) local_first = i;
          }
        }
        bad += local;
        std::lock_guard<std::mutex> lock(mu);
        if (local_first && (!first || *local_first < *first)) first = local_first;
      });
    for (auto& t : pool) t.join();
    rep.violations = bad;
    if (first) {
      if (is_pair_property(p))
        rep.counterexample = "x = " + a.element_to_string(all[*first / n]) + ", y = " + a.element_to_string(all[*first % n]);
      else
        rep.counterexample = "x = " + a.element_to_string(all[*first]);
    }
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Coefficient pool for random elements: all of k when finite, small rational functions otherwise.
inline std::vector<Fe> sample_pool(const Field& k) {
  if (k.is_finite()) return k.elements();
  std::vector<Fe> pool = {k.zero(), k.one()};
  if (k.base().degree() > 1) pool.push_back(k.gen());
  for (std::size_t i = 0; i < k.num_vars(); ++i) {
    Fe x = k.var(i);
    pool.push_back(x);
    pool.push_back(x + k.one());
    pool.push_back(x.inv());
    for (std::size_t j = i + 1; j < k.num_vars(); ++j) {
      pool.push_back(x * k.var(j));
      pool.push_back((x + k.var(j)).inv());
    }
  }
  return pool;
}

/// Random elements (or pairs) with a fixed seed; the property must hold on every sample.
inline SweepReport random_check(const Algebra& a, Property p, std::uint64_t samples, std::uint32_t seed = 1) {
  auto start = std::chrono::steady_clock::now();
  if (p == Property::GramRank) return exhaustive_check(a, p);
  SweepReport rep;
  rep.property = to_string(p);
  rep.domain = samples;
  auto pool = sample_pool(a.field());
  std::mt19937 rng(seed);
  auto draw = [&] {
    Vec x;
    for (std::size_t i = 0; i < a.dim(); ++i) x.push_back(pool[rng() % pool.size()]);
    return x;
  };
  for (std::uint64_t s = 0; s < samples; ++s) {
    Vec x = draw();
    bool ok;
    std::string ce;
    if (is_pair_property(p)) {
      Vec y = draw();
      ok = detail::holds_pair(a, p, x, y);
      if (!ok) ce = "x = " + a.element_to_string(x) + ", y = " + a.element_to_string(y);
    } else {
      ok = detail::holds_single(a, p, x);
      if (!ok) ce = "x = " + a.element_to_string(x);
    }
    if (!ok) {
      ++rep.violations;
      if (!rep.counterexample) rep.counterexample = ce;
    }
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/**
 * M with q2(Mx) = q1(x), or nothing. Columns are chosen one at a time so that
 * q2(M e_j) = q1(e_j) and the polar forms agree on pairs, which together fix q.
 */
inline std::optional<Matrix> isometry_search(const QuadraticForm& q1, const QuadraticForm& q2) {
  const Field& k = q1.field();
  if (q2.field() != k) fail(ErrorCode::DescriptorMismatch, "forms over different fields");
  if (q1.dim() != q2.dim()) fail(ErrorCode::DimensionMismatch, "forms of different dimension");
  const std::size_t n = q1.dim();
  if (!k.is_finite() || n > 4 || k.size() > 4) fail(ErrorCode::TooLarge, "isometry search needs dim <= 4 over GF(2) or GF(4)");
  auto elems = k.elements();
  std::vector<Vec> space;
  std::vector<std::size_t> idx(n, 0);
  do {
    Vec v;
    for (auto i : idx) v.push_back(elems[i]);
    space.push_back(v);
  } while (detail::advance(idx, elems.size()));
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < n; ++j) {
    Vec v(n, k.zero());
    v[j] = k.one();
    basis.push_back(v);
  }
  std::vector<Vec> cols;
  std::function<bool()> dfs = [&]() -> bool {
    const std::size_t j = cols.size();
    if (j == n) return true;
    Fe target = q1.evaluate(basis[j]);
    for (const auto& y : space) {
      if (q2.evaluate(y) != target) continue;
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) ok = q2.bilinear(cols[i], y) == q1.bilinear(basis[i], basis[j]);
      if (!ok) continue;
      cols.push_back(y);
      if (rank(Matrix::from_rows(k, cols, n)) == cols.size() && dfs()) return true;
      cols.pop_back();
    }
    return false;
  };
  if (!dfs()) return std::nullopt;
  return Matrix::from_columns(k, cols, n);
}

/**
 * Visits every automorphism of a finite octonion algebra through its basic
 * triple; fn returns true to stop. Throws CapExceeded past `cap` maps.
 */
template <class F>
std::uint64_t for_each_automorphism(const Algebra& a, std::uint64_t cap, F&& fn) {
  if (!a.field().is_finite()) fail(ErrorCode::DomainTooLarge, "automorphism enumeration needs a finite field");
  const Vec e = a.one();
  Budget budget{static_cast<std::size_t>(sweep_cap())};
  std::uint64_t count = 0;
  LinearConditions cu(a);
  cu.orthogonal(e, a.field().one());
  for_each_norm_point(a, *cu.solve(), a.alpha(), budget, [&](const Vec& u2) {
    LinearConditions cv(a);
    cv.orthogonal(e);
    cv.orthogonal(u2);
    return for_each_norm_point(a, *cv.solve(), a.beta(), budget, [&](const Vec& v2) {
      LinearConditions cw(a);
      Vec uv = a.mul(u2, v2);
      for (const auto& x : {e, u2, v2, uv}) cw.orthogonal(x);
      return for_each_norm_point(a, *cw.solve(), a.gamma(), budget, [&](const Vec& w2) {
        if (++count > cap) fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " automorphisms");
        return fn(map_from_triple(a, u2, v2, w2));
      });
    });
  });
  if (!budget.complete) fail(ErrorCode::DomainTooLarge, "automorphism enumeration exceeded the sweep cap");
  return count;
}

/// All automorphisms commuting with t.
inline std::vector<Matrix> centralizer(const Algebra& a, const Matrix& t, std::uint64_t cap = kClosureCap) {
  std::vector<Matrix> out;
  for_each_automorphism(a, cap, [&](const Matrix& g) {
    if (g * t == t * g) out.push_back(g);
    return false;
  });
  return out;
}

/// Closure of the generators under multiplication.
inline std::vector<Matrix> group_closure(const std::vector<Matrix>& gens, std::uint64_t cap = kClosureCap) {
  std::map<std::string, Matrix> seen;
  std::vector<Matrix> frontier;
  for (const auto& g : gens)
    if (seen.emplace(g.to_string(), g).second) frontier.push_back(g);
  if (seen.size() > cap) fail(ErrorCode::CapExceeded, "closure exceeds " + std::to_string(cap) + " elements");
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Matrix y = x * g;
        if (seen.emplace(y.to_string(), y).second) {
          if (seen.size() > cap) fail(ErrorCode::CapExceeded, "closure exceeds " + std::to_string(cap) + " elements");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Matrix> out;
  for (auto& [key, m] : seen) out.push_back(m);
  return out;
}

struct EnumeratedInvolution {
  Matrix matrix;
  bool built_as_I = false;
  bool built_as_II = false;
  InvolutionType detected;
  std::size_t fixed_dim;
  std::optional<Involution> witness_I;   // one (D, r) construction
  std::optional<Involution> witness_II;  // one (B, b) construction
};

struct InvolutionCensus {
  std::vector<EnumeratedInvolution> involutions;
  std::vector<std::vector<std::size_t>> classes;  // indices into involutions
  std::uint64_t verified_merges = 0;
  std::uint64_t unknown_edges = 0;
  std::size_t quaternion_subalgebras = 0;
  std::size_t ts_subalgebras = 0;
};

namespace detail {

/// Subalgebras span{e, x, y, xy} of the given tag, deduplicated by row space.
inline std::vector<Subalgebra> subalgebras_from_pairs(const Algebra& a, SubTag tag, const std::vector<Vec>& xs,
                                                      const std::vector<Vec>& ys) {
  std::map<std::string, Subalgebra> out;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      std::vector<Vec> rows = {a.one(), x, y, a.mul(x, y)};
      if (rank(Matrix::from_rows(a.field(), rows, a.dim())) != 4) continue;
      Matrix rs = row_space(Matrix::from_rows(a.field(), rows, a.dim()));
      std::string key = rs.to_string();
      if (out.count(key)) continue;
      if (classify_subspace(a, rs) != tag) continue;
      try {
        out.emplace(key, make_subalgebra(a, rs.row_list()));
      } catch (const Error&) {
      }
    }
  std::vector<Subalgebra> v;
  for (auto& [key, s] : out) v.push_back(s);
  return v;
}

}  // namespace detail

/**
 * Every t_{D,r} and t_{B,b} of a finite octonion algebra, deduplicated, and
 * partitioned by conjugacy_test. Classes merge only on a verified witness;
 * an Unknown verdict leaves the classes apart.
 */
inline InvolutionCensus enumerate_involutions(const Algebra& a) {
  const Field& k = a.field();
  if (!k.is_finite() || a.dim() != 8) fail(ErrorCode::DomainTooLarge, "enumeration needs a finite octonion algebra");
  const std::uint64_t q = k.size();
  if (q * q * q * q * q * q * q * q * q * q * q * q * q * q > sweep_cap())
    fail(ErrorCode::DomainTooLarge, "subalgebra enumeration exceeds the sweep cap");
  std::vector<Vec> unit_trace, perp_e;
  for_each_in_span(a, Matrix::identity(k, 8), [&](const Vec& x) {
    Fe t = a.bil(x, a.one());
    if (t.is_one()) unit_trace.push_back(x);
    if (t.is_zero()) perp_e.push_back(x);
  });
  InvolutionCensus out;
  auto quats = detail::subalgebras_from_pairs(a, SubTag::Quaternion, unit_trace, perp_e);
  auto tss = detail::subalgebras_from_pairs(a, SubTag::TotallySingular, perp_e, perp_e);
  out.quaternion_subalgebras = quats.size();
  out.ts_subalgebras = tss.size();
  std::map<std::string, std::size_t> index;
  auto record = [&](const Involution& t) {
    std::string key = t.matrix.to_string();
    auto it = index.find(key);
    if (it == index.end()) {
      FixedReport f = fixed_subalgebra(a, t.matrix);
      it = index.emplace(key, out.involutions.size()).first;
      out.involutions.push_back({t.matrix, false, false, *f.detected, f.sub.dim(), std::nullopt, std::nullopt});
    }
    auto& e = out.involutions[it->second];
    if (t.type == InvolutionType::I) {
      e.built_as_I = true;
      if (!e.witness_I) e.witness_I = t;
    } else {
      e.built_as_II = true;
      if (!e.witness_II) e.witness_II = t;
    }
  };
  for (const auto& d : quats)
    for_each_in_span(a, d.rows(), [&](const Vec& r) {
      if (!type_I_defect(d, r)) record(make_type_I(d, r));
    });
  for (const auto& b : tss) {
    BhatSet bh = bhat(b);
    for (const auto& x : *bh.elements)
      if (x != a.zero()) record(make_type_II(b, x));
  }
  // class representatives; each new involution is compared with every representative
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < out.involutions.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size() && !placed; ++c) {
      auto res = conjugacy_test(a, out.involutions[reps[c]].matrix, out.involutions[i].matrix);
      if (res.verdict == ConjVerdict::Conjugate) {
        const Matrix& g = *res.witness;
        if (!is_automorphism(a, g) || g * out.involutions[reps[c]].matrix != out.involutions[i].matrix * g)
          fail(ErrorCode::Internal, "unverified conjugacy witness");
        out.classes[c].push_back(i);
        ++out.verified_merges;
        placed = true;
      } else if (res.verdict == ConjVerdict::Unknown) {
        ++out.unknown_edges;
      }
    }
    if (!placed) {
      reps.push_back(i);
      out.classes.push_back({i});
    }
  }
  return out;
}

}  // namespace octo2
