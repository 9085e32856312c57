#include <gtest/gtest.h>

#include <random>

#include "octo2/composition.hpp"

using namespace octo2;

namespace {

Algebra split_gf2() {
  Field k = Field::finite(1);
  return Algebra::build(k, 8, k.one(), k.one(), k.one());
}

Algebra rational_octonion() {
  Field k = Field::rational(1, {"x1", "x2"});
  return Algebra::build(k, 8, parse_element(k, "x1"), parse_element(k, "x2"), parse_element(k, "x1+x2"));
}

Vec from_mask(const Algebra& a, unsigned mask) {
  Vec v = a.zero();
  for (std::size_t i = 0; i < a.dim(); ++i)
    if ((mask >> i) & 1u) v[i] = a.field().one();
  return v;
}

Vec random_element(const Algebra& a, std::mt19937& rng) {
  const Field& k = a.field();
  std::vector<Fe> pool = {k.zero(), k.one()};
  if (k.is_finite()) {
    pool = k.elements();
  } else {
    for (std::size_t i = 0; i < k.num_vars(); ++i) {
      pool.push_back(k.var(i));
      pool.push_back(k.var(i) + k.one());
    }
  }
  Vec v;
  for (std::size_t i = 0; i < a.dim(); ++i) v.push_back(pool[rng() % pool.size()]);
  return v;
}

}  // namespace

TEST(Composition, DefiningRelations) {
  for (const Algebra& a : {split_gf2(), rational_octonion()}) {
    Vec e = a.basis(0), u = a.basis(1), v = a.basis(2), uv = a.basis(3), w = a.basis(4), vw = a.basis(6);
    EXPECT_EQ(a.mul(u, u), Algebra::add(u, a.scale(a.alpha(), e)));
    EXPECT_EQ(a.mul(v, v), a.scale(a.beta(), e));
    EXPECT_EQ(a.mul(w, w), a.scale(a.gamma(), e));
    EXPECT_EQ(a.mul(v, u), Algebra::add(uv, v));
    EXPECT_EQ(a.mul(u, v), uv);
    EXPECT_EQ(a.mul(w, v), vw);
    EXPECT_EQ(a.mul(a.mul(u, v), w), a.basis(7));
    EXPECT_TRUE(a.norm(e).is_one());
    EXPECT_EQ(a.norm(u), a.alpha());
    EXPECT_EQ(a.conj(e), e);
    EXPECT_EQ(a.conj(u), Algebra::add(u, e));
  }
}

TEST(Composition, IdentityIsTwoSided) {
  Algebra a = rational_octonion();
  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) {
    Vec x = random_element(a, rng);
    EXPECT_EQ(a.mul(a.one(), x), x);
    EXPECT_EQ(a.mul(x, a.one()), x);
  }
}

TEST(Composition, GramPairs) {
  for (const Algebra& a : {split_gf2(), rational_octonion()}) {
    Matrix g = a.gram();
    EXPECT_EQ(rank(g), 8u);
    const Field& k = a.field();
    Matrix expect(k, 8, 8);
    auto pair = [&](std::size_t i, std::size_t j, const Fe& x) { expect(i, j) = expect(j, i) = x; };
    pair(0, 1, k.one());
    pair(2, 3, a.beta());
    pair(4, 5, a.gamma());
    pair(6, 7, a.beta() * a.gamma());
    EXPECT_EQ(g, expect);
  }
}

TEST(Composition, ExhaustiveAxiomsGf2) {
  Algebra a = split_gf2();
  std::vector<Vec> all;
  for (unsigned m = 0; m < 256; ++m) all.push_back(from_mask(a, m));
  int violations = 0;
  for (const auto& x : all) {
    Vec x2 = a.mul(x, x);
    Vec lhs = Algebra::add(Algebra::add(x2, a.scale(a.bil(x, a.one()), x)), a.scale(a.norm(x), a.one()));
    if (lhs != a.zero()) ++violations;
    if (a.mul(x, a.conj(x)) != a.scale(a.norm(x), a.one())) ++violations;
    if (a.conj(a.conj(x)) != x) ++violations;
  }
  for (const auto& x : all)
    for (const auto& y : all) {
      Vec xy = a.mul(x, y);
      if (a.norm(xy) != a.norm(x) * a.norm(y)) ++violations;
      Vec lin = Algebra::add(xy, a.mul(y, x));
      lin = Algebra::add(lin, a.scale(a.bil(x, y), a.one()));
      lin = Algebra::add(lin, a.scale(a.bil(x, a.one()), y));
      lin = Algebra::add(lin, a.scale(a.bil(y, a.one()), x));
      if (lin != a.zero()) ++violations;
      // Alternativity: x(xy) = (xx)y.
      if (a.mul(x, xy) != a.mul(a.mul(x, x), y)) ++violations;
    }
  EXPECT_EQ(violations, 0);
}

TEST(Composition, NormMatchesConjugateProductRational) {
  Algebra a = rational_octonion();
  std::mt19937 rng(4);
  for (int t = 0; t < 30; ++t) {
    Vec x = random_element(a, rng), y = random_element(a, rng);
    EXPECT_EQ(a.mul(x, a.conj(x)), a.scale(a.norm(x), a.one()));
    EXPECT_EQ(a.norm(a.mul(x, y)), a.norm(x) * a.norm(y));
  }
}

TEST(Composition, Inverse) {
  Field k = Field::rational(1, {"x1"});
  Algebra a = Algebra::build(k, 4, k.one(), k.var(0));
  Vec v = a.basis(2);
  EXPECT_EQ(a.inverse(v), a.scale(k.var(0).inv(), v));
  EXPECT_EQ(a.mul(v, a.inverse(v)), a.one());
  Algebra s = split_gf2();
  Vec z = Algebra::add(s.one(), s.basis(2));  // q(e + v) = 1 + 1 = 0
  EXPECT_THROW(s.inverse(z), Error);
}

TEST(Composition, BuildErrors) {
  Field k = Field::finite(1);
  EXPECT_THROW(Algebra::build(k, 8, k.one(), k.zero(), k.one()), Error);
  EXPECT_THROW(Algebra::build(k, 8, k.one(), k.one(), k.zero()), Error);
  EXPECT_THROW(Algebra::build(k, 2, k.zero()), Error);
  EXPECT_NO_THROW(Algebra::build(k, 2, k.one()));
  EXPECT_NO_THROW(Algebra::build(Field::finite(2), 2, Field::finite(2).zero()));
  EXPECT_THROW(Algebra::build(k, 6, k.one()), Error);
}

TEST(Composition, Subalgebras) {
  Algebra a = split_gf2();
  EXPECT_EQ(canonical_quaternion(a).tag(), SubTag::Quaternion);
  EXPECT_EQ(canonical_totally_singular(a).tag(), SubTag::TotallySingular);
  EXPECT_EQ(make_subalgebra(a, {a.basis(0), a.basis(2)}).tag(), SubTag::Other);
  EXPECT_THROW(make_subalgebra(a, {a.basis(1), a.basis(2)}), Error);
  EXPECT_THROW(make_subalgebra(a, {a.basis(0), a.basis(1), a.basis(2)}), Error);
  EXPECT_THROW(make_subalgebra(a, {a.basis(0), a.basis(0)}), Error);
}

TEST(Composition, Division) {
  Algebra a = split_gf2();
  auto r = is_division(a);
  ASSERT_EQ(r.verdict, Decision::No);
  EXPECT_TRUE(a.norm(*r.zero_divisor).is_zero());
  EXPECT_EQ(is_division(canonical_totally_singular(a)).verdict, Decision::No);

  Field k = Field::rational(1, {"x1", "x2"});
  Algebra b = Algebra::build(k, 8, k.zero(), k.var(0), k.var(1));
  EXPECT_EQ(is_division(canonical_totally_singular(b)).verdict, Decision::Yes);
  auto whole = is_division(b);
  ASSERT_EQ(whole.verdict, Decision::No);  // alpha = 0 makes u a zero divisor
  EXPECT_TRUE(b.norm(*whole.zero_divisor).is_zero());
  Algebra c = Algebra::build(k, 8, k.zero(), k.one(), k.one());
  EXPECT_EQ(is_division(canonical_totally_singular(c)).verdict, Decision::No);

  // [1, x1] is anisotropic and beta = x2 separates the residue forms.
  Algebra d = Algebra::build(k, 8, k.var(0), k.var(1), k.one());
  EXPECT_EQ(is_division(canonical_quaternion(d)).verdict, Decision::Yes);
  Algebra d4 = Algebra::build(k, 4, k.var(0), k.var(1));
  EXPECT_EQ(is_division(d4).verdict, Decision::Yes);
}

TEST(Composition, Automorphisms) {
  Algebra a = split_gf2();
  EXPECT_TRUE(is_automorphism(a, Matrix::identity(a.field(), 8)));
  Matrix swap = Matrix::identity(a.field(), 8);
  swap(1, 1) = swap(2, 2) = a.field().zero();
  swap(1, 2) = swap(2, 1) = a.field().one();
  EXPECT_FALSE(is_automorphism(a, swap));
  Vec u = a.basis(1), v = a.basis(2), w = a.basis(4);
  EXPECT_TRUE(is_basic_triple(a, u, v, w));
  EXPECT_EQ(map_from_triple(a, u, v, w), Matrix::identity(a.field(), 8));
  // conj(u) = u + e, and v -> v, w -> w + vw style triples give further automorphisms.
  Vec u2 = Algebra::add(u, a.one());
  EXPECT_TRUE(is_basic_triple(a, u2, v, w));
  EXPECT_TRUE(is_automorphism(a, map_from_triple(a, u2, v, w)));
}

TEST(Composition, BasicTriplesCountG2OverGf2) {
  // Every basic triple gives an automorphism, and distinct triples give distinct maps.
  Algebra a = split_gf2();
  std::vector<Vec> all;
  for (unsigned m = 0; m < 256; ++m) all.push_back(from_mask(a, m));
  long count = 0;
  int checked = 0;
  for (const auto& u : all) {
    if (!a.bil(u, a.one()).is_one() || a.norm(u) != a.alpha()) continue;
    for (const auto& v : all) {
      if (!a.bil(v, a.one()).is_zero() || !a.bil(v, u).is_zero() || a.norm(v) != a.beta()) continue;
      for (const auto& w : all) {
        if (!is_basic_triple(a, u, v, w)) continue;
        ++count;
        if (checked < 40) {
          EXPECT_TRUE(is_automorphism(a, map_from_triple(a, u, v, w)));
          ++checked;
        }
      }
    }
  }
  EXPECT_EQ(count, 12096);  // |G2(2)|
}

TEST(Composition, ElementLiterals) {
  Algebra a = rational_octonion();
  const Field& k = a.field();
  Vec x = parse_algebra_element(a, "x1^2/(x1^2+x2)*e + x1/(x1^2+x2)*w");
  EXPECT_EQ(x[0], parse_element(k, "x1^2/(x1^2+x2)"));
  EXPECT_EQ(x[4], parse_element(k, "x1/(x1^2+x2)"));
  EXPECT_EQ(parse_algebra_element(a, "(uv)w + uv"), Algebra::add(a.basis(7), a.basis(3)));
  EXPECT_EQ(parse_algebra_element(a, "0,0,1,0,0,0,0,x1"), Algebra::add(a.basis(2), a.scale(k.var(0), a.basis(7))));
  std::mt19937 rng(8);
  for (int t = 0; t < 20; ++t) {
    Vec y = random_element(a, rng);
    EXPECT_EQ(parse_algebra_element(a, a.element_to_string(y)), y) << a.element_to_string(y);
  }
  EXPECT_THROW(parse_algebra_element(a, "u*v"), Error);
  EXPECT_THROW(parse_algebra_element(a, "1,2"), Error);
}

TEST(Composition, CorruptionBreaksComposition) {
  Algebra a = split_gf2();
  Algebra bad = a.corrupted(1, 2, 0);
  int violations = 0;
  for (unsigned m = 0; m < 256; ++m)
    for (unsigned n = 0; n < 256; n += 3) {
      Vec x = from_mask(bad, m), y = from_mask(bad, n);
      if (bad.norm(bad.mul(x, y)) != bad.norm(x) * bad.norm(y)) ++violations;
    }
  EXPECT_GT(violations, 0);
  EXPECT_FALSE(bad.same_as(a));
}

TEST(Composition, DegenerateSubalgebraIsNotQuaternion) {
  Field k = Field::finite(1);
  Algebra a = Algebra::build(k, 8, k.one(), k.one(), k.one());
  Subalgebra s = make_subalgebra(a, {a.one(), parse_algebra_element(a, "u"), parse_algebra_element(a, "w + uvw"),
                                     parse_algebra_element(a, "uw + vw")});
  EXPECT_EQ(s.tag(), SubTag::Other);
}
