#include <gtest/gtest.h>

#include <random>
#include <set>

#include "octo2/field_ops.hpp"
#include "octo2/parse.hpp"

using namespace octo2;

namespace {

Fe lit(const Field& k, const char* s) { return parse_element(k, s); }

Field two_vars() { return Field::rational(1, {"x1", "x2"}); }

// Random element of GF(2^n)(x1, x2) with small numerator and denominator.
Fe random_rat(const Field& k, std::mt19937& rng) {
  auto poly = [&](int maxdeg) {
    std::vector<Term> t;
    std::uniform_int_distribution<std::uint32_t> c(0, k.base().size() - 1);
    for (std::uint32_t e1 = 0; e1 <= static_cast<std::uint32_t>(maxdeg); ++e1)
      for (std::uint32_t e2 = 0; e1 + e2 <= static_cast<std::uint32_t>(maxdeg); ++e2)
        if (rng() % 3 == 0) t.push_back({{e1, k.num_vars() > 1 ? e2 : 0}, c(rng)});
    return Poly::from_terms(std::move(t));
  };
  Poly den;
  while (den.is_zero()) den = poly(2);
  return k.from_poly(poly(3), den);
}

}  // namespace

TEST(Gf2n, DefaultModuliArePrimitive) {
  for (unsigned n = 1; n <= 16; ++n) EXPECT_NO_THROW(Gf2n{n}) << n;
  EXPECT_THROW(Gf2n(4, 0b11111), Error);  // x^4+x^3+x^2+x+1 is irreducible but not primitive
  EXPECT_THROW(Gf2n(17), Error);
}

TEST(Gf2n, TablesMatchSlowArithmetic) {
  Gf2n f(4);
  for (std::uint32_t a = 1; a < 16; ++a) {
    EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_EQ(f.mul(f.sqrt(a), f.sqrt(a)), a);
  }
}

TEST(Field, BasicArithmetic) {
  Field k2 = Field::finite(1);
  EXPECT_TRUE((k2.one() + k2.one()).is_zero());
  Field k4 = Field::finite(2);
  Fe w = k4.gen();
  EXPECT_EQ(w.inv(), w * w);
  EXPECT_EQ(w * w + w + k4.one(), k4.zero());
  Field r = Field::rational(1, {"x1"});
  EXPECT_TRUE((lit(r, "x1/(x1+1)") * lit(r, "(x1+1)/x1")).is_one());
  EXPECT_THROW(k4.zero().inv(), Error);
  EXPECT_THROW(k4.one() + k2.one(), Error);
}

TEST(Field, FieldHandlesAreInterned) {
  EXPECT_EQ(Field::finite(3), parse_field("gf(8)"));
  EXPECT_EQ(Field::finite(3), parse_field("gf(2^3)"));
  EXPECT_EQ(two_vars(), parse_field("ratfunc(gf(2); x1, x2)"));
  EXPECT_FALSE(Field::finite(3) == Field::finite(2));
  EXPECT_THROW(parse_field("gf(6)"), Error);
  EXPECT_THROW(parse_field("ratfunc(gf(2); x, x)"), Error);
}

TEST(Field, RationalNormalization) {
  Field k = two_vars();
  Fe a = lit(k, "(x1^2+x1*x2)/(x1*x2+x2^2)");
  EXPECT_EQ(a, lit(k, "x1/x2"));
  EXPECT_EQ(a.to_string(), "(x1)/(x2)");
  Field k4 = Field::rational(2, {"x1"});
  Fe b = lit(k4, "1/(g*x1+1)");
  EXPECT_EQ(b.den().leading().c, 1u);
  // Normalizing an already normalized value changes nothing.
  Fe c = k4.from_poly(b.num(), b.den());
  EXPECT_EQ(c.num(), b.num());
  EXPECT_EQ(c.den(), b.den());
}

TEST(Field, FrobeniusExhaustiveGf16) {
  Field k = Field::finite(4);
  for (const auto& a : k.elements())
    for (const auto& b : k.elements()) EXPECT_EQ((a + b).square(), a.square() + b.square());
}

TEST(Field, FrobeniusAndSqrtRandomRational) {
  std::mt19937 rng(7);
  for (unsigned n : {1u, 2u}) {
    Field k = Field::rational(n, {"x1", "x2"});
    for (int i = 0; i < 60; ++i) {
      Fe a = random_rat(k, rng), b = random_rat(k, rng);
      EXPECT_EQ((a + b).square(), a.square() + b.square());
      EXPECT_EQ(octo2::sqrt(a.square()), a);
      EXPECT_EQ(k.from_poly(a.num(), a.den()), a);
    }
  }
}

TEST(Field, Squares) {
  EXPECT_TRUE(is_square(Field::finite(2).gen()));
  Field k = two_vars();
  EXPECT_FALSE(is_square(lit(k, "x1")));
  EXPECT_EQ(octo2::sqrt(lit(k, "x1^2+x2^2")), lit(k, "x1+x2"));
  EXPECT_THROW(octo2::sqrt(lit(k, "x1")), Error);
  for (const auto& a : Field::finite(3).elements()) EXPECT_EQ(octo2::sqrt(a).square(), a);
}

TEST(Field, ArtinSchreierFiniteMatchesEnumeration) {
  for (unsigned n = 1; n <= 4; ++n) {
    Field k = Field::finite(n);
    std::set<std::uint32_t> image;
    for (const auto& x : k.elements()) image.insert((x.square() + x).bits());
    for (const auto& a : k.elements()) {
      auto r = artin_schreier_solvable(a, 0);
      EXPECT_EQ(r.verdict == Decision::Yes, image.count(a.bits()) == 1) << n << " " << a.bits();
      if (r.witness) {
        EXPECT_EQ(r.witness->square() + *r.witness, a);
      }
    }
  }
  EXPECT_EQ(artin_schreier_solvable(Field::finite(2).gen(), 0).verdict, Decision::No);
}

TEST(Field, ArtinSchreierRational) {
  Field k = Field::rational(1, {"x1"});
  auto r = artin_schreier_solvable(lit(k, "x1^2+x1"), 2);
  ASSERT_EQ(r.verdict, Decision::Yes);
  EXPECT_EQ(*r.witness, lit(k, "x1"));
  EXPECT_EQ(artin_schreier_solvable(k.zero(), 0).verdict, Decision::Yes);
  // Odd-degree numerators over a square denominator are never of the form f^2 + f g.
  EXPECT_EQ(artin_schreier_solvable(lit(k, "x1"), 4).verdict, Decision::No);
  // Non-square denominators are ruled out immediately.
  EXPECT_EQ(artin_schreier_solvable(lit(k, "1/x1"), 4).verdict, Decision::No);
  EXPECT_EQ(artin_schreier_solvable(lit(k, "x1^20+x1"), 4).verdict, Decision::Unknown);
  Field k2 = two_vars();
  Fe x = lit(k2, "(x1*x2+1)/(x1+x2^2)");
  auto s = artin_schreier_solvable(x.square() + x, 4);
  ASSERT_EQ(s.verdict, Decision::Yes);
  EXPECT_EQ(s.witness->square() + *s.witness, x.square() + x);
  Field k4 = Field::rational(2, {"x1"});
  EXPECT_EQ(artin_schreier_solvable(k4.gen(), 2).verdict, Decision::No);
  EXPECT_EQ(artin_schreier_solvable(k4.one(), 2).verdict, Decision::Yes);
}

TEST(Field, K2Coordinates) {
  Field k = two_vars();
  auto c = k2_coordinates(lit(k, "x1"));
  EXPECT_TRUE(c[0].is_zero());
  EXPECT_TRUE(c[1].is_one());
  EXPECT_TRUE(c[2].is_zero() && c[3].is_zero());
  auto d = k2_coordinates(lit(k, "x1^2/(x1^2+x2)"));
  EXPECT_EQ(d[0], lit(k, "x1^4/(x1^4+x2^2)"));
  EXPECT_EQ(d[2], lit(k, "x1^2/(x1^4+x2^2)"));
  EXPECT_TRUE(d[1].is_zero() && d[3].is_zero());
  EXPECT_TRUE(k2_coordinates(k.one())[0].is_one());
  EXPECT_THROW(k2_coordinates(Field::finite(1).one()), Error);
  // Reassembly: a = sum c_eps x^eps, and every coordinate is a square.
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    Fe a = random_rat(k, rng);
    auto co = k2_coordinates(a);
    Fe sum = co[0] + co[1] * k.var(0) + co[2] * k.var(1) + co[3] * k.var(0) * k.var(1);
    EXPECT_EQ(sum, a);
    for (const auto& x : co) EXPECT_TRUE(is_square(x));
  }
}

TEST(Field, K2ExtensionDegree) {
  Field k = two_vars();
  EXPECT_EQ(k2_extension_degree(lit(k, "x1"), lit(k, "x2")), 4);
  EXPECT_EQ(k2_extension_degree(k.one(), lit(k, "x1")), 2);
  EXPECT_EQ(k2_extension_degree(k.one(), k.one()), 1);
  EXPECT_EQ(k2_extension_degree(lit(k, "x1"), lit(k, "x1*x2^2+x1^3")), 2);
  EXPECT_EQ(k2_extension_degree(Field::finite(2).gen(), Field::finite(2).one()), 1);
  EXPECT_THROW(k2_extension_degree(k.zero(), k.one()), Error);
  // Symmetry and invariance under square scaling.
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    Fe b = random_rat(k, rng), g = random_rat(k, rng), s = random_rat(k, rng);
    if (b.is_zero() || g.is_zero() || s.is_zero()) continue;
    int d = k2_extension_degree(b, g);
    EXPECT_EQ(d, k2_extension_degree(g, b));
    EXPECT_EQ(d, k2_extension_degree(b * s.square(), g));
  }
}

TEST(Field, ParserErrors) {
  Field k = two_vars();
  EXPECT_THROW(parse_element(k, "x3"), Error);
  EXPECT_THROW(parse_element(k, "(x1"), Error);
  EXPECT_THROW(parse_element(k, ""), Error);
  EXPECT_THROW(parse_element(k, "1/0"), Error);
  EXPECT_EQ(parse_element(k, "3*x1"), k.var(0));
  EXPECT_EQ(parse_element(Field::finite(2), "g^3"), Field::finite(2).one());
  EXPECT_EQ(parse_element(k, "x1^-1"), k.var(0).inv());
}

TEST(Field, PrintParseRoundTrip) {
  std::mt19937 rng(5);
  Field k = Field::rational(2, {"x1", "x2"});
  for (int i = 0; i < 40; ++i) {
    Fe a = random_rat(k, rng);
    EXPECT_EQ(parse_element(k, a.to_string()), a) << a.to_string();
  }
}

TEST(Field, RationalSumMatchesUnreducedFormula) {
  Field k = Field::rational(2, {"x1", "x2"});
  std::vector<Fe> pool = {k.one(), k.var(0), k.var(1) + k.one(), k.var(0).inv(), (k.var(0) + k.var(1)).inv(),
                          k.var(0) / (k.var(1) * k.var(1) + k.gen()), (k.var(0) * k.var(1) + k.one()) / (k.var(0) + k.var(1))};
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& c : pool) {
        Fe x = a * c, y = b / c;
        Fe ref = k.from_poly(mul(k.base(), x.num(), y.den()) + mul(k.base(), y.num(), x.den()), mul(k.base(), x.den(), y.den()));
        EXPECT_EQ(x + y, ref);
      }
}
