#include <gtest/gtest.h>

#include <random>

#include "octo2/quadform.hpp"

using namespace octo2;

namespace {

Fe lit(const Field& k, const char* s) { return parse_element(k, s); }

Vec random_vec(const Field& k, std::size_t n, std::mt19937& rng) {
  Vec v;
  std::vector<Fe> pool = {k.zero(), k.one(), k.gen()};
  for (std::size_t i = 0; i < k.num_vars(); ++i) {
    pool.push_back(k.var(i));
    pool.push_back(k.var(i) + k.one());
    pool.push_back(k.var(i).inv());
  }
  for (std::size_t i = 0; i < n; ++i) v.push_back(pool[rng() % pool.size()] * pool[rng() % pool.size()]);
  return v;
}

}  // namespace

TEST(QuadForm, Evaluate) {
  Field k = Field::finite(1);
  QuadraticForm h = parse_form(k, "[0,0]");
  EXPECT_TRUE(h.evaluate({k.one(), k.zero()}).is_zero());
  EXPECT_TRUE(parse_form(k, "[1,1]").evaluate({k.one(), k.one()}).is_one());
  Field r = Field::rational(1, {"x1", "x2"});
  QuadraticForm qp = parse_form(r, "qp(x1,x2)");
  Vec x = {lit(r, "x1^2/(x1^2+x2)"), r.zero(), lit(r, "x1/(x1^2+x2)"), r.zero()};
  EXPECT_EQ(qp.evaluate(x), lit(r, "x1^2/(x1^2+x2)"));
  EXPECT_THROW(qp.evaluate({r.one()}), Error);
}

TEST(QuadForm, BilinearExamples) {
  Field k = Field::finite(1);
  QuadraticForm h = parse_form(k, "[0,0]");
  EXPECT_TRUE(h.bilinear({k.one(), k.zero()}, {k.zero(), k.one()}).is_one());
  QuadraticForm ts = parse_form(k, "<1,1,1>");
  for (const auto& a : k.elements())
    for (const auto& b : k.elements()) EXPECT_TRUE(ts.bilinear({a, b, a}, {b, b, a}).is_zero());
}

TEST(QuadForm, BilinearMatchesPolarizationExhaustiveGf2) {
  Field k = Field::finite(1);
  QuadraticForm q = parse_form(k, "[1,0] P [1,1] P <1>");
  for (unsigned a = 0; a < 32; ++a)
    for (unsigned b = 0; b < 32; ++b) {
      Vec x, y, s;
      for (int i = 0; i < 5; ++i) {
        x.push_back(k.from_bits((a >> i) & 1));
        y.push_back(k.from_bits((b >> i) & 1));
        s.push_back(x.back() + y.back());
      }
      EXPECT_EQ(q.bilinear(x, y), q.evaluate(s) + q.evaluate(x) + q.evaluate(y));
      EXPECT_EQ(q.bilinear(x, y), q.bilinear(y, x));
      EXPECT_TRUE(q.bilinear(x, x).is_zero());
    }
}

TEST(QuadForm, ScalingLaw) {
  Field k = Field::rational(2, {"x1", "x2"});
  QuadraticForm q = parse_form(k, "[x1,g] P <x2, 1+x1>");
  std::mt19937 rng(2);
  for (int t = 0; t < 50; ++t) {
    Vec x = random_vec(k, q.dim(), rng);
    Fe l = random_vec(k, 1, rng)[0];
    Vec lx;
    for (const auto& c : x) lx.push_back(l * c);
    EXPECT_EQ(q.evaluate(lx), l.square() * q.evaluate(x));
  }
}

TEST(QuadForm, RewriteExamples) {
  Field k = Field::finite(1);
  auto r6 = rewrite(6, parse_form(k, "[1,0] P [1,0]"), 0, 1);
  EXPECT_EQ(r6.form, parse_form(k, "[0,0] P [1,0]"));
  Field r = Field::rational(1, {"a", "b"});
  EXPECT_EQ(rewrite(4, parse_form(r, "[a,b]"), 0).form, parse_form(r, "[b,a]"));
  EXPECT_EQ(rewrite(4, parse_form(r, "[a,b]"), 0, 0, std::nullopt, RewriteVariant::Shift).form,
            parse_form(r, "[a,a+b+1]"));
  EXPECT_EQ(rewrite(1, parse_form(r, "<a>"), 0, 0, lit(r, "b")).form, parse_form(r, "<b^2*a>"));
  EXPECT_THROW(rewrite(1, parse_form(r, "<a>"), 0, 0, r.zero()), Error);
  EXPECT_THROW(rewrite(2, parse_form(r, "<a>"), 0, 0, r.one()), Error);
  EXPECT_THROW(rewrite(7, parse_form(r, "<a>"), 0), Error);
}

TEST(QuadForm, RewriteWitnessesAreIsometries) {
  Field k = Field::rational(2, {"x1", "x2"});
  QuadraticForm q = parse_form(k, "[x1,x2+1] P [g,x1*x2] P <x2,x1+g>");
  Fe s = lit(k, "x1+x2");
  std::vector<Rewrite> rws = {
      rewrite(1, q, 1, 0, s),
      rewrite(2, q, 0, 0, s),
      rewrite(3, q, 0, 1),
      rewrite(3, q, 0, 1, std::nullopt, RewriteVariant::Shift),
      rewrite(4, q, 1),
      rewrite(4, q, 1, 0, std::nullopt, RewriteVariant::Shift),
      rewrite(5, q, 1, 0),
      rewrite(6, q, 0, 1),
      rewrite(6, q, 1, 0),
  };
  std::mt19937 rng(9);
  for (const auto& rw : rws)
    for (int t = 0; t < 30; ++t) {
      Vec v = random_vec(k, q.dim(), rng);
      EXPECT_EQ(rw.form.evaluate(rw.witness.apply(v)), q.evaluate(v)) << rw.form.to_string();
    }
}

TEST(QuadForm, Isotropy) {
  Field k = Field::finite(1);
  auto h = is_isotropic(parse_form(k, "[0,0]"));
  ASSERT_EQ(h.verdict, Decision::Yes);
  EXPECT_TRUE(parse_form(k, "[0,0]").evaluate(*h.witness).is_zero());
  EXPECT_EQ(is_isotropic(parse_form(k, "[1,1]")).verdict, Decision::No);
  Field r = Field::rational(1, {"x1", "x2"});
  EXPECT_EQ(is_isotropic(parse_form(r, "qp(x1,x2)")).verdict, Decision::No);
  auto s = is_isotropic(parse_form(r, "qp(1,x1)"));
  ASSERT_EQ(s.verdict, Decision::Yes);
  EXPECT_TRUE(parse_form(r, "qp(1,x1)").evaluate(*s.witness).is_zero());
  auto t = is_isotropic(parse_form(r, "<x1, x1*x2^2+x1^3>"));
  ASSERT_EQ(t.verdict, Decision::Yes);
  EXPECT_TRUE(parse_form(r, "<x1, x1*x2^2+x1^3>").evaluate(*t.witness).is_zero());
  // [1, x1^2+x1] represents 0 at (x1, 1); [1, x1] does not.
  EXPECT_EQ(is_isotropic(parse_form(r, "[1,x1^2+x1]")).verdict, Decision::Yes);
  EXPECT_EQ(is_isotropic(parse_form(r, "[1,x1]")).verdict, Decision::No);
}

TEST(QuadForm, QuasiPfisterClassification) {
  Field k1 = Field::rational(1, {"x1"});
  Field k2 = Field::rational(1, {"x1", "x2"});
  EXPECT_EQ(classify_quasi_pfister(k2.one(), k2.one()), QpClass::Split);
  EXPECT_EQ(classify_quasi_pfister(k1.one(), k1.var(0)), QpClass::Intermediate);
  EXPECT_EQ(classify_quasi_pfister(k2.var(0), k2.var(1)), QpClass::Division);
  EXPECT_EQ(classify_quasi_pfister(k2.var(1), k2.var(0)), QpClass::Division);
  EXPECT_EQ(classify_quasi_pfister(k2.var(0) * lit(k2, "(x1+x2)^2"), k2.var(1)), QpClass::Division);
  EXPECT_THROW(classify_quasi_pfister(k2.zero(), k2.one()), Error);
}

TEST(QuadForm, ParsePrintRoundTrip) {
  Field k = Field::rational(2, {"x1", "x2"});
  QuadraticForm q = parse_form(k, "[x1,g^2] P [0,1] P <x2,1/x1>");
  EXPECT_EQ(q.dim(), 6u);
  EXPECT_EQ(parse_form(k, q.to_string()), q);
  EXPECT_THROW(parse_form(k, "[x1] P <1>"), Error);
  EXPECT_THROW(parse_form(k, "[x1,1] Q <1>"), Error);
}
