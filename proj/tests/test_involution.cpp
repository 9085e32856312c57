#include <gtest/gtest.h>

#include "octo2/conjugacy.hpp"
#include "octo2/parse.hpp"

using namespace octo2;

namespace {

Algebra gf(unsigned n) {
  Field k = Field::finite(n);
  return Algebra::build(k, 8, k.one(), k.one(), k.one());
}

Vec el(const Algebra& a, const char* s) { return parse_algebra_element(a, s); }

Vec first_admissible_r(const Subalgebra& d) {
  auto res = find_admissible_r(d);
  EXPECT_TRUE(res.found.has_value());
  return *res.found;
}

/// The n-th automorphism in basic-triple order (GF(2) has 12096 of them).
Matrix nth_automorphism(const Algebra& a, std::size_t n) {
  std::vector<Vec> all;
  for_each_in_span(a, Matrix::identity(a.field(), 8), [&](const Vec& x) { all.push_back(x); });
  for (const auto& u : all) {
    if (!a.bil(u, a.one()).is_one() || a.norm(u) != a.alpha()) continue;
    for (const auto& v : all) {
      if (!a.bil(v, a.one()).is_zero() || !a.bil(v, u).is_zero() || a.norm(v) != a.beta()) continue;
      for (const auto& w : all)
        if (is_basic_triple(a, u, v, w) && n-- == 0) return map_from_triple(a, u, v, w);
    }
  }
  throw std::out_of_range("n");
}

}  // namespace

TEST(Involution, TypeIOverGf2) {
  Algebra a = gf(1);
  Subalgebra d = canonical_quaternion(a);
  Vec r = first_admissible_r(d);
  Involution t = make_type_I(d, r);
  EXPECT_EQ(t.matrix * t.matrix, Matrix::identity(a.field(), 8));
  EXPECT_NE(t.matrix, Matrix::identity(a.field(), 8));
  EXPECT_TRUE(is_automorphism(a, t.matrix));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(t.matrix.apply(d.rows().row(i)), d.rows().row(i));
  FixedReport f = fixed_subalgebra(a, t.matrix);
  // D plus ann(r + e)w
  EXPECT_EQ(f.sub.dim(), 6u);
  EXPECT_EQ(f.detected, InvolutionType::I);
}

TEST(Involution, TypeIErrors) {
  Algebra a = gf(1);
  Subalgebra d = canonical_quaternion(a);
  EXPECT_THROW(make_type_I(d, a.one()), Error);
  EXPECT_THROW(make_type_I(d, el(a, "w")), Error);
  EXPECT_THROW(make_type_I(canonical_totally_singular(a), el(a, "v")), Error);
  try {
    make_type_I(d, el(a, "u"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadR);
  }
}

TEST(Involution, DivisionQuaternionHasNoAdmissibleR) {
  Field k = Field::rational(1, {"x1", "x2"});
  Algebra a = Algebra::build(k, 8, k.var(0), k.var(1), k.one());
  Subalgebra d = canonical_quaternion(a);
  auto res = find_admissible_r(d, 5000);
  EXPECT_TRUE(res.none_by_certificate);
  EXPECT_FALSE(res.found.has_value());
  try {
    make_type_I(d, el(a, "v"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadR);
    EXPECT_NE(std::string(e.what()).find("division"), std::string::npos);
  }
}

TEST(Involution, TypeIIOverGf2) {
  Algebra a = gf(1);
  Subalgebra b = canonical_totally_singular(a);
  Involution t = make_type_II(b, a.one());
  EXPECT_EQ(t.matrix * t.matrix, Matrix::identity(a.field(), 8));
  FixedReport f = fixed_subalgebra(a, t.matrix);
  EXPECT_EQ(f.sub.dim(), 4u);
  EXPECT_TRUE(f.sub.same_space(b));
  EXPECT_EQ(f.detected, InvolutionType::II);
  EXPECT_EQ(t.matrix.apply(el(a, "u")), el(a, "u + e"));
}

TEST(Involution, TypeIIWithIsotropicBIsDetectedAsTypeI) {
  Algebra a = gf(1);
  Subalgebra b = canonical_totally_singular(a);
  Involution t = make_type_II(b, el(a, "v + w"));
  FixedReport f = fixed_subalgebra(a, t.matrix);
  EXPECT_EQ(t.type, InvolutionType::II);
  EXPECT_EQ(f.sub.dim(), 6u);
  EXPECT_EQ(f.detected, InvolutionType::I);
}

TEST(Involution, TypeIIErrors) {
  Algebra a = gf(1);
  Subalgebra b = canonical_totally_singular(a);
  EXPECT_THROW(make_type_II(b, a.zero()), Error);
  EXPECT_THROW(make_type_II(b, el(a, "v")), Error);  // q(v) = 1, <v,u> = 0
  EXPECT_THROW(make_type_II(b, el(a, "u")), Error);
  EXPECT_THROW(make_type_II(canonical_quaternion(a), a.one()), Error);
  EXPECT_THROW(fixed_subalgebra(a, Matrix::identity(a.field(), 8) + Matrix::identity(a.field(), 8)), Error);
}

TEST(Involution, BhatSizes) {
  EXPECT_EQ(bhat(canonical_totally_singular(gf(1))).elements->size(), 8u);
  EXPECT_EQ(bhat(canonical_totally_singular(gf(2))).elements->size(), 64u);
  EXPECT_EQ(bhat_structure(canonical_totally_singular(gf(1))).order, 8u);
}

TEST(Involution, RationalBhatMember) {
  Field k = Field::rational(1, {"x1", "x2"});
  Algebra a = Algebra::build(k, 8, k.one(), k.var(0), k.var(1));
  Subalgebra b = canonical_totally_singular(a);
  Vec x = el(a, "x1^2/(x1^2+x2)*e + x1/(x1^2+x2)*w");
  BhatSet s = bhat(b);
  EXPECT_TRUE(s.contains(x));
  EXPECT_FALSE(s.contains(el(a, "x1*e + w")));
  Involution t = make_type_II(b, x);
  EXPECT_TRUE(is_automorphism(a, t.matrix));
  EXPECT_EQ(bhat_structure(b).description, "B^ additive subgroup of B (B division)");
}

TEST(Involution, NormalFormExhaustive) {
  for (unsigned n : {1u, 2u}) {
    Field k = Field::finite(n);
    auto elems = k.elements();
    std::size_t count = 0;
    for (const auto& a : elems)
      for (const auto& b : elems)
        for (const auto& c : elems)
          for (const auto& d : elems) {
            Matrix r = Matrix::from_rows(k, {{a, b}, {c, d}}, 2);
            if (r * r != Matrix::identity(k, 2) || r == Matrix::identity(k, 2)) {
              EXPECT_THROW(r_normal_form(r), Error);
              continue;
            }
            ++count;
            NormalForm nf = r_normal_form(r);
            EXPECT_EQ(nf.p * r * inverse(nf.p), nf.normal);
            EXPECT_EQ(nf.normal(0, 1), k.one());
            EXPECT_TRUE(nf.normal(1, 0).is_zero());
          }
    // order-2 elements of GL2(2^n): (q^2 - 1)
    EXPECT_EQ(count, k.size() * k.size() - 1);
  }
}

TEST(Involution, InvDMapsAreAutomorphisms) {
  Algebra a = gf(1);
  Subalgebra d = canonical_quaternion(a);
  std::size_t n = 0;
  for_each_in_span(a, d.rows(), [&](const Vec& c) {
    if (a.norm(c).is_zero()) return;
    for_each_in_span(a, d.rows(), [&](const Vec& p) {
      if (!a.norm(p).is_one()) return;
      EXPECT_TRUE(is_automorphism(a, invD_map(d, c, p)));
      ++n;
    });
  });
  EXPECT_EQ(n, 6u * 6u);
  EXPECT_THROW(invD_map(d, el(a, "e + u + v"), a.one()), Error);
  EXPECT_THROW(invD_map(d, a.one(), el(a, "e + u + v")), Error);
}

TEST(Involution, ExtendBAutomorphism) {
  Algebra a = gf(1);
  Subalgebra b = canonical_totally_singular(a);
  auto id = b.rows().row_list();
  EXPECT_TRUE(is_automorphism(a, extend_B_automorphism(b, id, a.one())));
  EXPECT_THROW(extend_B_automorphism(b, id, el(a, "v")), Error);
}

TEST(Involution, ConjugacyGf2) {
  Algebra a = gf(1);
  Involution t = make_type_I(canonical_quaternion(a), first_admissible_r(canonical_quaternion(a)));
  Matrix g = nth_automorphism(a, 5000);
  Matrix s = g * t.matrix * inverse(g);
  auto res = conjugacy_test(a, t.matrix, s);
  ASSERT_EQ(res.verdict, ConjVerdict::Conjugate);
  EXPECT_EQ(*res.witness * t.matrix, s * *res.witness);
  Involution t2 = make_type_II(canonical_totally_singular(a), a.one());
  EXPECT_EQ(conjugacy_test(t, t2).verdict, ConjVerdict::NotConjugate);
  Involution t3 = make_type_II(canonical_totally_singular(a), el(a, "v + w"));
  EXPECT_EQ(conjugacy_test(t, t3).verdict, ConjVerdict::Conjugate);
}

TEST(Involution, ConjugacyDivisionB) {
  Field k = Field::rational(1, {"x1", "x2"});
  Algebra a = Algebra::build(k, 8, k.one(), k.var(0), k.var(1));
  Subalgebra b = canonical_totally_singular(a);
  Involution t = make_type_II(b, a.one());
  Involution s = make_type_II(b, el(a, "x1^2/(x1^2+x2)*e + x1/(x1^2+x2)*w"));
  auto res = conjugacy_test(t, s);
  EXPECT_EQ(res.verdict, ConjVerdict::NotConjugate);
  EXPECT_EQ(conjugacy_test(t, t).verdict, ConjVerdict::Conjugate);
}

TEST(Involution, FixedPointGroupsGf2) {
  Algebra a = gf(1);
  Involution t = make_type_I(canonical_quaternion(a), first_admissible_r(canonical_quaternion(a)));
  auto f1 = fixed_point_group(t);
  EXPECT_EQ(f1.elements.size(), 12u);
  for (const auto& g : f1.elements) EXPECT_EQ(g * t.matrix, t.matrix * g);
  auto f2 = fixed_point_group(make_type_II(canonical_totally_singular(a), a.one()));
  EXPECT_EQ(f2.bhat_order, 8u);
  EXPECT_EQ(f2.aut_b_order, 24u);
  EXPECT_EQ(f2.extendable_count, 6u);
  EXPECT_EQ(f2.elements.size(), 48u);
}
