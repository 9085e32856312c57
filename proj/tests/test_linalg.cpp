#include <gtest/gtest.h>

#include <random>

#include "octo2/matrix.hpp"
#include "octo2/parse.hpp"

using namespace octo2;

namespace {

Matrix mat(const Field& k, std::vector<std::vector<int>> rows) {
  std::vector<Vec> r;
  for (auto& row : rows) {
    Vec v;
    for (int x : row) v.push_back(k.from_bits(static_cast<std::uint32_t>(x)));
    r.push_back(v);
  }
  return Matrix::from_rows(k, r, r[0].size());
}

Matrix random_matrix(const Field& k, std::size_t n, std::mt19937& rng) {
  Matrix m(k, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = k.from_bits(rng() % k.base().size());
  return m;
}

}  // namespace

TEST(Linalg, KernelExamples) {
  Field k = Field::finite(1);
  EXPECT_EQ(kernel_basis(Matrix(k, 2, 2)).rows(), 2u);
  EXPECT_EQ(kernel_basis(Matrix::identity(k, 2)).rows(), 0u);
  Matrix ker = kernel_basis(mat(k, {{1, 1}, {0, 0}}));
  ASSERT_EQ(ker.rows(), 1u);
  EXPECT_EQ(ker, mat(k, {{1, 1}}));
}

TEST(Linalg, DeterminantAndInverse) {
  Field k = Field::finite(1);
  EXPECT_TRUE(det(Matrix::identity(k, 4)).is_one());
  Matrix a = mat(k, {{1, 0}, {1, 1}});
  EXPECT_EQ(inverse(a), a);
  EXPECT_THROW(inverse(mat(k, {{1, 1}, {1, 1}})), Error);
  EXPECT_THROW(solve(mat(k, {{1, 1}, {1, 1}}), {k.one(), k.zero()}), Error);
}

TEST(Linalg, RandomPropertiesGf4) {
  Field k = Field::finite(2);
  std::mt19937 rng(1);
  int invertible = 0;
  for (int t = 0; t < 200; ++t) {
    Matrix a = random_matrix(k, 4, rng), b = random_matrix(k, 4, rng);
    EXPECT_EQ(det(a * b), det(a) * det(b));
    EXPECT_EQ(rank(a) + kernel_basis(a).rows(), a.cols());
    Matrix ker = kernel_basis(a);
    for (std::size_t i = 0; i < ker.rows(); ++i)
      for (const auto& x : a.apply(ker.row(i))) EXPECT_TRUE(x.is_zero());
    EXPECT_EQ(rank(ker), ker.rows());
    if (!det(a).is_zero()) {
      ++invertible;
      Matrix ai = inverse(a);
      EXPECT_EQ(ai * a, Matrix::identity(k, 4));
      EXPECT_EQ(inverse(ai), a);
      Vec rhs = b.col(0);
      EXPECT_EQ(a.apply(solve(a, rhs)), rhs);
    }
  }
  EXPECT_GT(invertible, 50);
}

TEST(Linalg, RationalEntries) {
  Field k = Field::rational(1, {"x1", "x2"});
  auto e = [&](const char* s) { return parse_element(k, s); };
  Matrix a = Matrix::from_rows(k, {{e("x1"), e("1")}, {e("x2"), e("x1+x2")}}, 2);
  EXPECT_EQ(det(a), e("x1^2+x1*x2+x2"));
  EXPECT_EQ(inverse(a) * a, Matrix::identity(k, 2));
  Matrix s = Matrix::from_rows(k, {{e("x1"), e("x2")}, {e("x1^2"), e("x1*x2")}}, 2);
  EXPECT_EQ(rank(s), 1u);
}
