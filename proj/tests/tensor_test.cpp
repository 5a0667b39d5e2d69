#include "cthash/tensor.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "cthash/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace cthash {
namespace {

TEST(ElemProduct2, WorkedExample) {
  const auto& a = fixtures::brualdi_matrices();
  const auto& w = fixtures::weight_matrix();
  EXPECT_EQ(elem_product2(a[0], w), Matrix2::from_rows({{1, 4, 0}, {2, 8, 0}, {0, 0, 27}}));
  EXPECT_EQ(elem_product2(a[1], w), Matrix2::from_rows({{1, 4, 0}, {2, 0, 18}, {0, 12, 0}}));
  EXPECT_EQ(elem_product2(a[4], w), Matrix2::from_rows({{1, 0, 9}, {2, 8, 0}, {0, 12, 0}}));
}

TEST(ElemProduct2, ZeroAndOnes) {
  const auto& w = fixtures::weight_matrix();
  EXPECT_EQ(elem_product2(Matrix2(3, 3, 0), w), Matrix2(3, 3, 0));
  EXPECT_EQ(elem_product2(Matrix2(3, 3, 1), w), w);
}

TEST(ElemProduct2, ShapeMismatch) {
  try {
    elem_product2(Matrix2(2, 3), Matrix2(3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Shape);
  }
}

TEST(ElemProduct3, IdentityAnnihilatorAndPointwise) {
  std::mt19937_64 rng(7);
  const Tensor3 v = oracle::random_tensor(rng, 2, 50);
  EXPECT_EQ(elem_product3(Tensor3(2, 1), v), v);
  EXPECT_EQ(elem_product3(Tensor3(2, 0), v), Tensor3(2, 0));

  Tensor3 big(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k) big(i, j, k) = (i + 1) + 8 * (j + 1) + 64 * (k + 1);
  const Tensor3 a = oracle::random_tensor(rng, 8, 1);
  const Tensor3 p = elem_product3(a, big);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_TRUE(p(i, j, k) == 0 || p(i, j, k) == big(i, j, k));
        EXPECT_EQ(p(i, j, k), a(i, j, k) * big(i, j, k));
      }
  EXPECT_THROW(elem_product3(Tensor3(2), Tensor3(3)), Error);
}

TEST(ElemProduct3, Commutative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_tensor(rng, 3, 20);
    const auto b = oracle::random_tensor(rng, 3, 20);
    EXPECT_EQ(elem_product3(a, b), elem_product3(b, a));
  }
}

TEST(Marginals2, WorkedExample) {
  const auto& a = fixtures::brualdi_matrices();
  for (const auto& m : a) {
    const auto rs = marginals2(m);
    EXPECT_EQ(rs.row_sums, (std::vector<Natural>{2, 2, 1}));
    EXPECT_EQ(rs.column_sums, (std::vector<Natural>{2, 2, 1}));
  }
  const auto weighted = marginals2(elem_product2(a[0], fixtures::weight_matrix()));
  EXPECT_EQ(weighted.row_sums, (std::vector<Natural>{5, 10, 27}));
  EXPECT_EQ(weighted.column_sums, (std::vector<Natural>{3, 12, 27}));
  const auto zero = marginals2(Matrix2(2, 4));
  EXPECT_EQ(zero.row_sums, (std::vector<Natural>(2, 0)));
  EXPECT_EQ(zero.column_sums, (std::vector<Natural>(4, 0)));
}

TEST(Marginals3, SmallCases) {
  const auto ones = marginals3(Tensor3(2, 1));
  EXPECT_EQ(ones.rows, Matrix2(2, 2, 2));
  EXPECT_EQ(ones.columns, Matrix2(2, 2, 2));
  EXPECT_EQ(ones.files, Matrix2(2, 2, 2));
  const auto zero = marginals3(Tensor3(3, 0));
  EXPECT_EQ(zero.max_entry(), 0u);
}

TEST(Marginals3, MatchesKOuterOracleAndTotals) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const Tensor3 t = oracle::random_tensor(rng, n, trial % 2 ? 1 : 1000);
    const auto m = marginals3(t);
    ASSERT_EQ(m, oracle::marginals_k_outer(t));
    Natural r = 0, c = 0, f = 0;
    for (auto x : m.rows.entries()) r += x;
    for (auto x : m.columns.entries()) c += x;
    for (auto x : m.files.entries()) f += x;
    EXPECT_EQ(r, t.total());
    EXPECT_EQ(c, t.total());
    EXPECT_EQ(f, t.total());
  }
}

TEST(Marginals3, OverflowIsAnError) {
  Tensor3 t(2, 0);
  t(0, 0, 0) = ~Natural{0};
  t(0, 1, 0) = 1;
  try {
    marginals3(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Overflow);
  }
}

TEST(Interchange, SwapsPatternsAndIsAnInvolution) {
  const Matrix2 b0 = Matrix2::from_rows({{1, 0}, {0, 1}});
  const Matrix2 b1 = Matrix2::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(interchange(b0, 0, 1, 0, 1), b1);
  EXPECT_EQ(interchange(b1, 0, 1, 0, 1), b0);
  EXPECT_EQ(interchange(interchange(b0, 0, 1, 0, 1), 0, 1, 0, 1), b0);
}

TEST(Interchange, NotApplicable) {
  const Matrix2 m = Matrix2::from_rows({{1, 1}, {0, 1}});
  try {
    interchange(m, 0, 1, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotApplicable);
  }
  EXPECT_THROW(interchange(m, 0, 0, 0, 1), Error);
  EXPECT_THROW(interchange(m, 0, 2, 0, 1), Error);
}

TEST(Interchange, PreservesMarginalsOnEveryApplicableSite) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 2 + rng() % 4, n = 2 + rng() % 4;
    Matrix2 a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rng() & 1;
    const auto before = marginals2(a);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = k + 1; l < m; ++l)
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = u + 1; v < n; ++v)
            if (interchange_applicable(a, k, l, u, v)) {
              EXPECT_EQ(marginals2(interchange(a, k, l, u, v)), before);
            }
  }
}

TEST(InterchangeReachable, WorkedExample) {
  const auto& a = fixtures::brualdi_matrices();
  EXPECT_TRUE(interchange_reachable(a[0], a[1]));
  EXPECT_TRUE(interchange_reachable(a[0], a[0]));
  EXPECT_FALSE(interchange_reachable(a[0], Matrix2(3, 3, 0)));
  // A(R,S) for R = S = (2,2,1) has exactly these five members.
  EXPECT_EQ(interchange_class(a[0]).size(), 5u);
}

TEST(InterchangeReachable, StateCap) {
  Matrix2 a(4, 4);
  for (std::size_t i = 0; i < 4; ++i) a(i, i) = 1;  // class of all 24 permutation matrices
  try {
    interchange_class(a, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Limit);
  }
  EXPECT_EQ(interchange_class(a).size(), 24u);
}

// Ryser: any two 0/1 matrices with equal row and column sums are linked by
// interchanges. Exhaustive for every shape up to 3 x 3.
TEST(InterchangeReachable, ClassesAreConnectedUpTo3x3) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::map<RowColPair, std::set<Matrix2>> classes;
      for (std::uint32_t mask = 0; mask < (1u << (m * n)); ++mask) {
        Matrix2 a(m, n);
        for (std::size_t b = 0; b < m * n; ++b) a(b / n, b % n) = (mask >> b) & 1u;
        classes[marginals2(a)].insert(a);
      }
      for (const auto& [sums, members] : classes) {
        EXPECT_EQ(interchange_class(*members.begin()), members) << m << "x" << n;
      }
    }
  }
}

TEST(TextFormat, TensorAndMatrixRoundTrip) {
  std::mt19937_64 rng(9);
  const Tensor3 t = oracle::random_tensor(rng, 3, 700);
  std::stringstream ss;
  write_tensor(ss, t);
  EXPECT_EQ(read_tensor(ss), t);

  std::stringstream ms;
  write_matrix(ms, fixtures::weight_matrix());
  EXPECT_EQ(ms.str(), "3 3\n1 4 9\n2 8 18\n3 12 27\n");
  EXPECT_EQ(read_matrix(ms), fixtures::weight_matrix());
}

TEST(TextFormat, Malformed) {
  std::istringstream short_input("2\n1 2 3");
  EXPECT_THROW(read_tensor(short_input), Error);
  std::istringstream negative("1\n-4");
  EXPECT_THROW(read_tensor(negative), Error);
}

}  // namespace
}  // namespace cthash
