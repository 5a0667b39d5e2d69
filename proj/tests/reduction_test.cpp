#include "cthash/reduction.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "cthash/encoding.hpp"
#include "cthash/error.hpp"
#include "cthash/params.hpp"
#include "oracles.hpp"

namespace cthash {
namespace {

Tensor3 table_from_mask(std::uint64_t mask, std::size_t n) {
  Tensor3 t(n);
  for (std::size_t b = 0; b < t.volume(); ++b) t.entries()[b] = (mask >> b) & 1u;
  return t;
}

// duplic by direct index arithmetic: output position -> source position.
BitString duplic_by_index(const BitString& x, std::size_t n) {
  const std::size_t w = f0(n);
  const std::size_t group = n * w;
  const std::size_t line = 2 * n * group;
  BitString out;
  for (std::size_t p = 0; p < 4 * x.size(); ++p) {
    const std::size_t segment = p / (2 * line);
    const std::size_t q = (p % (2 * line)) % line;
    const std::size_t g = q / (2 * group);
    const std::size_t off = q % group;
    out.push_back(x[segment * n * group + g * group + off]);
  }
  return out;
}

TEST(Layout, Offsets) {
  EXPECT_EQ(t_offset(1, 3), 6u);
  EXPECT_EQ(t_offset(3, 3), 18u);
  EXPECT_EQ(t_offset(0, 5), 0u);
  EXPECT_EQ(t_offset(6, 2), 24u);
  EXPECT_THROW(t_offset(10, 3), Error);
  const auto layout = DuplicLayout::for_side(3);
  EXPECT_EQ(layout.width, 2u);
  EXPECT_EQ(layout.length, 54u);
}

TEST(Layout, StrcopyAndDcopy) {
  const BitString x = BitString::parse("110100" "001011" "111111" "000000");
  EXPECT_EQ(strcopy(x, 1, 2).to_string(), "1101");
  EXPECT_EQ(strcopy(x, 2, 2).to_string(), "0000");
  EXPECT_EQ(dcopy(x, 1, 2).to_string(), "11011101");
  EXPECT_THROW(strcopy(x, 0, 2), Error);
  EXPECT_THROW(strcopy(x, 7, 2), Error);
  EXPECT_THROW(strcopy(BitString(4, false), 2, 2), Error);
}

TEST(Duplic, MatchesIndexFormula) {
  std::mt19937_64 rng(6);
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t len = DuplicLayout::for_side(n).length;
    for (int trial = 0; trial < 50; ++trial) {
      BitString x;
      for (std::size_t b = 0; b < len; ++b) x.push_back(rng() & 1);
      const BitString z = duplic(x, n);
      ASSERT_EQ(z.size(), 4 * len);
      EXPECT_EQ(z, duplic_by_index(x, n));
    }
  }
  EXPECT_THROW(duplic(BitString(53, false), 3), Error);
}

TEST(Doubling, OctantsAndMarginals) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const Tensor3 a = oracle::random_tensor(rng, n, 1);
    const Tensor3 c = build_c(a), d = build_d(a);
    ASSERT_EQ(c.side(), 2 * n);
    EXPECT_EQ(c.total(), 4 * a.total());
    EXPECT_EQ(d.total(), 4 * a.total());
    Tensor3 sum(2 * n);
    for (std::size_t idx = 0; idx < sum.volume(); ++idx) sum.entries()[idx] = c.entries()[idx] + d.entries()[idx];
    // C and D tile the doubled cube with eight copies of A.
    for (std::size_t i = 0; i < 2 * n; ++i)
      for (std::size_t j = 0; j < 2 * n; ++j)
        for (std::size_t k = 0; k < 2 * n; ++k) EXPECT_EQ(sum(i, j, k), a(i % n, j % n, k % n));
    EXPECT_EQ(marginals3(c), marginals3(d));
    EXPECT_EQ(recover(c), a);
    EXPECT_EQ(recover(d), a);
  }
  EXPECT_THROW(build_c(Tensor3(2, 2)), Error);
  EXPECT_THROW(recover(Tensor3(3)), Error);
  EXPECT_THROW(recover(Tensor3(2, 1)), Error);
  EXPECT_EQ(recover(Tensor3(2, 1), false), Tensor3(1, 2));
}

TEST(Doubling, DuplicOfEncodingIsEncodingOfC) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::mt19937_64 rng(n);
    const unsigned w = f0(n);
    for (int trial = 0; trial < 200; ++trial) {
      const Tensor3 a = oracle::random_tensor(rng, n, 1);
      EXPECT_EQ(duplic(g2_fixed(a, w), n), g2_fixed(build_c(a), w));
    }
  }
}

TEST(Enumerate, ClassSizesMatchPlainEnumeration) {
  std::map<MarginalTriple, std::size_t> seen;
  for (std::uint64_t mask = 0; mask < 256; ++mask) ++seen[marginals3(table_from_mask(mask, 2))];
  std::size_t total = 0;
  for (const auto& [target, count] : seen) {
    std::vector<Tensor3> found;
    const std::size_t visited = enumerate_tables(target, binary_domains(2), [&](const Tensor3& t) {
      found.push_back(t);
      return true;
    });
    EXPECT_EQ(visited, count);
    EXPECT_TRUE(std::is_sorted(found.begin(), found.end(), [](const Tensor3& x, const Tensor3& y) {
      return std::lexicographical_compare(x.entries().begin(), x.entries().end(),
                                          y.entries().begin(), y.entries().end());
    }));
    std::sort(found.begin(), found.end());
    auto expected = oracle::all_binary_with_marginals(target);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(found, expected);
    total += visited;
  }
  EXPECT_EQ(total, 256u);
}

TEST(BruteForce, AgreesWithIndependentSearchAtSideThree) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    MarginalTriple target = marginals3(oracle::random_tensor(rng, 3, 1));
    if (trial % 2) {
      // Move one unit between two rows: totals still agree, feasibility varies.
      const std::size_t a = rng() % 9, b = rng() % 9;
      if (target.rows(a / 3, a % 3) > 0 && target.rows(b / 3, b % 3) < 3) {
        --target.rows(a / 3, a % 3);
        ++target.rows(b / 3, b % 3);
      }
    }
    const auto found = brute_force_3dct(target, true);
    EXPECT_EQ(found.has_value(), oracle::binary_3dct_exists_kji(target));
    if (found) {
      EXPECT_EQ(marginals3(*found), target);
    }
  }
}

TEST(BruteForce, NaturalTables) {
  Tensor3 t(2, 0);
  t(0, 0, 0) = 3;
  t(1, 1, 1) = 2;
  const auto found = brute_force_3dct(marginals3(t), false);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(marginals3(*found), marginals3(t));
  EXPECT_FALSE(brute_force_3dct(marginals3(t), true).has_value());
}

TEST(BruteForce, SideLimit) {
  try {
    brute_force_3dct(marginals3(Tensor3(4, 0)), true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Limit);
  }
  EXPECT_TRUE(brute_force_3dct(marginals3(Tensor3(4, 0)), true, SolverLimits{4}).has_value());
}

TEST(WeightedFiber, MatchesExhaustiveScan) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const auto params = generate_pair(2, rng());
    const Tensor3 a = table_from_mask(rng() % 256, 2);
    const auto target = marginals3(elem_product3(a, params.v()));
    std::vector<Tensor3> expected;
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
      const Tensor3 b = table_from_mask(mask, 2);
      if (oracle::marginals_k_outer(elem_product3(b, params.v())) == target) expected.push_back(b);
    }
    auto got = weighted_fiber(target, params.v());
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected);
  }
}

TEST(Sol3dct, EveryTableOfSideTwo) {
  const unsigned w = f0(2);
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    const Tensor3 a = table_from_mask(mask, 2);
    const BitString x = g2_fixed(a, w);
    const auto result = sol3dct_demo(x, 2);
    EXPECT_EQ(g2_fixed(result.table, w), x);
    EXPECT_EQ(marginals3(result.table), marginals3(a));
    EXPECT_EQ(marginals3(result.doubled), decode_marginals(duplic(x, 2), 4, w));
    EXPECT_GE(result.candidates, 1u);
  }
}

TEST(Sol3dct, ZeroAndSideOne) {
  EXPECT_EQ(sol3dct_demo(BitString(24, false), 2).table, Tensor3(2, 0));
  EXPECT_EQ(sol3dct_demo(BitString::parse("111"), 1).table, Tensor3(1, 1));
}

TEST(Sol3dct, Infeasible) {
  // Row total 1, column and file totals 0.
  BitString x(24, false);
  x.set(1, true);
  try {
    sol3dct_demo(x, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Infeasible);
  }
  // Totals agree but a line of length 2 cannot sum to 3.
  BitString y(24, false);
  for (std::size_t field : {0u, 4u, 8u}) {
    y.set(2 * field, true);
    y.set(2 * field + 1, true);
  }
  EXPECT_THROW(sol3dct_demo(y, 2), Error);
  EXPECT_THROW(sol3dct_demo(BitString(81, false), 3), Error);
}

}  // namespace
}  // namespace cthash
