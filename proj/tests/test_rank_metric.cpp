#include <gtest/gtest.h>

#include "oracle.hpp"
#include "subcodes/error.hpp"
#include "subcodes/rank_metric.hpp"

using namespace subcodes;

namespace {

Field gf8() { return Field::create(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1}); }

// Rank census computed from explicitly evaluated maps and enumerated row spaces.
std::vector<std::size_t> census_oracle(const RankCode& code) {
  const auto& src = code.source;
  const auto cols = static_cast<std::size_t>(code.target.degree());
  std::vector<std::size_t> counts(static_cast<std::size_t>(src.degree()) + 1, 0);
  for (std::size_t i = 0; i < code.size(); ++i) {
    std::vector<oracle::Vec> rows;
    for (int b = 0; b < src.degree(); ++b) rows.push_back(code.target.coeffs(code.eval(i, src.basis(b))));
    ++counts[oracle::rank(rows, cols, src.q())];
  }
  return counts;
}

std::vector<std::size_t> as_sizes(const RankDistribution& d) {
  std::vector<std::size_t> out;
  for (const auto& c : d.counts) out.push_back(static_cast<std::size_t>(c));
  return out;
}

}  // namespace

TEST(Linearized, EvalAndMatrix) {
  const auto f = gf8();
  const LinearizedPoly identity{{f.one()}};
  const LinearizedPoly square{{f.zero(), f.one()}};
  const LinearizedPoly zero{{f.zero(), f.zero()}};
  for (auto x : f.elements()) {
    EXPECT_EQ(linearized_eval(f, identity, x), x);
    EXPECT_TRUE(linearized_eval(f, zero, x).is_zero());
  }
  const auto a1 = f.from_coeffs(std::vector<std::uint32_t>{1, 1, 0});
  EXPECT_EQ(f.coeffs(linearized_eval(f, square, a1)), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(poly_to_matrix(f, identity), FqMatrix::identity(2, 3));
  EXPECT_TRUE(poly_to_matrix(f, zero).is_zero());
  EXPECT_EQ(rank(poly_to_matrix(f, square)), 3u);
  EXPECT_TRUE(zero.is_zero());
}

TEST(Linearized, MatrixIsAdditiveAndInjective) {
  const auto f = gf8();
  const auto code = gabidulin_code(f, 1);
  std::set<std::vector<std::vector<std::uint32_t>>> seen;
  for (std::size_t i = 0; i < code.size(); ++i) {
    seen.insert(code.matrix(i).to_rows());
    const auto& p = code.members[i];
    const auto& r = code.members[(i * 7 + 3) % code.size()];
    LinearizedPoly sum{{f.add(p.coeffs[0], r.coeffs[0]), f.add(p.coeffs[1], r.coeffs[1])}};
    ASSERT_EQ(poly_to_matrix(f, sum), poly_to_matrix(f, p) + poly_to_matrix(f, r));
    if (!p.is_zero()) ASSERT_GE(rank(poly_to_matrix(f, p)), 2u);
  }
  EXPECT_EQ(seen.size(), 64u);
}

TEST(Gabidulin, SizesAndDistances) {
  const auto c231 = gabidulin_code(Field::create(2, 3), 1);
  EXPECT_EQ(c231.size(), 64u);
  EXPECT_EQ(rank_distance_of_code(c231), 2u);
  EXPECT_EQ(c231.declared_distance, 2u);
  const auto c242 = gabidulin_code(Field::create(2, 4), 2);
  EXPECT_EQ(c242.size(), 4096u);
  EXPECT_EQ(rank_distance_of_code(c242), 2u);
  const auto t0 = gabidulin_code(Field::create(3, 2), 0);
  EXPECT_EQ(t0.size(), 9u);
  EXPECT_EQ(rank_distance_of_code(t0), 2u);
  EXPECT_THROW(gabidulin_code(Field::create(2, 3), 3), Error);
}

TEST(Gabidulin, CensusMatchesOracleAndDelsarte) {
  for (auto [q, n, t] : {std::tuple<std::uint32_t, int, std::size_t>{2, 3, 1}, {2, 3, 0}, {3, 2, 0}, {2, 4, 2},
                         {2, 3, 2}}) {
    const auto code = gabidulin_code(Field::create(q, n), t);
    const auto oracle_counts = census_oracle(code);
    EXPECT_EQ(as_sizes(empirical_rank_distribution(code)), oracle_counts);
    EXPECT_EQ(as_sizes(delsarte_rank_distribution(n, n - t, q)), oracle_counts) << q << " " << n << " " << t;
  }
  EXPECT_EQ(as_sizes(empirical_rank_distribution(gabidulin_code(Field::create(2, 3), 1))),
            (std::vector<std::size_t>{1, 0, 49, 14}));
}

TEST(Delsarte, TotalsAndEdgeCases) {
  for (std::uint32_t q : {2u, 3u}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (std::size_t d = 1; d <= n; ++d) {
        const auto dist = delsarte_rank_distribution(n, d, q);
        EXPECT_EQ(dist.total(), big_pow(q, n * (n - d + 1)));
        EXPECT_EQ(dist.counts[0], 1);
        for (std::size_t r = 1; r < d; ++r) EXPECT_EQ(dist.counts[r], 0);
      }
      const auto full = delsarte_rank_distribution(n, n, q);
      EXPECT_EQ(full.counts[n], big_pow(q, n) - 1);
    }
  }
}

TEST(Mrd, Check) {
  const auto c231 = gabidulin_code(Field::create(2, 3), 1);
  EXPECT_TRUE(mrd_check(c231, 3, 3, 2));
  EXPECT_TRUE(is_mrd(c231));
  EXPECT_EQ(mrd_bound(2, 3, 3, 2), 64);
  std::vector<FqMatrix> sub;
  for (std::size_t i = 0; i < 32; ++i) sub.push_back(c231.matrix(i));
  EXPECT_FALSE(mrd_check(make_explicit_rank_code(c231.source, sub), 3, 3, 2));
  EXPECT_TRUE(mrd_check(gabidulin_code(Field::create(2, 4), 2), 4, 4, 2));
}

TEST(GaussianBinomial, Values) {
  EXPECT_EQ(gaussian_binomial(5, 0, 2), 1);
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial(5, 2, 2), 155);
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(gaussian_binomial(n, k, 3), gaussian_binomial(n, n - k, 3));
}

TEST(GabidulinRect, SmallInstance) {
  const auto src = Field::create(2, 2), dst = Field::create(2, 3);
  const auto code = gabidulin_rect(src, dst, 0);
  EXPECT_EQ(code.size(), 8u);
  EXPECT_EQ(code.rows(), 2u);
  EXPECT_EQ(code.cols(), 3u);
  const auto counts = census_oracle(code);
  EXPECT_EQ(counts, (std::vector<std::size_t>{1, 0, 7}));
  EXPECT_EQ(rank_distance_of_code(code), 2u);
}

TEST(GabidulinRect, SquareCaseCoincides) {
  const auto f = Field::create(2, 3);
  const auto rect = gabidulin_rect(f, f, 1);
  const auto sq = gabidulin_code(f, 1);
  ASSERT_EQ(rect.size(), sq.size());
  for (std::size_t i = 0; i < sq.size(); ++i) EXPECT_EQ(rect.matrix(i), sq.matrix(i));
}

TEST(RankDistance, TooFewMembers) {
  const auto f = Field::create(2, 2);
  EXPECT_THROW(rank_distance_of_code(make_explicit_rank_code(f, {FqMatrix(2, 2, 2)})), Error);
}
