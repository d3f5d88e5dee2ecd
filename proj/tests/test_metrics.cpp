#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "subcodes/error.hpp"
#include "subcodes/metrics.hpp"

using namespace subcodes;

namespace {

Word bits(const Field& f2, std::vector<int> v) {
  Word w{f2, {}};
  for (int b : v) w.symbols.push_back(f2.scalar(static_cast<std::uint32_t>(b)));
  return w;
}

Word random_word(const Field& f, std::size_t len, std::mt19937_64& gen) {
  Word w{f, {}};
  for (std::size_t i = 0; i < len; ++i) w.symbols.push_back(f.from_index(gen() % f.order()));
  return w;
}

std::vector<std::uint64_t> indices(const Word& w) {
  std::vector<std::uint64_t> out;
  for (auto s : w.symbols) out.push_back(s.index);
  return out;
}

// Subspace distance from enumerated spans.
std::size_t span_distance_oracle(const Word& a, const Word& b) {
  const auto& f = a.field;
  std::vector<oracle::Vec> va, vb;
  for (auto s : a.symbols) va.push_back(f.coeffs(s));
  for (auto s : b.symbols) vb.push_back(f.coeffs(s));
  const auto n = static_cast<std::size_t>(f.degree());
  const auto sa = oracle::span_set(va, n, f.q()), sb = oracle::span_set(vb, n, f.q());
  const auto da = oracle::log_q(sa.size(), f.q()), db = oracle::log_q(sb.size(), f.q());
  const auto di = oracle::log_q(oracle::intersection_size(sa, sb), f.q());
  return da + db - 2 * di;
}

std::size_t subset_oracle(const Word& a, const Word& b) {
  const auto ia = indices(a), ib = indices(b);
  std::set<std::uint64_t> sa(ia.begin(), ia.end()), sb(ib.begin(), ib.end());
  std::size_t common = 0;
  for (auto x : sa) common += sb.count(x);
  return sa.size() + sb.size() - 2 * common;
}

}  // namespace

TEST(Distances, HammingAndInsdelExamples) {
  const auto f2 = Field::create(2, 1);
  const auto a = bits(f2, {0, 1, 1, 0}), b = bits(f2, {1, 1, 0, 0});
  EXPECT_EQ(hamming_distance(a, b), 2u);
  EXPECT_EQ(hamming_distance(a, a), 0u);
  EXPECT_EQ(insdel_distance(a, b), 2u);
  EXPECT_EQ(insdel_distance(a, a), 0u);
  EXPECT_EQ(insdel_distance(bits(f2, {1}), bits(f2, {})), 1u);
  EXPECT_THROW(hamming_distance(a, bits(f2, {1})), Error);
}

TEST(Distances, SubspaceAndSubsetExamples) {
  const auto f4 = Field::create(2, 2);
  const Word a{f4, {f4.one(), f4.basis(1)}};
  const Word b{f4, {f4.one(), f4.one()}};
  EXPECT_EQ(subspace_distance(a, b), 1u);
  EXPECT_EQ(subset_distance(a, b), 1u);
  const Word swapped{f4, {f4.basis(1), f4.one()}};
  EXPECT_EQ(subspace_distance(a, swapped), 0u);
  EXPECT_EQ(subset_distance(a, swapped), 0u);
  const auto f8 = Field::create(2, 3);
  const Word x{f8, {f8.from_index(1), f8.from_index(2), f8.from_index(3)}};
  const Word y{f8, {f8.from_index(4), f8.from_index(5), f8.from_index(6)}};
  EXPECT_EQ(subset_distance(x, y), 6u);
}

TEST(Distances, RandomAgainstOracles) {
  std::mt19937_64 gen(3);
  for (auto [q, n] : {std::pair<std::uint32_t, int>{2, 2}, {2, 3}, {3, 2}}) {
    const auto f = Field::create(q, n);
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = random_word(f, 1 + gen() % 6, gen), b = random_word(f, 1 + gen() % 6, gen);
      ASSERT_EQ(lcs_length(a.symbols, b.symbols), oracle::lcs(indices(a), indices(b)));
      ASSERT_EQ(subspace_distance(a, b), span_distance_oracle(a, b));
      ASSERT_EQ(subset_distance(a, b), subset_oracle(a, b));
      ASSERT_EQ(insdel_distance(a, b) == 0, a.symbols == b.symbols);
      if (a.size() == b.size()) ASSERT_EQ(insdel_distance(a, b) % 2, 0u);
    }
  }
}

TEST(Distances, PseudometricAxiomsIncludingFolded) {
  std::mt19937_64 gen(5);
  const auto f = Field::create(2, 2);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t m = 1 + gen() % 6;
    const auto x = random_word(f, m, gen), y = random_word(f, m, gen), z = random_word(f, m, gen);
    ASSERT_LE(subspace_distance(x, z), subspace_distance(x, y) + subspace_distance(y, z));
    ASSERT_LE(subset_distance(x, z), subset_distance(x, y) + subset_distance(y, z));
    ASSERT_EQ(subspace_distance(x, y), subspace_distance(y, x));
    const std::size_t r = 1 + gen() % 3;
    ASSERT_LE(r_subspace_distance(x, z, r), r_subspace_distance(x, y, r) + r_subspace_distance(y, z, r));
    ASSERT_LE(r_subset_distance(x, z, r), r_subset_distance(x, y, r) + r_subset_distance(y, z, r));
    ASSERT_LE(subspace_distance(x, y), subset_distance(x, y));
    ASSERT_LE(subset_distance(x, y), insdel_distance(x, y));
    ASSERT_LE(insdel_distance(x, y), 2 * hamming_distance(x, y));
  }
}

TEST(Fold, BlocksAndPadding) {
  const auto f = Field::create(2, 2);
  Word w{f, {}};
  for (int i = 1; i <= 5; ++i) w.symbols.push_back(f.from_index(i % 4));
  const auto two = fold(w, 2);
  ASSERT_EQ(two.blocks.size(), 3u);
  EXPECT_EQ(two.blocks[2], (std::vector<FieldElement>{w.symbols[4], f.zero()}));
  EXPECT_EQ(fold(w, 5).blocks.size(), 1u);
  Word w4{f, {w.symbols.begin(), w.symbols.begin() + 4}};
  EXPECT_EQ(fold(w4, 2).blocks[1], (std::vector<FieldElement>{w.symbols[2], w.symbols[3]}));
}

TEST(Fold, RthDistances) {
  const auto f = Field::create(2, 3);
  const auto x = f.from_index(3), y = f.from_index(5);
  const Word a{f, {x, x, x, x}}, b{f, {y, y, y, y}};
  EXPECT_EQ(r_subspace_distance(a, b, 4), 2u);
  EXPECT_EQ(r_subset_distance(a, b, 4), 2u);
  EXPECT_EQ(r_subspace_distance(a, a, 2), 0u);
  std::mt19937_64 gen(9);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_word(f, 4, gen), q = random_word(f, 4, gen);
    EXPECT_EQ(r_subspace_distance(p, q, 1), subspace_distance(p, q));
    EXPECT_EQ(r_subset_distance(p, q, 1), subset_distance(p, q));
  }
}

TEST(Metric, ParseAndName) {
  EXPECT_EQ(Metric::parse("subset", 2).name(), "r_subset(2)");
  EXPECT_EQ(Metric::parse("insdel").name(), "insdel");
  EXPECT_THROW(Metric::parse("insdel", 2), Error);
  EXPECT_THROW(Metric::parse("levenshtein"), Error);
}

TEST(CodeDistance, WitnessAndGuards) {
  const auto f2 = Field::create(2, 1);
  auto code = make_vector_code(f2, 4, {bits(f2, {0, 1, 1, 0}), bits(f2, {1, 1, 0, 0})});
  const auto rep = code_min_distance(code, {Metric::Kind::hamming, 1});
  EXPECT_EQ(rep.min, 2u);
  EXPECT_EQ(rep.witness_i, 0u);
  EXPECT_EQ(rep.witness_j, 1u);
  EXPECT_EQ(rep.pairs, 1u);
  EXPECT_EQ(rep.csv(), "hamming,2,0,1,1");
  auto single = make_vector_code(f2, 4, {bits(f2, {0, 1, 1, 0})});
  try {
    code_min_distance(single, {Metric::Kind::insdel, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooFewCodewords);
  }
  SearchLimits tight{0, false};
  EXPECT_THROW(code_min_distance(code, {Metric::Kind::insdel, 1}, tight), Error);
  EXPECT_EQ(code_min_distance(code, {Metric::Kind::insdel, 1}, {0, true}).min, 2u);
}

TEST(CodeDistance, RepetitionCodeInsdelMatchesLcsOracle) {
  const auto f2 = Field::create(2, 1);
  std::vector<Word> words;
  for (int x = 0; x < 8; ++x) {
    std::vector<int> v;
    for (int i = 0; i < 3; ++i) v.insert(v.end(), 2, (x >> i) & 1);
    words.push_back(bits(f2, v));
  }
  auto code = make_vector_code(f2, 6, words);
  std::size_t max_lcs = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      max_lcs = std::max(max_lcs, oracle::lcs(indices(words[i]), indices(words[j])));
  EXPECT_EQ(code_min_distance(code, {Metric::Kind::insdel, 1}).min, 2 * (6 - max_lcs));
}

TEST(LinearCode, EnumeratesRowSpace) {
  const auto f4 = Field::create(2, 2);
  const FieldMatrix g{{f4.one(), f4.zero(), f4.basis(1)}, {f4.zero(), f4.one(), f4.one()}};
  const auto code = linear_code(f4, g);
  EXPECT_EQ(code.size(), 16u);
  EXPECT_TRUE(code.linear());
  EXPECT_TRUE(is_codeword(code, {f4.one(), f4.one(), f4.add(f4.basis(1), f4.one())}));
  EXPECT_FALSE(is_codeword(code, {f4.one(), f4.zero(), f4.zero()}));
  const FieldMatrix dep{{f4.one(), f4.one()}, {f4.basis(1), f4.basis(1)}};
  try {
    linear_code(f4, dep);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLinear);
  }
}

TEST(LinearCode, DeduplicatesWords) {
  const auto f2 = Field::create(2, 1);
  auto code = make_vector_code(f2, 2, {bits(f2, {0, 1}), bits(f2, {0, 1}), bits(f2, {1, 1})});
  EXPECT_EQ(code.size(), 2u);
}

TEST(Ghw, Examples) {
  const auto f2 = Field::create(2, 1);
  const auto one = f2.one(), zero = f2.zero();
  const auto pair_rep = linear_code(f2, {{one, zero, one, zero}, {zero, one, zero, one}});
  EXPECT_EQ(generalized_hamming_weights(pair_rep), (std::vector<std::size_t>{2, 4}));
  FieldMatrix id;
  for (int i = 0; i < 4; ++i) {
    id.emplace_back(4, zero);
    id.back()[i] = one;
  }
  EXPECT_EQ(generalized_hamming_weights(linear_code(f2, id)), (std::vector<std::size_t>{1, 2, 3, 4}));
}

TEST(Ghw, OracleOnRandomCodes) {
  // d_r by brute force over sets of r codewords spanning an r-dim subcode
  std::mt19937_64 gen(13);
  const auto f2 = Field::create(2, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 4 + gen() % 2, k = 2;
    FieldMatrix g;
    std::vector<oracle::Vec> rows;
    do {
      g.assign(k, std::vector<FieldElement>(n));
      rows.assign(k, oracle::Vec(n));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          rows[i][j] = gen() % 2;
          g[i][j] = f2.scalar(rows[i][j]);
        }
    } while (oracle::rank(rows, n, 2) != k);
    const auto words = oracle::span_set(rows, n, 2);
    std::vector<oracle::Vec> nz(words.begin(), words.end());
    nz.erase(nz.begin());
    std::size_t d1 = n, d2 = n;
    for (std::size_t i = 0; i < nz.size(); ++i) {
      d1 = std::min<std::size_t>(d1, std::count(nz[i].begin(), nz[i].end(), 1u));
      for (std::size_t j = i + 1; j < nz.size(); ++j) {
        std::size_t supp = 0;
        for (std::size_t c = 0; c < n; ++c) supp += (nz[i][c] | nz[j][c]) != 0;
        d2 = std::min(d2, supp);
      }
    }
    const auto ghw = generalized_hamming_weights(linear_code(f2, g));
    ASSERT_EQ(ghw, (std::vector<std::size_t>{d1, d2}));
    for (std::size_t r = 1; r <= k; ++r) ASSERT_LE(ghw[r - 1], n - k + r);
  }
}
