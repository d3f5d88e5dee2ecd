#include <gtest/gtest.h>

#include <random>

#include "subcodes/bounds.hpp"
#include "subcodes/derived_codes.hpp"
#include "subcodes/error.hpp"
#include "subcodes/verify.hpp"

using namespace subcodes;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalConsistency;
}

}  // namespace

TEST(Singleton, Values) {
  EXPECT_EQ(singleton_bound(5, 4, 2, Metric::Kind::insdel).value, 16);
  EXPECT_EQ(singleton_bound(5, 2, 2, Metric::Kind::insdel).value, 32);
  EXPECT_EQ(singleton_bound(5, 3, 3, Metric::Kind::hamming).value, 27);
  EXPECT_EQ(singleton_bound(4, 4, 2, Metric::Kind::subset).value, 8);
  EXPECT_EQ(code_of([] { singleton_bound(4, 5, 2, Metric::Kind::hamming); }), ErrorCode::ParameterOutOfRange);
  EXPECT_EQ(code_of([] { singleton_bound(4, 9, 2, Metric::Kind::insdel); }), ErrorCode::ParameterOutOfRange);
}

TEST(HalfSingleton, Values) {
  EXPECT_EQ(half_singleton(6, 2), 8u);
  EXPECT_EQ(half_singleton(4, 3), 2u);
  EXPECT_EQ(half_singleton(7, 1), 14u);
}

TEST(StrongHalfSingleton, BothForms) {
  const auto s = strong_half_singleton({2, 4});
  EXPECT_EQ(s.doubled, 4);
  EXPECT_EQ(s.plain, 2);
  EXPECT_EQ(strong_half_singleton({3}).doubled, 6);
  EXPECT_EQ(code_of([] { strong_half_singleton({2, 2}); }), ErrorCode::NonMonotoneInput);
  // with d_r = n - k + r the doubled form meets the half-Singleton value
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::size_t> ghw;
      for (std::size_t r = 1; r <= k; ++r) ghw.push_back(n - k + r);
      EXPECT_LE(strong_half_singleton(ghw).doubled, static_cast<std::int64_t>(half_singleton(n, k)));
    }
}

TEST(Levenshtein, AndKlo) {
  EXPECT_EQ(levenshtein_bound(4, 2), 4);
  EXPECT_EQ(klo_bound(2), 3);
  EXPECT_EQ(klo_bound(4), 20);
  EXPECT_LT(klo_bound(2), levenshtein_bound(4, 2));
  EXPECT_EQ(levenshtein_bound(5, 3), (81 + 3 * 27 + 3) / 5);
  EXPECT_EQ(code_of([] { klo_bound(3); }), ErrorCode::ParityViolation);
  EXPECT_EQ(code_of([] { levenshtein_bound(1, 2); }), ErrorCode::ParameterOutOfRange);
}

TEST(Witness, FullSpace) {
  const auto f = Field::create(2, 1);
  FieldMatrix id(3, std::vector<FieldElement>(3, f.zero()));
  for (int i = 0; i < 3; ++i) id[i][i] = f.one();
  const auto x = cyclic_shift_witness(linear_code(f, id));
  EXPECT_TRUE(std::any_of(x.symbols.begin(), x.symbols.end(), [](auto s) { return !s.is_zero(); }));
}

TEST(Witness, RandomHighRateCodes) {
  Rng rng(2024);
  for (auto [q, m] : {std::pair<std::uint32_t, int>{2, 1}, {3, 1}, {2, 2}}) {
    const auto f = Field::create(q, m);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 3 + rng.below(m == 1 && q == 2 ? 6 : 3);
      const std::size_t k = n / 2 + 1 + rng.below(n - n / 2);
      const auto code = linear_code(f, random_generator(f, k, n, rng));
      const auto x = cyclic_shift_witness(code);
      const auto y = left_shift(x);
      ASSERT_TRUE(std::any_of(x.symbols.begin(), x.symbols.end(), [](auto s) { return !s.is_zero(); }));
      ASSERT_TRUE(is_codeword(code, x.symbols));
      ASSERT_TRUE(is_codeword(code, y.symbols));
      ASSERT_EQ(subset_distance(x, y), 0u);
      ASSERT_LE(insdel_distance(x, y), 2u);
    }
  }
}

TEST(Witness, Guards) {
  const auto f = Field::create(2, 1);
  const auto low = linear_code(f, {{f.one(), f.one(), f.zero(), f.zero()}, {f.zero(), f.zero(), f.one(), f.one()}});
  EXPECT_EQ(code_of([&] { cyclic_shift_witness(low); }), ErrorCode::RateTooLow);
  auto nonlinear = make_vector_code(f, 2, {{f, {f.one(), f.zero()}}, {f, {f.zero(), f.one()}}});
  EXPECT_EQ(code_of([&] { cyclic_shift_witness(nonlinear); }), ErrorCode::NotLinear);
}

TEST(ParityCheck, AnnihilatesGenerator) {
  Rng rng(5);
  const auto f = Field::create(2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_generator(f, 2, 5, rng);
    const auto h = parity_check(f, g);
    ASSERT_EQ(h.size(), 3u);
    for (const auto& gr : g)
      for (const auto& hr : h) {
        FieldElement acc = f.zero();
        for (std::size_t j = 0; j < 5; ++j) acc = f.add(acc, f.mul(gr[j], hr[j]));
        ASSERT_TRUE(acc.is_zero());
      }
  }
}

TEST(VerifyBounds, SpanCodeChain) {
  const auto code = span_code(spread(2, 2, 4), 2);
  const auto v = verify_bounds(code);
  EXPECT_TRUE(v.chain_holds);
  EXPECT_EQ(v.d_insdel, 4u);
  EXPECT_TRUE(v.findings.empty());
  for (const auto& b : v.bounds) EXPECT_EQ(b.satisfied, true) << b.name;
}

TEST(VerifyBounds, HighRateLinearCode) {
  const auto f = Field::create(2, 2);
  const FieldMatrix g{{f.one(), f.zero(), f.basis(1)}, {f.zero(), f.one(), f.one()}};
  const auto v = verify_bounds(linear_code(f, g));
  EXPECT_EQ(v.d_subspace, 0u);
  EXPECT_EQ(v.d_subset, 0u);
  EXPECT_TRUE(v.chain_holds);
}

TEST(VerifyBounds, PairRepetitionCode) {
  const auto f = Field::create(2, 1);
  const auto one = f.one(), zero = f.zero();
  const auto v = verify_bounds(linear_code(f, {{one, zero, one, zero}, {zero, one, zero, one}}));
  const auto it = std::find_if(v.bounds.begin(), v.bounds.end(),
                               [](const BoundReport& b) { return b.name == "strong_half_singleton_doubled"; });
  ASSERT_NE(it, v.bounds.end());
  EXPECT_EQ(it->value, 4);
}

TEST(VerifyBounds, RandomNonlinearCode) {
  Rng rng(77);
  const auto f = Field::create(2, 2);
  std::vector<Word> words;
  for (int i = 0; i < 6; ++i) words.push_back(random_word(f, 3, rng));
  const auto v = verify_bounds(make_vector_code(f, 3, words));
  EXPECT_TRUE(v.chain_holds);
  for (const auto& b : v.bounds)
    if (b.name.rfind("singleton", 0) == 0) EXPECT_EQ(b.satisfied, true) << b.name;
}
