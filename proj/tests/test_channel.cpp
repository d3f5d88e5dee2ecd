#include <gtest/gtest.h>

#include "oracle.hpp"
#include "subcodes/channel.hpp"
#include "subcodes/derived_codes.hpp"
#include "subcodes/error.hpp"
#include "subcodes/verify.hpp"

using namespace subcodes;

namespace {

VectorCode spread_all_vectors() { return all_vectors_code(spread(2, 2, 4), 3); }

std::vector<std::uint64_t> indices(const std::vector<FieldElement>& w) {
  std::vector<std::uint64_t> out;
  for (auto s : w) out.push_back(s.index);
  return out;
}

}  // namespace

TEST(Rng, BelowIsDeterministicAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.below(7);
    EXPECT_LT(x, 7u);
    EXPECT_EQ(x, b.below(7));
  }
  Rng c(1);
  std::vector<int> hist(3, 0);
  for (int i = 0; i < 30000; ++i) ++hist[c.below(3)];
  for (int h : hist) EXPECT_NEAR(h, 10000, 400);
}

TEST(Channel, IdentityAndLengths) {
  const auto f = Field::create(2, 3);
  Rng r(3);
  const auto w = random_word(f, 6, r);
  EXPECT_EQ(apply_channel(w, {0, 0, 9}).symbols, w.symbols);
  const auto del = apply_channel(w, {0, 1, 9});
  EXPECT_EQ(del.size(), 5u);
  EXPECT_LE(insdel_distance(w, del), 1u);
  const auto mixed = apply_channel(w, {3, 2, 9});
  EXPECT_EQ(mixed.size(), 7u);
  EXPECT_EQ(apply_channel(w, {3, 2, 42}).symbols, apply_channel(w, {3, 2, 42}).symbols);
  try {
    apply_channel(w, {0, 7, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooManyDeletions);
  }
}

TEST(Channel, DistanceBoundedByEdits) {
  const auto f = Field::create(2, 2);
  Rng r(8);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto w = random_word(f, 1 + r.below(6), r);
    const std::size_t ins = r.below(3), del = r.below(w.size() + 1);
    const auto out = apply_channel(w, {ins, del, seed});
    ASSERT_LE(insdel_distance(w, out), ins + del);
    ASSERT_EQ(w.size() + out.size() - 2 * oracle::lcs(indices(w.symbols), indices(out.symbols)),
              insdel_distance(w, out));
  }
}

TEST(Decoder, ExactAndAmbiguous) {
  const auto f = Field::create(2, 1);
  const auto a = f.zero(), b = f.one();
  const auto code = make_vector_code(f, 2, {{f, {a, b}}, {f, {b, a}}});
  const auto tie = decode_nearest(code, {f, {a}});
  EXPECT_TRUE(tie.ambiguous());
  EXPECT_EQ(tie.distance, 1u);
  const auto hit = decode_nearest(code, {f, {b, a}});
  ASSERT_FALSE(hit.ambiguous());
  EXPECT_EQ(*hit.index, 1u);
  EXPECT_EQ(hit.distance, 0u);
}

TEST(Decoder, MatchesReverseScan) {
  const auto code = spread_all_vectors();
  Rng r(4);
  for (int t = 0; t < 300; ++t) {
    const auto received = apply_channel(code.codewords[r.below(code.size())], {r.below(3), r.below(3), r.next()});
    const auto got = decode_nearest(code, received);
    std::size_t best = SIZE_MAX, count = 0, arg = 0;
    for (std::size_t i = code.size(); i-- > 0;) {
      const auto& cw = code.codewords[i].symbols;
      const auto d = cw.size() + received.size() - 2 * oracle::lcs(indices(cw), indices(received.symbols));
      if (d < best) {
        best = d;
        count = 1;
        arg = i;
      } else if (d == best) {
        ++count;
      }
    }
    ASSERT_EQ(got.distance, best);
    ASSERT_EQ(got.ambiguous(), count > 1);
    if (count == 1) ASSERT_EQ(*got.index, arg);
  }
}

TEST(Capability, Values) {
  EXPECT_EQ(correction_capability(4), 1u);
  EXPECT_EQ(correction_capability(2), 0u);
  EXPECT_EQ(correction_capability(6), 2u);
  EXPECT_EQ(correction_capability(5), 2u);
  EXPECT_EQ(correction_capability(1), 0u);
}

TEST(Trials, WithinCapabilityAlwaysSucceeds) {
  const auto code = spread_all_vectors();
  ASSERT_EQ(code_min_distance(code, {Metric::Kind::insdel, 1}).min, 6u);
  const ChannelSpec spec{1, 1, 100};
  const auto report = run_trials(code, spec, 500);
  EXPECT_EQ(report.successes, 500u);
  EXPECT_DOUBLE_EQ(report.success_rate(), 1.0);
  EXPECT_EQ(run_trials(code, {0, 0, 1}, 50).successes, 50u);
}

TEST(Trials, TranscriptFormatAndDeterminism) {
  const auto code = spread_all_vectors();
  const ChannelSpec spec{2, 3, 7};
  const auto a = run_trials(code, spec, 40), b = run_trials(code, spec, 40);
  EXPECT_EQ(a.transcript_csv(spec), b.transcript_csv(spec));
  const auto csv = a.transcript_csv(spec);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "trial,seed,ins,del,result");
  EXPECT_NE(csv.find("\n0,7,2,3,"), std::string::npos);
  EXPECT_EQ(a.successes + a.wrong + a.ambiguous, 40u);
  EXPECT_EQ(run_trials(code, spec, 0).transcript_csv(spec), "trial,seed,ins,del,result\n");
}
