#include <gtest/gtest.h>

#include "subcodes/error.hpp"
#include "subcodes/serialize.hpp"

using namespace subcodes;

namespace {

template <class T>
void expect_round_trip(const T& value) {
  const auto text = dump(artifact_to_json(Artifact{value}));
  const auto back = artifact_from_json(parse_json(text));
  ASSERT_TRUE(std::holds_alternative<T>(back));
  EXPECT_EQ(dump(artifact_to_json(back)), text);
}

ErrorCode parse_code(const std::string& text) {
  try {
    artifact_from_json(parse_json(text));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalConsistency;
}

}  // namespace

TEST(Json, BigIntegers) {
  EXPECT_EQ(big_to_json(BigInt(12)), Json(12));
  EXPECT_EQ(big_to_json(BigInt(1) << 53), Json(std::int64_t{1} << 53));
  EXPECT_EQ(big_to_json((BigInt(1) << 53) + 1), Json("9007199254740993"));
  EXPECT_EQ(big_from_json(Json("9007199254740993")), (BigInt(1) << 53) + 1);
  EXPECT_EQ(rational_to_json(BigRational(7, 9)), Json("7/9"));
  EXPECT_EQ(rational_to_json(BigRational(12288)), Json(12288));
}

TEST(Json, FieldObject) {
  const auto f = Field::create(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1});
  const auto j = to_json(f);
  EXPECT_EQ(j.dump(), R"({"q":2,"n":3,"modulus":[1,1,0,1]})");
  EXPECT_EQ(field_from_json(j), f);
  EXPECT_EQ(element_to_json(f, f.basis(1)).dump(), "[0,1,0]");
}

TEST(Json, RoundTrips) {
  const auto f = Field::create(2, 3);
  const auto rc = gabidulin_code(f, 1);
  expect_round_trip(rc);
  const auto sc = lift_rank_code(rc);
  expect_round_trip(sc);
  expect_round_trip(spread(2, 2, 4));
  expect_round_trip(span_code(spread(2, 2, 4), 3));
  expect_round_trip(linear_code(Field::create(3, 1), {{Field::create(3, 1).one(), Field::create(3, 1).scalar(2)}}));
  const auto ds = singer_difference_set(f);
  expect_round_trip(ds);
  expect_round_trip(evaluation_folded_code(f, ds.members));
  expect_round_trip(gabidulin_rect(Field::create(2, 2), Field::create(2, 3), 0));
  expect_round_trip(make_explicit_rank_code(f, {FqMatrix::identity(2, 3)}));
}

TEST(Json, ValuesSurviveRoundTrip) {
  const auto sc = spread(2, 2, 4);
  const auto back = subspace_code_from_json(to_json(sc));
  EXPECT_EQ(back.members, sc.members);
  EXPECT_EQ(back.provenance, sc.provenance);
  const auto vc = span_code(sc, 2);
  const auto vback = vector_code_from_json(to_json(vc));
  ASSERT_EQ(vback.size(), vc.size());
  for (std::size_t i = 0; i < vc.size(); ++i) EXPECT_EQ(vback.codewords[i].symbols, vc.codewords[i].symbols);
}

TEST(Json, RejectsInvalidInput) {
  EXPECT_EQ(parse_code("{"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"kind":"mystery"})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"kind":"subspace_code","q":2,"ambient":3,"declared_distance":0,
      "subspaces":[{"basis":[[1,1,0],[1,0,1]]}]})"),
            ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"kind":"vector_code","field":{"q":2,"n":3,"modulus":[1,0,0,1]},"length":1,
      "codewords":[[[1,0,0]]]})"),
            ErrorCode::ReducibleModulus);
  EXPECT_EQ(parse_code(R"({"kind":"vector_code","field":{"q":2,"n":2,"modulus":[1,1,1]},"length":1,
      "codewords":[[[1,0,0]]]})"),
            ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"kind":"difference_set","field":{"q":2,"n":3,"modulus":[1,1,0,1]},
      "members":[[1,0,0],[0,1,0]],"v":7,"k":2,"lambda":1})"),
            ErrorCode::ParseError);
}

TEST(Json, ReportsAndTables) {
  MetricReport r{"insdel", 4, 0, 3, 10};
  EXPECT_EQ(to_json(r).dump(), R"({"metric":"insdel","min":4,"witness_i":0,"witness_j":3,"pairs":10})");
  const auto dist = delsarte_rank_distribution(3, 2, 2);
  EXPECT_EQ(to_json(dist).dump(), R"({"counts":[1,0,49,14]})");
  EXPECT_EQ(rank_distribution_csv(dist), "rank,count\n0,1\n1,0\n2,49\n3,14\n");
  BoundReport b{"klo", {{"q", "2"}}, 3};
  b.compare(2);
  EXPECT_EQ(bounds_csv({b}), "bound,params,value,observed,satisfied\nklo,q=2,3,2,true\n");
}
