#include <doctest.h>

#include <random>

#include "casimir/errors.hpp"
#include "casimir/report.hpp"

using namespace casimir;

TEST_SUITE("report") {

TEST_CASE("records carry consistent derived fields") {
  const auto adjoint = make_record(StableRep({1}, {1}), 2, BigInt(24));
  CHECK(adjoint.balanced);
  REQUIRE(adjoint.universal.has_value());
  CHECK(*adjoint.universal == UniversalCoeffs{0, 0, 2});
  CHECK(to_text(adjoint) ==
        "[1 | 1 / 1] mult=2 dim=24 C=2*N balanced=true areas=1/1 universal=(x=0, y=0, z=2)");
  CHECK(to_csv(adjoint) == "1,1,1,2,24,2,0,0,true,1,1,0,0,2");

  const auto fundamental = make_record(StableRep({1}, {0}), 1, std::nullopt);
  CHECK_FALSE(fundamental.balanced);
  CHECK_FALSE(fundamental.universal.has_value());
  CHECK(to_csv(fundamental) == "1,1,0,1,,1,0,-1,false,1,0,,,");
  CHECK(to_json(fundamental).dump() ==
        R"({"k":1,"head":[1],"tail":[0],"mult":1,"dim":null,"poly":{"a1":"1","a0":"0","am1":"-1"},)"
        R"("balanced":false,"areas":[1,0],"universal":null})");
}

TEST_CASE("JSON round trip is the identity (property)") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> kd(1, 4);
  std::uniform_int_distribution<Label> ld(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = kd(rng);
    std::vector<Label> head(k), tail(k);
    for (auto& v : head) v = ld(rng);
    for (auto& v : tail) v = ld(rng);
    std::optional<BigInt> dim;
    if (trial % 2 == 0) dim = BigInt("123456789012345678901234567890") + trial;
    const auto record = make_record(StableRep(head, tail).canonical(), 1 + trial, dim);
    const Json json = to_json(record);
    const auto parsed = record_from_json(Json::parse(json.dump()));
    CHECK(parsed == record);
    CHECK(to_json(parsed).dump() == json.dump());
  }
}

TEST_CASE("malformed JSON records are rejected") {
  Json json = to_json(make_record(StableRep({1}, {1}), 1, BigInt(24)));
  Json wrong_k = json;
  wrong_k["k"] = 2;
  CHECK_THROWS_AS(record_from_json(wrong_k), InvalidArgument);
  Json missing = json;
  missing.erase("poly");
  CHECK_THROWS_AS(record_from_json(missing), InvalidArgument);
  Json inconsistent = json;
  inconsistent["universal"] = nullptr;
  CHECK_THROWS_AS(record_from_json(inconsistent), InvalidArgument);
  Json bad_rational = json;
  bad_rational["poly"]["a1"] = "two";
  CHECK_THROWS_AS(record_from_json(bad_rational), InvalidArgument);
}

TEST_CASE("batch line parsing") {
  CHECK(parse_batch_line("1 | 1 / 1") == StableRep({1}, {1}));
  CHECK(parse_batch_line("  2 |0 1/ 2 0  # comment") == StableRep({0, 1}, {2, 0}));
  CHECK_FALSE(parse_batch_line("").has_value());
  CHECK_FALSE(parse_batch_line("   # only a comment").has_value());
  CHECK_THROWS_AS(parse_batch_line("2 | 0 1 / 1"), InvalidArgument);
  CHECK_THROWS_AS(parse_batch_line("1 1 / 1"), InvalidArgument);
  CHECK_THROWS_AS(parse_batch_line("1 | 1 1"), InvalidArgument);
  CHECK_THROWS_AS(parse_batch_line("1 | x / 1"), InvalidArgument);
  CHECK_THROWS_AS(parse_batch_line("1 | -1 / 1"), InvalidArgument);
  CHECK_THROWS_AS(parse_batch_line("0 | / "), InvalidArgument);
}

}
