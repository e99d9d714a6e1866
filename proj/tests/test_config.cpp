#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "capt/config.hpp"

using namespace capt;

TEST_CASE("the configuration space has 108 members") {
  auto configs = enumerate_configs();
  REQUIRE(configs.size() == 108);
  REQUIRE(kConfigCount == 108);
  std::set<std::string> ids;
  for (const auto& c : configs) ids.insert(config_id(c));
  CHECK(ids.size() == 108);
  CHECK(config_id(configs.front()) == "0-0-0-0");
  CHECK(config_id(configs.back()) == "2-2-3-2");
  CHECK(configs.front().is_baseline());
}

TEST_CASE("config ids round-trip") {
  for (const auto& c : enumerate_configs())
    CHECK(parse_config_id(config_id(c)) == c);
}

TEST_CASE("out-of-range options are rejected") {
  CHECK_THROWS_AS(parse_config_id("3-0-0-0"), UsageError);
  CHECK_THROWS_AS(parse_config_id("0-3-0-0"), UsageError);
  CHECK_THROWS_AS(parse_config_id("0-0-4-0"), UsageError);
  CHECK_THROWS_AS(parse_config_id("0-0-0-3"), UsageError);
  CHECK_THROWS_AS(validate_config(CaptConfig{0, 0, -1, 0}), UsageError);
}

TEST_CASE("malformed ids are rejected") {
  CHECK_THROWS_AS(parse_config_id(""), UsageError);
  CHECK_THROWS_AS(parse_config_id("0-0-0"), UsageError);
  CHECK_THROWS_AS(parse_config_id("0.0.0.0"), UsageError);
  CHECK_THROWS_AS(parse_config_id("a-b-c-d"), UsageError);
  CHECK_THROWS_AS(parse_config_id("00-0-0-0"), UsageError);
}
