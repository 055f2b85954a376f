#include <catch2/catch_amalgamated.hpp>

#include "property_suite.hpp"

TEST_CASE("randomized projective-code property suite", "[properties]") {
  auto stats = test::run_property_suite(200, 0x5eedull);
  INFO(stats.failure);
  CHECK(stats.ok());
  CHECK(stats.codes >= 200);
  CHECK(stats.words_checked > 0);
}

TEST_CASE("field layer suite over every tower with q^2 <= 81", "[properties]") {
  auto failure = test::run_field_layer_suite();
  INFO(failure);
  CHECK(failure.empty());
}
