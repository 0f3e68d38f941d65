#include <catch2/catch_amalgamated.hpp>
#include "psk/io_json.hpp"
TEST_CASE("placeholder cli") { REQUIRE(true); }
