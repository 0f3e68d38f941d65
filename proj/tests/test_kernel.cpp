#include <catch2/catch_amalgamated.hpp>
#include "helpers.hpp"
#include "psk/kernel.hpp"
#include "psk/gen.hpp"
using namespace psk;
TEST_CASE("placeholder kernel") { REQUIRE(true); }
