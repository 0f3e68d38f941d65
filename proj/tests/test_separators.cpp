#include <catch2/catch_amalgamated.hpp>
#include "helpers.hpp"
#include "psk/separators.hpp"
#include "psk/gen.hpp"
using namespace psk;
TEST_CASE("placeholder separators") { REQUIRE(true); }
