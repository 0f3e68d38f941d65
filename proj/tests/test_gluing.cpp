#include <catch2/catch_amalgamated.hpp>
#include "helpers.hpp"
#include "psk/gluing.hpp"
#include "psk/gen.hpp"
using namespace psk;
TEST_CASE("placeholder gluing") { REQUIRE(true); }
