#include <catch2/catch_amalgamated.hpp>
#include "helpers.hpp"
#include "psk/support.hpp"
#include "psk/planarity.hpp"
#include "psk/gen.hpp"
using namespace psk;
TEST_CASE("placeholder support") { REQUIRE(true); }
