#include <doctest.h>

#include "properties.hpp"

using properties::kInstances;

namespace {

void expect(const properties::Outcome& o) {
  INFO(o.summary());
  CHECK(o.instances >= kInstances);
  CHECK(o.failures == 0);
}

}  // namespace

TEST_CASE("ext routes agree") { expect(properties::ext_route_agreement(kInstances, 1000)); }
TEST_CASE("duality") { expect(properties::duality(kInstances, 2000)); }
TEST_CASE("euler identity") { expect(properties::euler_identity(kInstances, 3000)); }
TEST_CASE("krull-schmidt") { expect(properties::krull_schmidt(kInstances, 4000)); }
TEST_CASE("wakamatsu") { expect(properties::wakamatsu(kInstances, 5000)); }
TEST_CASE("extension minimality") { expect(properties::extension_minimality(kInstances, 6000)); }
TEST_CASE("minimal extension ext") { expect(properties::minimal_extension_ext(kInstances, 7000)); }
TEST_CASE("minimal components") { expect(properties::minimal_components(kInstances, 8000)); }
