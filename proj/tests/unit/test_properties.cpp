#include <doctest.h>

#include "properties.hpp"

namespace {
void require_green(const hkv::Report& r) {
  for (const auto& c : r.checks()) {
    INFO(c.id << ": computed " << c.computed << ", expected " << c.expected);
    CHECK(c.status == hkv::Status::Pass);
  }
}
}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("ring") { require_green(props::ring_properties(1)); }
  TEST_CASE("correspondences") { require_green(props::correspondence_properties(1)); }
  TEST_CASE("exterior algebra") { require_green(props::exterior_properties(1)); }
  TEST_CASE("other seeds") {
    require_green(props::ring_properties(77));
    require_green(props::exterior_properties(77));
  }
}
