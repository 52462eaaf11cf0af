#pragma once

#include <cstdint>

#include "hkv/report.hpp"

namespace props {

// Seeded randomized property suites; each returns one check per property.
hkv::Report ring_properties(std::uint64_t seed);
hkv::Report correspondence_properties(std::uint64_t seed);
hkv::Report exterior_properties(std::uint64_t seed);

}  // namespace props
