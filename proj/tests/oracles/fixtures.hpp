#pragma once

// Shared arrangements for tests and the acceptance binary.

#include "centerkit/arrangement.hpp"
#include "centerkit/random.hpp"

#include <cstdint>
#include <vector>

namespace centerkit::fixture {

/// The first 3..5 of x, y, x + y - 1, x - 2y + 1/3, 3x + y - 2, one per multiplicity.
/// Three lines bound one triangle; four bound three faces; five bound six.
LineArrangement standard(std::vector<long> multiplicities);

/// Seeded random arrangement with `lines` lines.
LineArrangement random(std::uint64_t seed, std::size_t lines, long max_multiplicity, bool coprime);

}  // namespace centerkit::fixture
