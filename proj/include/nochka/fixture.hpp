#pragma once

// Concrete realization of the twelve-curve arrangement in P^2: three conics
// through a point A1, two triples of lines joining points B_i on the conics to
// A2 and A3, and three lines through A4.

#include <cstdint>

#include "nochka/geometry.hpp"

namespace nochka {

struct IntroFixture {
  Arrangement arrangement;
  int attempts = 0;
  PositionReport position;
};

/// Random small-integer data from the seed; each candidate is checked for
/// 3-subgeneral position (condition (i) and the proxy for (ii)) and redrawn on
/// failure. Throws ResourceError after max_attempts.
IntroFixture generate_intro_fixture(std::uint64_t seed, int max_attempts = 100);

}  // namespace nochka
