#pragma once

// Deterministic randomness: every seeded choice in the toolkit goes through
// these generators so reports are byte-identical across platforms.

#include <cstdint>
#include <vector>

#include "bal/geom.hpp"

namespace bal {

struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller.
  double normal();
};

// Van der Corput radical inverse in the given base.
double radical_inverse(uint64_t index, uint32_t base);

// Scrambled Halton points inside `region`: Halton points in the bounding
// box with a seeded Cranley-Patterson rotation, kept when they land in the
// region. Deterministic for a fixed (region, count, seed).
std::vector<Point> halton_in_set(const SetExpr& region, int count, uint64_t seed);

}  // namespace bal
