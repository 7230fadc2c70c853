#pragma once

#include <cstdint>
#include <random>

#include "klein4/cup_ring.hpp"

namespace k4 {

// Deterministic generator of realizable rings: random connected sums of
// unlink-surgery blocks, RP^3, Borromean surgeries, genus-1 fibered rings and
// branched double covers of random links. Every output comes from a geometric
// construction, so every output ring is the ring of some closed oriented
// 3-manifold.
class FamilyGen {
  public:
    explicit FamilyGen(std::uint64_t seed) : rng_(seed) {}

    // Random ring of dimension uniformly drawn from [0, max_dim].
    CupRing next_ring(int max_dim);

    // Random ring of exactly the given dimension.
    CupRing next_ring_exact(int dim);

    std::mt19937_64& rng() { return rng_; }

  private:
    std::mt19937_64 rng_;

    CupRing random_block(int max_block_dim);
};

}  // namespace k4
