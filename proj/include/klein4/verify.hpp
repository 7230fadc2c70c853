#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "klein4/cup_ring.hpp"

namespace k4 {

// First failing check, with enough context to replay it.
struct VerifyFailure {
    std::string check;
    nlohmann::json reproducer;
};

struct VerifyResult {
    std::optional<VerifyFailure> failure;
    int rings_checked = 0;
    int sum_pairs_checked = 0;

    bool ok() const { return !failure.has_value(); }
};

// Structural invariants of a single ring: tensor symmetry, realizability
// condition, linearity of squaring against cup(a,a), orbit-count identities
// over the full table, the square-root-count dichotomy, the admissible-class
// count against its closed formula, and (up to the oracle cap) equality of
// the fast counts with the brute-force enumeration.
VerifyResult verify_ring(const CupRing& r);

// verify_ring over a seeded family of generated rings, plus the cross-ring
// laws: the connected-sum product formula checked against direct-sum counts
// for all pairs of classes, stability of counts under summing with RP^3, and
// the parity laws (constant parity across non-squares when k >= 1, even when
// k >= 4, even when dim = 2, zero when dim = 1).
VerifyResult verify_family(std::uint64_t seed, int ring_count, int max_dim,
                           std::ostream* progress = nullptr);

}  // namespace k4
