#pragma once

#include <cstdint>
#include <vector>

#include "klein4/builders.hpp"
#include "klein4/cup_ring.hpp"

namespace k4::oracle {

// Cross-validation code only. Nothing here shares counting logic with the
// main path: triples are enumerated one canonical representative at a time
// and their w2 is evaluated entry by entry from the raw tensor, with no orbit
// arithmetic and no slice/Gray-code machinery.

inline constexpr int kOracleMaxDim = 12;

// Direct count of canonical triples {a, b, a+b} with ab + bc + ac = x.
std::uint64_t brute_v_count(const CupRing& r, const H2Class& x);

// Histogram of the same, indexed by dual word.
std::vector<std::uint64_t> brute_v_table(const CupRing& r);

// Direct count of all canonical triples in dimension b.
std::uint64_t brute_total(int b);

// A target f-table row: the triple {a, b, a+b} over the cover basis, and the
// expected even-subset mask (bit i = component i+1).
struct FTableRow {
    Word a = 0, b = 0;
    unsigned subset_mask = 0;
};

// All symmetric off-diagonal mod-2 matrices on four components (64
// candidates) whose branched double cover reproduces every fixture row.
// An empty result means the fixture was transcribed inconsistently.
std::vector<LinkData> brute_lk_recovery(const std::vector<FTableRow>& fixture);

}  // namespace k4::oracle
