#pragma once

#include <cstdint>
#include <vector>

#include "klein4/cup_ring.hpp"
#include "klein4/gf2.hpp"

namespace k4 {

// A flat Klein-four connection class: the unordered triple {a, b, a+b} of
// degree-1 classes summing to zero, stored by its canonical ordered pair
// (the lexicographically least of the six images under permuting the triple).
struct KleinTriple {
    BitVec a, b;

    static KleinTriple canonical(BitVec a, BitVec b);
    BitVec third() const { return a ^ b; }

    // Order of the stabilizer in the symmetric group permuting the triple:
    // 6 for {0,0,0}, 2 when an element repeats, 1 otherwise.
    int stabilizer_order() const;

    friend bool operator==(const KleinTriple&, const KleinTriple&) = default;
};

// Orbit counts refined by stabilizer order (1 / 2 / 6). v3 <= 1 always, with
// equality exactly on the class of the trivial triple.
struct OrbitTriple {
    std::uint64_t v1 = 0, v2 = 0, v3 = 0;

    std::uint64_t total() const { return v1 + v2 + v3; }
    friend bool operator==(const OrbitTriple&, const OrbitTriple&) = default;
};

// w2 of the triple {a, b, a+b}: square(a) + square(b) + cup(a,b), the
// expansion of a1a2 + a2a3 + a1a3 with a3 = a1 + a2. Invariant under all six
// reorderings of the triple.
H2Class w2_of(const CupRing& r, BitVec a, BitVec b);

// Histogram over all 4^n ordered pairs (a, b): entry x counts pairs with
// w2_of(a, b) = x (indexed by dual word). This is the hot loop: per outer a
// the cup map b -> cup(a,b) is linearized into n column words, then b runs in
// Gray-code order so each step is two xors and two table reads.
// threads <= 0 picks a default (parallel from dim 12 up). The result is
// independent of the partitioning.
std::vector<std::uint64_t> ordered_pair_counts(const CupRing& r, int threads = 1);

// Full table of orbit triples for every x in 2^n. Derivation per x:
//   v2 = #{a != 0 : square(a) = x},   v3 = [x = 0],
//   v1 = (N_ordered(x) - 3 v2 - v3) / 6   (exact; failure means a broken tensor).
std::vector<OrbitTriple> v_table(const CupRing& r, int threads = 1);

OrbitTriple v_orbits(const CupRing& r, const H2Class& x);

// Number of Klein-four classes with w2 = x.
std::uint64_t v_count(const CupRing& r, const H2Class& x);

// |V_Y| in dimension b: 2^(b-1) + (4^b + 2)/6, computed as
// (3*2^b + 4^b + 2)/6 in exact integers.
std::uint64_t total_count(int b);

// Product of stabilizer-refined counts; realizes the count of a connected
// sum: |v x u| at (x1 + x2) equals the plain count of the direct sum ring.
OrbitTriple vcheck_product(const OrbitTriple& v, const OrbitTriple& u);

// All canonical Klein-four classes in dimension n, ascending by (a, b).
std::vector<KleinTriple> klein_classes(int dim);

}  // namespace k4
