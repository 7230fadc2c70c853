#pragma once

#include <cstdint>
#include <string>

#include "klein4/cup_ring.hpp"

namespace k4 {

// Which statement the report carries, by b = dim H^1(Y;Z/2):
//   b >= 3: 2^(3-b) * lambda(Y,E) = v_Y(E) (mod 2), lambda divisible by 2^(b-3)
//   b  = 2: the congruence forces v_Y(E) even; no information about lambda
//   b  = 1: v_Y(E) = 0; no information about lambda
enum class CassonCase { congruence_b_ge_3, evenness_b_eq_2, vanishing_b_eq_1 };

const char* to_string(CassonCase c);

// Constraints on the Casson invariant lambda(Y,E) of a bundle with w2 = x.
// lambda itself is gauge theory and is never computed here; the report only
// states divisibility and parity.
struct CassonReport {
    int b = 0;
    int k = 0;
    H2Class x;
    std::uint64_t v = 0;
    int divisibility_exponent = 0;  // max(b - 3, 0)
    int parity = 0;                 // v mod 2
    CassonCase applicability = CassonCase::congruence_b_ge_3;
    std::string statement;
};

// x admits a bundle of the generalized admissible kind iff it is not a
// cup-square. (The stronger no-torsion-lift condition is not decidable from
// the mod-2 ring alone; reports are labelled for the weaker class.)
bool admissible_mod2(const CupRing& r, const H2Class& x);

// (2^k - 1) * 2^(b-k): the number of classes that are not cup-squares.
std::uint64_t count_admissible(const CupRing& r);

// Throws SpecError when x is a cup-square (no admissible bundle), and when a
// b = 1 or b = 2 ring fails its forced assertion (possible only for tensors
// accepted with validation off).
CassonReport casson_report(const CupRing& r, const H2Class& x);

// Mod-8 Floer grading shift of the action of w on a connection class:
// 4 * (x(w) + w^3) mod 8, always 0 or 4.
int grading_shift(const CupRing& r, const H2Class& x, BitVec w);

}  // namespace k4
