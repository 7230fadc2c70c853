#include <doctest.h>

#include "klein4/builders.hpp"
#include "klein4/verify.hpp"

using namespace k4;

TEST_CASE("verify_ring passes on builder rings") {
    for (const CupRing& r : {torus3(), borromean(2, 2, 4), rp3(), free_ring(4),
                             branched_double_cover(l8n8_link()).ring})
        CHECK(verify_ring(r).ok());
}

TEST_CASE("verify_ring flags a symmetry-corrupted tensor") {
    // Raw slices with u(0,1,0) = 1 but u(1,0,0) = 0: not a trilinear form's
    // symmetric tensor at all.
    std::vector<Word> slices(4, 0);
    slices[0] = 0b10;  // slice 0, row 0, bit 1
    const CupRing bad = CupRing::from_raw_slices(2, std::move(slices));
    const VerifyResult result = verify_ring(bad);
    REQUIRE_FALSE(result.ok());
    CHECK(result.failure->check == "tensor_symmetry");
    CHECK(result.failure->reproducer.contains("ring"));
}

TEST_CASE("verify_ring flags a non-realizable tensor") {
    const CupRing bad = CupRing::from_triples(2, {{{0, 0, 1}}}, /*strict=*/false);
    const VerifyResult result = verify_ring(bad);
    REQUIRE_FALSE(result.ok());
    CHECK(result.failure->check == "realizability_condition");
}

TEST_CASE("verify_family runs clean and reports its counts") {
    const VerifyResult result = verify_family(5, 30, 8, nullptr);
    CHECK(result.ok());
    CHECK(result.rings_checked == 30);
    CHECK(result.sum_pairs_checked > 0);
}
