#include <doctest.h>

#include "klein4/builders.hpp"
#include "klein4/family.hpp"
#include "klein4/klein_count.hpp"
#include "klein4/oracle.hpp"

using namespace k4;
using namespace k4::oracle;

namespace {

// The known f-table of the L8n8 cover, used as recovery constraints.
std::vector<FTableRow> l8n8_fixture() {
    auto mask = [](std::initializer_list<int> comps) {
        unsigned m = 0;
        for (int c : comps) m |= 1u << (c - 1);
        return m;
    };
    return {
        {0, 0, 0},
        {0, 1, mask({2, 3})},
        {0, 2, mask({1, 4})},
        {0, 4, mask({1, 4})},
        {0, 3, mask({1, 2, 3, 4})},
        {0, 5, mask({1, 2, 3, 4})},
        {0, 6, 0},
        {0, 7, mask({2, 3})},
        {1, 2, mask({3, 4})},
        {1, 4, mask({2, 4})},
        {2, 4, 0},
        {1, 6, 0},
        {2, 5, mask({1, 3})},
        {3, 4, mask({1, 2})},
        {3, 5, 0},
    };
}

}  // namespace

TEST_CASE("brute_v_count fixtures") {
    CHECK(brute_v_count(borromean(2, 4, 4), H2Class(BitVec::zero(3))) == 4);
    CHECK(brute_v_count(free_ring(3), H2Class(BitVec::zero(3))) == 15);
    CHECK(brute_v_count(torus3(), H2Class(BitVec::unit(0, 3))) == 1);
    CHECK_THROWS_AS(brute_v_count(free_ring(13), H2Class(BitVec::zero(13))),
                    std::invalid_argument);
}

TEST_CASE("brute_total") {
    CHECK(brute_total(0) == 1);
    CHECK(brute_total(3) == 15);
    CHECK(brute_total(4) == 51);
    CHECK_THROWS_AS(brute_total(13), std::invalid_argument);
}

TEST_CASE("oracle equals the fast path on generated rings") {
    FamilyGen gen(28);
    for (int t = 0; t < 25; ++t) {
        const CupRing r = gen.next_ring(7);
        const auto brute = brute_v_table(r);
        const auto fast = v_table(r);
        for (Word x = 0; x < (Word(1) << r.dim()); ++x)
            CHECK(brute[x] == fast[x].total());
    }
}

TEST_CASE("linking-matrix recovery from the L8n8 table") {
    const auto matches = brute_lk_recovery(l8n8_fixture());
    REQUIRE(matches.size() == 1);
    CHECK(matches[0] == l8n8_link());
}

TEST_CASE("recovery rejects inconsistent tables") {
    // All-empty subsets on a table that still claims nonzero squares is
    // impossible: no matrix reproduces it.
    auto fixture = l8n8_fixture();
    for (auto& row : fixture)
        row.subset_mask = (row.a == 0 && row.b == 0) ? 0 : row.subset_mask;
    fixture[1].subset_mask = 0b1111;  // corrupt one diagonal row
    CHECK(brute_lk_recovery(fixture).empty());
}

TEST_CASE("recovery round-trips the unlink") {
    // Build the 4-component unlink table, recover, and expect the zero matrix
    // among the matches.
    const BranchedCover cover = branched_double_cover(
        LinkData::from_matrix({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
    std::vector<FTableRow> fixture;
    for (const auto& [t, subset] : f_table(cover))
        fixture.push_back({t.a.bits, t.b.bits, subset.mask});
    const auto matches = brute_lk_recovery(fixture);
    bool has_zero = false;
    for (const LinkData& link : matches) {
        bool zero = true;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (link.linking(i, j)) zero = false;
        if (zero) has_zero = true;
    }
    CHECK(has_zero);
}
