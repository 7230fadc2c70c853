#include <doctest.h>

#include "klein4/builders.hpp"
#include "klein4/casson.hpp"
#include "klein4/family.hpp"
#include "klein4/klein_count.hpp"

using namespace k4;

namespace {

BitVec e(int i, int n) { return BitVec::unit(i, n); }

}  // namespace

TEST_CASE("admissible_mod2") {
    const CupRing r224 = borromean(2, 2, 4);
    CHECK(admissible_mod2(r224, r224.cup(e(0, 3), e(1, 3))));
    CHECK_FALSE(admissible_mod2(r224, H2Class(BitVec::zero(3))));
    const CupRing f3 = free_ring(3);
    for (Word x = 1; x < 8; ++x) CHECK(admissible_mod2(f3, H2Class(BitVec(x, 3))));
}

TEST_CASE("count_admissible") {
    CHECK(count_admissible(borromean(2, 2, 4)) == 4);
    CHECK(count_admissible(rp3()) == 0);
    for (int n = 0; n <= 8; ++n)
        CHECK(count_admissible(free_ring(n)) == (std::uint64_t(1) << n) - 1);

    // Against direct enumeration on a generated family.
    FamilyGen gen(23);
    for (int t = 0; t < 20; ++t) {
        const CupRing r = gen.next_ring(8);
        std::uint64_t enumerated = 0;
        for (Word x = 0; x < (Word(1) << r.dim()); ++x)
            if (!r.is_square(H2Class(BitVec(x, r.dim())))) ++enumerated;
        CHECK(enumerated == count_admissible(r));
    }
}

TEST_CASE("casson_report on the L8n8 cover") {
    const CupRing cover = branched_double_cover(l8n8_link()).ring;
    for (Word x = 0; x < 8; ++x) {
        const H2Class xc(BitVec(x, 3));
        if (cover.is_square(xc)) continue;
        const CassonReport rep = casson_report(cover, xc);
        CHECK(rep.b == 3);
        CHECK(rep.k == 1);
        CHECK(rep.v == 1);
        CHECK(rep.parity == 1);
        CHECK(rep.divisibility_exponent == 0);
        CHECK(rep.applicability == CassonCase::congruence_b_ge_3);
    }
}

TEST_CASE("casson_report for small b") {
    // dim 2: evenness assertion, v = 0 here.
    const CupRing f2 = free_ring(2);
    const CassonReport rep2 = casson_report(f2, H2Class(BitVec::parse("01", 2)));
    CHECK(rep2.applicability == CassonCase::evenness_b_eq_2);
    CHECK(rep2.v == 0);
    CHECK(rep2.parity == 0);

    // dim 1: v forced to zero.
    const CupRing f1 = free_ring(1);
    const CassonReport rep1 = casson_report(f1, H2Class(BitVec::parse("1", 1)));
    CHECK(rep1.applicability == CassonCase::vanishing_b_eq_1);
    CHECK(rep1.v == 0);

    // Divisibility exponent grows with b.
    const CupRing big = borromean(2, 2, 4).direct_sum(free_ring(2));
    const CassonReport rep5 =
        casson_report(big, H2Class(BitVec::parse("00100", 5)));
    CHECK(rep5.b == 5);
    CHECK(rep5.divisibility_exponent == 2);
}

TEST_CASE("casson_report rejects cup-squares") {
    const CupRing r224 = borromean(2, 2, 4);
    CHECK_THROWS_WITH_AS(casson_report(r224, r224.square(e(0, 3))),
                         doctest::Contains("cup-square"), SpecError);
}

TEST_CASE("casson_report rejects non-realizable rings that break the forced parities") {
    // u(0,0,1) = 1 alone fails u(i,i,j) = u(j,j,i); with validation off it
    // produces a dim-2 tensor whose v at one non-square is odd.
    const CupRing bad = CupRing::from_triples(2, {{{0, 0, 1}}}, /*strict=*/false);
    const H2Class odd_class(BitVec::parse("11", 2));
    REQUIRE_FALSE(bad.is_square(odd_class));
    CHECK(v_count(bad, odd_class) == 1);
    CHECK_THROWS_AS(casson_report(bad, odd_class), SpecError);
}

TEST_CASE("parity laws on generated realizable rings") {
    FamilyGen gen(24);
    for (int t = 0; t < 60; ++t) {
        const CupRing r = gen.next_ring(8);
        const int k = r.k_invariant();
        const auto table = v_table(r);
        std::optional<int> parity;
        for (Word x = 0; x < (Word(1) << r.dim()); ++x) {
            const H2Class xc(BitVec(x, r.dim()));
            if (r.is_square(xc)) continue;
            const std::uint64_t v = table[x].total();
            if (k >= 1) {
                if (parity) CHECK(*parity == static_cast<int>(v & 1));
                parity = static_cast<int>(v & 1);
            }
            if (k >= 4) CHECK((v & 1) == 0);
            if (r.dim() == 2) CHECK((v & 1) == 0);
            if (r.dim() == 1) CHECK(v == 0);
        }
    }
}

TEST_CASE("grading_shift") {
    const CupRing t3 = torus3();
    CHECK(grading_shift(t3, H2Class(e(2, 3)), BitVec::zero(3)) == 0);
    CHECK(grading_shift(t3, H2Class(e(2, 3)), e(0, 3)) == 0);
    CHECK(grading_shift(t3, H2Class(e(0, 3)), e(0, 3)) == 4);

    // A generator with nonzero cube shifts by 4 when x vanishes on it.
    const CupRing r = rp3();
    CHECK(grading_shift(r, H2Class(BitVec::zero(1)), e(0, 1)) == 4);
}
