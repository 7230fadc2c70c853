#include <doctest.h>

#include <random>

#include "klein4/gf2.hpp"

using namespace k4;

TEST_CASE("parity_dot basics") {
    // 101 & 100 -> one overlap
    CHECK(parity_dot(BitVec(0b101, 3), BitVec(0b001, 3)) == 1);
    CHECK(parity_dot(BitVec(0b101, 3), BitVec(0, 3)) == 0);
    // 111 & 011 -> two overlaps
    CHECK(parity_dot(BitVec(0b111, 3), BitVec(0b011, 3)) == 0);
    CHECK_THROWS_AS(parity_dot(BitVec(1, 2), BitVec(1, 3)), std::invalid_argument);
}

TEST_CASE("parity_dot is symmetric and bilinear") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Word mask = (Word(1) << n) - 1;
        const BitVec u(static_cast<Word>(rng()) & mask, n);
        const BitVec v(static_cast<Word>(rng()) & mask, n);
        const BitVec w(static_cast<Word>(rng()) & mask, n);
        CHECK(parity_dot(u, v) == parity_dot(v, u));
        CHECK(parity_dot(u ^ w, v) == (parity_dot(u, v) ^ parity_dot(w, v)));
    }
}

TEST_CASE("mat_vec") {
    const BitMatrix id3 = BitMatrix::identity(3);
    const BitVec v(0b101, 3);
    CHECK(mat_vec(id3, v) == v);
    CHECK(mat_vec(BitMatrix::zero(3, 3), v) == BitVec::zero(3));

    // rows [11, 00]: both components are even sums on input 11
    const BitMatrix m = BitMatrix::from_rows({BitVec(0b11, 2), BitVec(0, 2)});
    CHECK(mat_vec(m, BitVec(0b11, 2)) == BitVec::zero(2));
    CHECK_THROWS_AS(mat_vec(m, BitVec(0, 3)), std::invalid_argument);
}

TEST_CASE("kernel_basis") {
    CHECK(kernel_basis(BitMatrix::identity(3)).empty());
    CHECK(kernel_basis(BitMatrix::zero(3, 3)).size() == 3);

    const BitMatrix m = BitMatrix::from_rows({BitVec(0b11, 2), BitVec(0, 2)});
    const auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == BitVec(0b11, 2));
}

TEST_CASE("rank + kernel dimension = n on random matrices") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const int rows = 1 + static_cast<int>(rng() % 10);
        const Word mask = (Word(1) << n) - 1;
        std::vector<BitVec> rv;
        for (int i = 0; i < rows; ++i) rv.push_back(BitVec(static_cast<Word>(rng()) & mask, n));
        const BitMatrix m = BitMatrix::from_rows(rv);
        const auto basis = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(basis.size()) == n);
        for (const BitVec& v : basis) CHECK(mat_vec(m, v) == BitVec::zero(rows));
    }
}

TEST_CASE("solve basics") {
    const BitMatrix id3 = BitMatrix::identity(3);
    const BitVec y(0b110, 3);
    CHECK(solve(id3, y) == y);
    CHECK_FALSE(solve(BitMatrix::zero(3, 3), y).has_value());
    CHECK(solve(BitMatrix::zero(3, 3), BitVec::zero(3)) == BitVec::zero(3));
}

TEST_CASE("solve agrees with exhaustive search") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const int rows = 1 + static_cast<int>(rng() % 6);
        const Word mask = (Word(1) << n) - 1;
        std::vector<BitVec> rv;
        for (int i = 0; i < rows; ++i) rv.push_back(BitVec(static_cast<Word>(rng()) & mask, n));
        const BitMatrix m = BitMatrix::from_rows(rv);
        const BitVec y(static_cast<Word>(rng()) & ((Word(1) << rows) - 1), rows);

        bool any = false;
        for (Word x = 0; x < (Word(1) << n); ++x)
            if (mat_vec(m, BitVec(x, n)) == y) any = true;

        const auto sol = solve(m, y);
        CHECK(sol.has_value() == any);
        if (sol) CHECK(mat_vec(m, *sol) == y);
    }
}

TEST_CASE("bit-string parsing and printing") {
    CHECK(BitVec::parse("011", 3) == BitVec(0b110, 3));
    CHECK(BitVec(0b110, 3).to_string() == "011");
    CHECK(BitVec::parse("", 0) == BitVec::zero(0));
    CHECK_THROWS_AS(BitVec::parse("01", 3), std::invalid_argument);
    CHECK_THROWS_AS(BitVec::parse("02", 2), std::invalid_argument);
    CHECK_THROWS_AS(BitVec(0b100, 2), std::invalid_argument);
    CHECK_THROWS_AS(BitVec(0, 25), std::invalid_argument);
}
