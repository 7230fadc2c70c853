#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k4 {

// One machine word per vector. Dimensions are capped at 24: the binding
// constraint everywhere downstream is the 4^n pair scan, not storage.
using Word = std::uint32_t;
inline constexpr int kMaxDim = 24;

// Element of GF(2)^n. Bit i (least significant first) is the coefficient of
// generator i; bits at positions >= dim are always zero.
struct BitVec {
    Word bits = 0;
    int dim = 0;

    BitVec() = default;
    BitVec(Word b, int n);

    static BitVec zero(int n) { return BitVec(0, n); }
    static BitVec unit(int i, int n);

    // Bit-string form "0110...": character p is the coefficient of
    // generator p, so the leftmost character is generator 0.
    static BitVec parse(const std::string& s, int n);
    std::string to_string() const;

    int bit(int i) const { return static_cast<int>((bits >> i) & 1u); }
    bool is_zero() const { return bits == 0; }
    int popcount() const { return std::popcount(bits); }

    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend BitVec operator^(BitVec a, BitVec b);
};

// popcount(u AND v) mod 2; symmetric and bilinear.
int parity_dot(BitVec u, BitVec v);

// Rectangular matrix over GF(2): rows.size() rows, each of dimension cols.
struct BitMatrix {
    int cols = 0;
    std::vector<BitVec> rows;

    static BitMatrix from_rows(std::vector<BitVec> rows);
    static BitMatrix identity(int n);
    static BitMatrix zero(int rows, int cols);

    int row_count() const { return static_cast<int>(rows.size()); }
};

// Component k of the result is parity_dot(row k, v); result dim = row count.
BitVec mat_vec(const BitMatrix& m, BitVec v);

int rank(const BitMatrix& m);

// Basis of {v : mat_vec(m, v) = 0}; rank(m) + kernel size = cols.
std::vector<BitVec> kernel_basis(const BitMatrix& m);

// Some x with mat_vec(m, x) = y, or nullopt if the system is inconsistent.
std::optional<BitVec> solve(const BitMatrix& m, BitVec y);

}  // namespace k4
