#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "klein4/gf2.hpp"

namespace k4 {

// Thrown on malformed or rejected ring input (bad tensor data, schema
// violations, inadmissible classes, caps exceeded). The CLI maps it to exit 2.
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A degree-2 class, stored as the linear functional it induces on degree 1:
// bit k of `dual` is the value on generator k. The identification of H^2 with
// Hom(H^1, Z/2) is the Poincare-duality pairing x -> (c -> (x cup c)[Y]); it
// is fixed once here and used by every module.
struct H2Class {
    BitVec dual;

    H2Class() = default;
    explicit H2Class(BitVec d) : dual(d) {}

    int dim() const { return dual.dim; }
    bool is_zero() const { return dual.is_zero(); }
    int eval(BitVec w) const { return parity_dot(dual, w); }
    std::string to_string() const { return dual.to_string(); }

    friend bool operator==(const H2Class&, const H2Class&) = default;
    friend H2Class operator^(H2Class a, H2Class b) { return H2Class(a.dual ^ b.dual); }
};

// The mod-2 cohomology ring of a closed oriented 3-manifold, encoded as the
// symmetric trilinear form u(a,b,c) = (a cup b cup c)[Y] on GF(2)^n. The form
// determines the whole ring; n = dim H^1(Y;Z/2).
//
// Storage is one n x n word-matrix slice per k: bit j of slice_row(k, i) is
// u(e_i, e_j, e_k). Values are immutable after construction.
class CupRing {
  public:
    CupRing() = default;

    // Canonical construction: triples must be sorted within (i <= j <= k),
    // strictly increasing as a list (so duplicates are rejected), and in
    // range. The tensor is the symmetrization of the given entries. In strict
    // mode a violation of the closed-3-manifold realizability condition
    // u(i,i,j) = u(j,j,i) is rejected.
    static CupRing from_triples(int dim, const std::vector<std::array<int, 3>>& triples,
                                bool strict = true);

    // Raw constructor with no symmetry or realizability validation; exists so
    // the verification suite can be pointed at corrupted tensors.
    static CupRing from_raw_slices(int dim, std::vector<Word> slices);

    int dim() const { return dim_; }

    // Basis tensor value u(e_i, e_j, e_k).
    int u(int i, int j, int k) const {
        return static_cast<int>((slices_[static_cast<size_t>(k) * dim_ + i] >> j) & 1u);
    }
    Word slice_row(int k, int i) const { return slices_[static_cast<size_t>(k) * dim_ + i]; }

    // Multilinear extension of the tensor.
    int eval_u(BitVec a, BitVec b, BitVec c) const;

    // a cup b as a functional on degree 1: component k is u(a, b, e_k).
    H2Class cup(BitVec a, BitVec b) const;

    // Cup square; linear in a over GF(2) since cross terms cancel in pairs.
    H2Class square(BitVec a) const;
    Word square_word(Word a) const;
    Word square_basis_word(int i) const { return square_basis_[static_cast<size_t>(i)]; }

    // Matrix of the squaring map (row k bit i = u(i,i,k)).
    BitMatrix squaring_matrix() const;

    // dim of the kernel of the squaring map (the Bockstein on degree 1).
    int k_invariant() const;

    // Basis of the image of the squaring map, as H2 classes.
    std::vector<H2Class> square_image_basis() const;

    bool is_square(const H2Class& x) const;
    // A root w with square(w) = x, if one exists.
    std::optional<BitVec> square_root(const H2Class& x) const;

    // Block sum: u vanishes on any triple mixing the two blocks.
    CupRing direct_sum(const CupRing& other) const;

    // u(i,i,j) = u(j,j,i) on all basis pairs; by multilinearity this is the
    // full realizability condition.
    bool postnikov_ok() const;

    // Full S3 symmetry over all basis triples. True for every ring built by
    // from_triples; meaningful on from_raw_slices input.
    bool symmetric_ok() const;

    // Canonical sorted list of multiset triples (i <= j <= k) with value 1.
    std::vector<std::array<int, 3>> triples() const;

    friend bool operator==(const CupRing&, const CupRing&) = default;

  private:
    int dim_ = 0;
    std::vector<Word> slices_;        // dim * dim words, slice-major
    std::vector<Word> square_basis_;  // square(e_i) as dual words

    void rebuild_square_basis();
    int pair_eval(Word a, Word b, int k) const;
};

// Exhaustive test over GL(n,2) for a linear isomorphism carrying one tensor
// to the other. Only for dim <= 4 (65536 candidate maps at n = 4).
bool brute_isomorphic(const CupRing& r1, const CupRing& r2);

}  // namespace k4
