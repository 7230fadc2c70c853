#pragma once

#include <string>
#include <utility>
#include <vector>

#include "klein4/cup_ring.hpp"
#include "klein4/klein_count.hpp"

namespace k4 {

// Zero form on m generators: integer-framed surgery on an m-component unlink.
CupRing free_ring(int m);

// Real projective 3-space: dim 1, u(0,0,0) = 1.
CupRing rp3();

// Left fold of direct sums; the empty sum is the 3-sphere ring (dim 0).
CupRing connect_sum(const std::vector<CupRing>& parts);

// Surgery on the Borromean rings with framings f1, f2, f3, each one of
//   0 : framing 0            (infinite-order generator)
//   2 : framing = 2 mod 4
//   4 : framing = 0 mod 4, nonzero
// The ring is the symmetrized triple u(0,1,2) = 1 plus u(i,i,i) = 1 exactly
// when f_i = 2 mod 4. Equivalently: the dual generator squares to the product
// of the other two generators when f_i = 2, and to zero otherwise.
CupRing borromean(int f1, int f2, int f3);

// The 3-torus ring: borromean(0, 0, 0).
CupRing torus3();

// Seifert invariants over an orientable base orbifold of genus g.
struct SeifertData {
    int g = 0;
    int b = 0;
    std::vector<std::pair<int, int>> cone;  // (alpha_i >= 1, beta_i)
};

// 1 exactly when g = 1, all alpha_i odd, and b + sum(beta_i) even: the
// fibered spaces whose v-count at a non-square class is odd.
int seifert_parity(const SeifertData& s);

// The two genus-1 rings: basis a, b, c with a^2 = b^2 = 0 and nonzero
// products ab, bc, ac; either c^2 = 0 (the 3-torus tensor) or c^2 = ab.
// Which divisibility conditions on the beta_i pick the variant is not decided
// here; the caller chooses.
CupRing seifert_g1_ring(bool c_square_is_ab);

// Mod-2 linking data of an n-component link. Only off-diagonal entries are
// meaningful; the matrix must be symmetric.
struct LinkData {
    int n = 0;
    std::vector<Word> lk;  // bit j of lk[i] = lk(L_i, L_j) mod 2, diagonal zero

    static LinkData from_matrix(const std::vector<std::vector<int>>& m);
    int linking(int i, int j) const {
        return static_cast<int>((lk[static_cast<size_t>(i)] >> j) & 1u);
    }
    friend bool operator==(const LinkData&, const LinkData&) = default;
};

// Subset of the link components {1, ..., n} of even cardinality; these label
// the mod-2 first homology classes of the branched double cover. Bit i-1 of
// the mask = component i.
struct EvenSubset {
    unsigned mask = 0;

    std::vector<int> components() const;  // 1-indexed, ascending
    std::string to_string() const;        // "{2,3}", "{}" when empty
    friend bool operator==(const EvenSubset&, const EvenSubset&) = default;
};

// The double cover of S^3 branched over the link, presented on the basis
// a_1..a_{n-1} (the dual classes of the lifted Seifert surfaces); the last
// class is determined by a_1 + ... + a_n = 0.
struct BranchedCover {
    CupRing ring;  // dim n - 1
    LinkData link;

    int components() const { return link.n; }
};

// Ring of the branched double cover from the three-case triple-product rule:
//   u(a_i, a_i, a_i) = sum over l != i of lk(i, l)
//   u(a_i, a_i, a_k) = lk(i, k)          (i != k)
//   u(a_i, a_j, a_k) = 0                 (distinct)
// The values extended to a_n by the relation agree with the same rule.
BranchedCover branched_double_cover(const LinkData& link);

// Poincare dual of a degree-2 class of the cover as an even subset:
// S = {i < n : phi(a_i) = 1}, with component n adjoined to make |S| even.
EvenSubset pd_to_subset(const BranchedCover& cover, const H2Class& phi);

// One row per Klein-four class of the cover: the even subset dual to its w2.
std::vector<std::pair<KleinTriple, EvenSubset>> f_table(const BranchedCover& cover);

// The link L8n8, components 1..4: the four-component link with determinant
// zero whose branched double cover has odd v-count on every non-square class.
// The matrix is pinned by recovering it from the cover's f-table (see the
// oracle's linking-matrix recovery); lk12 = lk13 = lk24 = lk34 = 1.
LinkData l8n8_link();

}  // namespace k4
