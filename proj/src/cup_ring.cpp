#include "klein4/cup_ring.hpp"

#include <algorithm>

namespace k4 {

namespace {

void check_dim(const CupRing& r, BitVec v, const char* what) {
    if (v.dim != r.dim())
        throw std::invalid_argument(std::string(what) + ": vector dimension " +
                                    std::to_string(v.dim) + " does not match ring dimension " +
                                    std::to_string(r.dim()));
}

}  // namespace

CupRing CupRing::from_triples(int dim, const std::vector<std::array<int, 3>>& triples,
                              bool strict) {
    if (dim < 0 || dim > kMaxDim)
        throw SpecError("ring dimension " + std::to_string(dim) + " outside [0, " +
                        std::to_string(kMaxDim) + "]");
    CupRing r;
    r.dim_ = dim;
    r.slices_.assign(static_cast<size_t>(dim) * dim, 0);

    const std::array<int, 3>* prev = nullptr;
    for (const auto& t : triples) {
        if (!(0 <= t[0] && t[0] <= t[1] && t[1] <= t[2] && t[2] < dim))
            throw SpecError("tensor triple [" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                            "," + std::to_string(t[2]) +
                            "] must satisfy 0 <= i <= j <= k < dim");
        if (prev && !(*prev < t))
            throw SpecError("tensor triples must be strictly increasing (sorted, no duplicates)");
        prev = &t;
        // Symmetrize: set the entry for every arrangement of the multiset.
        const int i = t[0], j = t[1], k = t[2];
        const std::array<std::array<int, 3>, 6> perms = {{{i, j, k},
                                                          {i, k, j},
                                                          {j, i, k},
                                                          {j, k, i},
                                                          {k, i, j},
                                                          {k, j, i}}};
        for (const auto& p : perms)
            r.slices_[static_cast<size_t>(p[2]) * dim + p[0]] |= Word(1) << p[1];
    }
    r.rebuild_square_basis();

    if (strict && !r.postnikov_ok())
        throw SpecError(
            "tensor violates the realizability condition u(i,i,j) = u(j,j,i); "
            "no closed oriented 3-manifold has this ring (pass --no-strict to proceed)");
    return r;
}

CupRing CupRing::from_raw_slices(int dim, std::vector<Word> slices) {
    if (dim < 0 || dim > kMaxDim) throw SpecError("ring dimension out of range");
    if (slices.size() != static_cast<size_t>(dim) * dim)
        throw SpecError("raw slice data has wrong size");
    CupRing r;
    r.dim_ = dim;
    r.slices_ = std::move(slices);
    r.rebuild_square_basis();
    return r;
}

void CupRing::rebuild_square_basis() {
    square_basis_.assign(static_cast<size_t>(dim_), 0);
    for (int i = 0; i < dim_; ++i) {
        Word w = 0;
        for (int k = 0; k < dim_; ++k) w |= static_cast<Word>(u(i, i, k)) << k;
        square_basis_[static_cast<size_t>(i)] = w;
    }
}

int CupRing::pair_eval(Word a, Word b, int k) const {
    // u(a, b, e_k): xor the a-rows of slice k, then parity against b.
    Word acc = 0;
    while (a) {
        const int i = std::countr_zero(a);
        a &= a - 1;
        acc ^= slices_[static_cast<size_t>(k) * dim_ + i];
    }
    return std::popcount(acc & b) & 1;
}

int CupRing::eval_u(BitVec a, BitVec b, BitVec c) const {
    check_dim(*this, a, "eval_u");
    check_dim(*this, b, "eval_u");
    check_dim(*this, c, "eval_u");
    int acc = 0;
    Word rest = c.bits;
    while (rest) {
        const int k = std::countr_zero(rest);
        rest &= rest - 1;
        acc ^= pair_eval(a.bits, b.bits, k);
    }
    return acc;
}

H2Class CupRing::cup(BitVec a, BitVec b) const {
    check_dim(*this, a, "cup");
    check_dim(*this, b, "cup");
    Word w = 0;
    for (int k = 0; k < dim_; ++k) w |= static_cast<Word>(pair_eval(a.bits, b.bits, k)) << k;
    return H2Class(BitVec(w, dim_));
}

Word CupRing::square_word(Word a) const {
    Word w = 0;
    while (a) {
        const int i = std::countr_zero(a);
        a &= a - 1;
        w ^= square_basis_[static_cast<size_t>(i)];
    }
    return w;
}

H2Class CupRing::square(BitVec a) const {
    check_dim(*this, a, "square");
    return H2Class(BitVec(square_word(a.bits), dim_));
}

BitMatrix CupRing::squaring_matrix() const {
    std::vector<BitVec> rows;
    rows.reserve(static_cast<size_t>(dim_));
    for (int k = 0; k < dim_; ++k) {
        Word row = 0;
        for (int i = 0; i < dim_; ++i)
            row |= static_cast<Word>((square_basis_[static_cast<size_t>(i)] >> k) & 1u) << i;
        rows.push_back(BitVec(row, dim_));
    }
    return BitMatrix::from_rows(std::move(rows));
}

int CupRing::k_invariant() const {
    return dim_ - rank(squaring_matrix());
}

std::vector<H2Class> CupRing::square_image_basis() const {
    // Insert the generator squares into an xor-basis keyed by leading bit;
    // survivors of the reduction are an independent spanning set.
    std::array<Word, 32> by_lead{};
    std::vector<H2Class> basis;
    for (Word w : square_basis_) {
        Word v = w;
        while (v) {
            const int lead = 31 - std::countl_zero(v);
            if (by_lead[static_cast<size_t>(lead)] == 0) {
                by_lead[static_cast<size_t>(lead)] = v;
                basis.push_back(H2Class(BitVec(w, dim_)));
                break;
            }
            v ^= by_lead[static_cast<size_t>(lead)];
        }
    }
    return basis;
}

std::optional<BitVec> CupRing::square_root(const H2Class& x) const {
    if (x.dim() != dim_) throw std::invalid_argument("square_root: dimension mismatch");
    return solve(squaring_matrix(), x.dual);
}

bool CupRing::is_square(const H2Class& x) const {
    return square_root(x).has_value();
}

CupRing CupRing::direct_sum(const CupRing& other) const {
    const int n1 = dim_, n2 = other.dim_;
    if (n1 + n2 > kMaxDim)
        throw SpecError("direct sum dimension " + std::to_string(n1 + n2) + " exceeds cap " +
                        std::to_string(kMaxDim));
    CupRing r;
    r.dim_ = n1 + n2;
    r.slices_.assign(static_cast<size_t>(r.dim_) * r.dim_, 0);
    for (int k = 0; k < n1; ++k)
        for (int i = 0; i < n1; ++i)
            r.slices_[static_cast<size_t>(k) * r.dim_ + i] = slice_row(k, i);
    for (int k = 0; k < n2; ++k)
        for (int i = 0; i < n2; ++i)
            r.slices_[static_cast<size_t>(k + n1) * r.dim_ + (i + n1)] = other.slice_row(k, i)
                                                                         << n1;
    r.rebuild_square_basis();
    return r;
}

bool CupRing::postnikov_ok() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (u(i, i, j) != u(j, j, i)) return false;
    return true;
}

bool CupRing::symmetric_ok() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (u(i, j, k) != u(j, i, k) || u(i, j, k) != u(i, k, j)) return false;
    return true;
}

std::vector<std::array<int, 3>> CupRing::triples() const {
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            for (int k = j; k < dim_; ++k)
                if (u(i, j, k)) out.push_back({i, j, k});
    return out;
}

bool brute_isomorphic(const CupRing& r1, const CupRing& r2) {
    if (r1.dim() != r2.dim())
        throw std::invalid_argument("brute_isomorphic: rings have different dimensions");
    const int n = r1.dim();
    if (n > 4) throw std::invalid_argument("brute_isomorphic: dimension above 4 not supported");
    if (n == 0) return true;

    const Word N = Word(1) << n;
    // Candidate map T given by images of the generators; reject singular maps
    // by incremental span tracking, then compare transported tensors.
    std::vector<Word> img(static_cast<size_t>(n));
    std::vector<BitVec> img_vec(static_cast<size_t>(n));

    const std::uint64_t total = 1ull << (n * n);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < n; ++i) {
            img[static_cast<size_t>(i)] = static_cast<Word>(c & (N - 1));
            c >>= n;
        }
        // Invertibility: Gaussian elimination over the image words.
        std::vector<Word> rows(img);
        bool invertible = true;
        for (size_t r = 0; r < rows.size() && invertible; ++r) {
            size_t p = r;
            while (p < rows.size() && rows[p] == 0) ++p;
            if (p == rows.size()) {
                invertible = false;
                break;
            }
            std::swap(rows[r], rows[p]);
            const Word lead = Word(1) << (31 - std::countl_zero(rows[r]));
            for (size_t q = r + 1; q < rows.size(); ++q)
                if (rows[q] & lead) rows[q] ^= rows[r];
        }
        if (!invertible) continue;

        for (int i = 0; i < n; ++i)
            img_vec[static_cast<size_t>(i)] = BitVec(img[static_cast<size_t>(i)], n);

        bool match = true;
        for (int i = 0; i < n && match; ++i)
            for (int j = i; j < n && match; ++j)
                for (int k = j; k < n && match; ++k)
                    if (r1.u(i, j, k) != r2.eval_u(img_vec[static_cast<size_t>(i)],
                                                   img_vec[static_cast<size_t>(j)],
                                                   img_vec[static_cast<size_t>(k)]))
                        match = false;
        if (match) return true;
    }
    return false;
}

}  // namespace k4
