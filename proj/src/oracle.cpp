#include "klein4/oracle.hpp"

#include <map>
#include <stdexcept>

#include "klein4/klein_count.hpp"

namespace k4::oracle {

namespace {

void check_cap(int dim) {
    if (dim > kOracleMaxDim)
        throw std::invalid_argument("oracle: dimension " + std::to_string(dim) +
                                    " above brute-force cap " + std::to_string(kOracleMaxDim));
}

// u(a, b, e_k) summed entry by entry over set bits.
int naive_pair_value(const CupRing& r, Word a, Word b, int k) {
    int acc = 0;
    for (int i = 0; i < r.dim(); ++i) {
        if (((a >> i) & 1u) == 0) continue;
        for (int j = 0; j < r.dim(); ++j)
            if ((b >> j) & 1u) acc ^= r.u(i, j, k);
    }
    return acc;
}

// ab + bc + ac of the triple {a, b, c = a+b}, as a dual word.
Word naive_w2(const CupRing& r, Word a, Word b) {
    const Word c = a ^ b;
    Word out = 0;
    for (int k = 0; k < r.dim(); ++k) {
        const int bit = naive_pair_value(r, a, b, k) ^ naive_pair_value(r, b, c, k) ^
                        naive_pair_value(r, a, c, k);
        out |= static_cast<Word>(bit) << k;
    }
    return out;
}

// Visit each unordered triple {a, b, a+b} exactly once: the trivial triple,
// the degenerate triples {0, a, a}, and the generic ones by a < b < a+b.
template <class Visit>
void for_each_triple(int dim, Visit visit) {
    const Word n_words = Word(1) << dim;
    visit(Word(0), Word(0));
    for (Word a = 1; a < n_words; ++a) visit(Word(0), a);
    for (Word a = 1; a < n_words; ++a)
        for (Word b = a + 1; b < n_words; ++b)
            if ((a ^ b) > b) visit(a, b);
}

}  // namespace

std::vector<std::uint64_t> brute_v_table(const CupRing& r) {
    check_cap(r.dim());
    std::vector<std::uint64_t> hist(Word(1) << r.dim(), 0);
    for_each_triple(r.dim(), [&](Word a, Word b) { ++hist[naive_w2(r, a, b)]; });
    return hist;
}

std::uint64_t brute_v_count(const CupRing& r, const H2Class& x) {
    check_cap(r.dim());
    if (x.dim() != r.dim()) throw std::invalid_argument("brute_v_count: dimension mismatch");
    std::uint64_t count = 0;
    for_each_triple(r.dim(), [&](Word a, Word b) {
        if (naive_w2(r, a, b) == x.dual.bits) ++count;
    });
    return count;
}

std::uint64_t brute_total(int b) {
    check_cap(b);
    std::uint64_t count = 0;
    for_each_triple(b, [&](Word, Word) { ++count; });
    return count;
}

std::vector<LinkData> brute_lk_recovery(const std::vector<FTableRow>& fixture) {
    // Canonicalize the fixture into a map so row order does not matter.
    std::map<std::pair<Word, Word>, unsigned> want;
    for (const FTableRow& row : fixture) {
        const KleinTriple t = KleinTriple::canonical(BitVec(row.a, 3), BitVec(row.b, 3));
        const auto key = std::make_pair(t.a.bits, t.b.bits);
        auto [it, inserted] = want.emplace(key, row.subset_mask);
        if (!inserted && it->second != row.subset_mask)
            throw std::invalid_argument("fixture lists one triple with two different subsets");
    }
    if (want.size() != 15)
        throw std::invalid_argument("fixture must cover all 15 triples of a 4-component cover");

    std::vector<LinkData> matches;
    // Six independent off-diagonal bits: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
    static constexpr std::pair<int, int> kPairs[6] = {{0, 1}, {0, 2}, {0, 3},
                                                      {1, 2}, {1, 3}, {2, 3}};
    for (unsigned code = 0; code < 64; ++code) {
        std::vector<std::vector<int>> m(4, std::vector<int>(4, 0));
        for (int p = 0; p < 6; ++p)
            if ((code >> p) & 1u) {
                m[static_cast<size_t>(kPairs[p].first)][static_cast<size_t>(kPairs[p].second)] = 1;
                m[static_cast<size_t>(kPairs[p].second)][static_cast<size_t>(kPairs[p].first)] = 1;
            }
        const LinkData link = LinkData::from_matrix(m);
        const BranchedCover cover = branched_double_cover(link);

        bool all_match = true;
        for (const auto& [triple, subset] : f_table(cover)) {
            const auto it = want.find({triple.a.bits, triple.b.bits});
            if (it == want.end() || it->second != subset.mask) {
                all_match = false;
                break;
            }
        }
        if (all_match) matches.push_back(link);
    }
    return matches;
}

}  // namespace k4::oracle
