#include "klein4/builders.hpp"

#include <algorithm>

namespace k4 {

CupRing free_ring(int m) {
    return CupRing::from_triples(m, {});
}

CupRing rp3() {
    return CupRing::from_triples(1, {{{0, 0, 0}}});
}

CupRing connect_sum(const std::vector<CupRing>& parts) {
    CupRing r = free_ring(0);
    for (const CupRing& p : parts) r = r.direct_sum(p);
    return r;
}

CupRing borromean(int f1, int f2, int f3) {
    const std::array<int, 3> f = {f1, f2, f3};
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < 3; ++i) {
        if (f[static_cast<size_t>(i)] != 0 && f[static_cast<size_t>(i)] != 2 &&
            f[static_cast<size_t>(i)] != 4)
            throw SpecError("borromean framing " + std::to_string(f[static_cast<size_t>(i)]) +
                            " not supported; use 0, 2 (= 2 mod 4) or 4 (= 0 mod 4, nonzero)");
        if (f[static_cast<size_t>(i)] == 2) triples.push_back({i, i, i});
    }
    triples.push_back({0, 1, 2});
    std::sort(triples.begin(), triples.end());
    return CupRing::from_triples(3, triples);
}

CupRing torus3() {
    return borromean(0, 0, 0);
}

int seifert_parity(const SeifertData& s) {
    if (s.g != 1) return 0;
    long long beta_sum = s.b;
    for (const auto& [alpha, beta] : s.cone) {
        if (alpha < 1) throw SpecError("Seifert invariant alpha must be >= 1");
        if (alpha % 2 == 0) return 0;
        beta_sum += beta;
    }
    return (beta_sum % 2 == 0) ? 1 : 0;
}

CupRing seifert_g1_ring(bool c_square_is_ab) {
    std::vector<std::array<int, 3>> triples = {{{0, 1, 2}}};
    if (c_square_is_ab) triples.push_back({2, 2, 2});
    return CupRing::from_triples(3, triples);
}

LinkData LinkData::from_matrix(const std::vector<std::vector<int>>& m) {
    const int n = static_cast<int>(m.size());
    if (n < 1) throw SpecError("link needs at least one component");
    if (n > kMaxDim + 1) throw SpecError("too many link components");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw SpecError("linking matrix is not square");
    LinkData link;
    link.n = n;
    link.lk.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;  // diagonal ignored
            const int bit = ((m[static_cast<size_t>(i)][static_cast<size_t>(j)] % 2) + 2) % 2;
            if (bit) link.lk[static_cast<size_t>(i)] |= Word(1) << j;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (link.linking(i, j) != link.linking(j, i))
                throw SpecError("linking matrix is not symmetric mod 2 at (" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    return link;
}

std::vector<int> EvenSubset::components() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if ((mask >> i) & 1u) out.push_back(i + 1);
    return out;
}

std::string EvenSubset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int c : components()) {
        if (!first) s += ",";
        s += std::to_string(c);
        first = false;
    }
    return s + "}";
}

BranchedCover branched_double_cover(const LinkData& link) {
    const int n = link.n;
    const int dim = n - 1;
    if (dim > kMaxDim) throw SpecError("branched cover dimension exceeds cap");

    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < dim; ++i) {
        int total = 0;
        for (int l = 0; l < n; ++l)
            if (l != i) total ^= link.linking(i, l);
        if (total) triples.push_back({i, i, i});
        for (int k = 0; k < dim; ++k)
            if (k != i && link.linking(i, k)) {
                std::array<int, 3> t = {i, i, k};
                std::sort(t.begin(), t.end());
                triples.push_back(t);
            }
    }
    // {i,i,k} and {k,k,i} are distinct multisets; values on distinct indices
    // stay zero.
    std::sort(triples.begin(), triples.end());
    return BranchedCover{CupRing::from_triples(dim, triples), link};
}

EvenSubset pd_to_subset(const BranchedCover& cover, const H2Class& phi) {
    const int dim = cover.ring.dim();
    if (phi.dim() != dim) throw std::invalid_argument("pd_to_subset: dimension mismatch");
    unsigned mask = phi.dual.bits;  // bit i = phi(a_{i+1}) for i < n-1
    if (std::popcount(mask) % 2 == 1) mask |= 1u << (cover.components() - 1);
    return EvenSubset{mask};
}

std::vector<std::pair<KleinTriple, EvenSubset>> f_table(const BranchedCover& cover) {
    std::vector<std::pair<KleinTriple, EvenSubset>> rows;
    for (const KleinTriple& t : klein_classes(cover.ring.dim()))
        rows.emplace_back(t, pd_to_subset(cover, w2_of(cover.ring, t.a, t.b)));
    return rows;
}

LinkData l8n8_link() {
    return LinkData::from_matrix({{0, 1, 1, 0},
                                  {1, 0, 0, 1},
                                  {1, 0, 0, 1},
                                  {0, 1, 1, 0}});
}

}  // namespace k4
