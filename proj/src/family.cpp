#include "klein4/family.hpp"

#include "klein4/builders.hpp"

namespace k4 {

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

CupRing FamilyGen::random_block(int max_block_dim) {
    // Choices are weighted towards blocks with nonzero products.
    for (;;) {
        switch (uniform_int(rng_, 0, 5)) {
            case 0: return free_ring(1);
            case 1: return rp3();
            case 2:
            case 3: {
                if (max_block_dim < 3) break;
                static constexpr int kFramings[3] = {0, 2, 4};
                return borromean(kFramings[uniform_int(rng_, 0, 2)],
                                 kFramings[uniform_int(rng_, 0, 2)],
                                 kFramings[uniform_int(rng_, 0, 2)]);
            }
            case 4: {
                if (max_block_dim < 3) break;
                return seifert_g1_ring(uniform_int(rng_, 0, 1) == 1);
            }
            case 5: {
                // Cover of a random link on n components has dimension n - 1.
                const int max_n = std::min(5, max_block_dim + 1);
                if (max_n < 2) break;
                const int n = uniform_int(rng_, 2, max_n);
                std::vector<std::vector<int>> m(static_cast<size_t>(n),
                                                std::vector<int>(static_cast<size_t>(n), 0));
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                            m[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                                uniform_int(rng_, 0, 1);
                return branched_double_cover(LinkData::from_matrix(m)).ring;
            }
        }
    }
}

CupRing FamilyGen::next_ring(int max_dim) {
    return next_ring_exact(uniform_int(rng_, 0, max_dim));
}

CupRing FamilyGen::next_ring_exact(int dim) {
    CupRing r = free_ring(0);
    while (r.dim() < dim) r = r.direct_sum(random_block(dim - r.dim()));
    return r;
}

}  // namespace k4
