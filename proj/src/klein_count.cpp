#include "klein4/klein_count.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <thread>

namespace k4 {

KleinTriple KleinTriple::canonical(BitVec a, BitVec b) {
    if (a.dim != b.dim) throw std::invalid_argument("KleinTriple: dimension mismatch");
    std::array<Word, 3> w = {a.bits, b.bits, a.bits ^ b.bits};
    std::sort(w.begin(), w.end());
    return KleinTriple{BitVec(w[0], a.dim), BitVec(w[1], a.dim)};
}

int KleinTriple::stabilizer_order() const {
    const Word c = a.bits ^ b.bits;
    if (a.bits == b.bits && b.bits == c) return 6;  // only {0,0,0}
    if (a.bits == b.bits || b.bits == c || a.bits == c) return 2;
    return 1;
}

H2Class w2_of(const CupRing& r, BitVec a, BitVec b) {
    return r.square(a) ^ r.square(b) ^ r.cup(a, b);
}

namespace {

// Table of square(v) for every word v, filled by subset-xor recursion.
std::vector<Word> square_table(const CupRing& r) {
    const Word n_words = Word(1) << r.dim();
    std::vector<Word> sq(n_words, 0);
    for (Word v = 1; v < n_words; ++v)
        sq[v] = sq[v & (v - 1)] ^ r.square_basis_word(std::countr_zero(v));
    return sq;
}

void scan_range(const CupRing& r, const std::vector<Word>& sq, Word a_begin, Word a_end,
                std::vector<std::uint64_t>& counts) {
    const int n = r.dim();
    const Word n_words = Word(1) << n;
    std::array<Word, kMaxDim> rows{};
    std::array<Word, kMaxDim> cup_col{};

    for (Word a = a_begin; a < a_end; ++a) {
        // rows[k] = xor of the a-rows of slice k, so that
        // u(a, b, e_k) = parity(rows[k] & b).
        for (int k = 0; k < n; ++k) {
            Word acc = 0, rest = a;
            while (rest) {
                const int i = std::countr_zero(rest);
                rest &= rest - 1;
                acc ^= r.slice_row(k, i);
            }
            rows[static_cast<size_t>(k)] = acc;
        }
        // Transpose into columns: cup(a, b ^ e_j) = cup(a, b) ^ cup_col[j].
        for (int j = 0; j < n; ++j) {
            Word w = 0;
            for (int k = 0; k < n; ++k)
                w |= ((rows[static_cast<size_t>(k)] >> j) & 1u) << k;
            cup_col[static_cast<size_t>(j)] = w;
        }

        const Word sq_a = sq[a];
        Word b = 0, cup_ab = 0;
        ++counts[sq_a];  // b = 0
        for (Word step = 1; step < n_words; ++step) {
            const int j = std::countr_zero(step);  // Gray-code bit flip
            b ^= Word(1) << j;
            cup_ab ^= cup_col[static_cast<size_t>(j)];
            ++counts[sq_a ^ sq[b] ^ cup_ab];
        }
    }
}

int pick_threads(int requested, int dim) {
    if (requested > 0) return requested;
    if (dim < 12) return 1;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

std::vector<std::uint64_t> ordered_pair_counts(const CupRing& r, int threads) {
    const int n = r.dim();
    const Word n_words = Word(1) << n;
    const std::vector<Word> sq = square_table(r);

    const int workers = std::min<int>(pick_threads(threads, n), static_cast<int>(n_words));
    if (workers <= 1) {
        std::vector<std::uint64_t> counts(n_words, 0);
        scan_range(r, sq, 0, n_words, counts);
        return counts;
    }

    std::vector<std::vector<std::uint64_t>> partial(
        static_cast<size_t>(workers), std::vector<std::uint64_t>(n_words, 0));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const Word lo = static_cast<Word>((std::uint64_t(n_words) * w) / workers);
        const Word hi = static_cast<Word>((std::uint64_t(n_words) * (w + 1)) / workers);
        pool.emplace_back([&r, &sq, lo, hi, &part = partial[static_cast<size_t>(w)]] {
            scan_range(r, sq, lo, hi, part);
        });
    }
    for (auto& t : pool) t.join();

    std::vector<std::uint64_t> counts(n_words, 0);
    for (const auto& part : partial)
        for (Word x = 0; x < n_words; ++x) counts[x] += part[x];
    return counts;
}

std::vector<OrbitTriple> v_table(const CupRing& r, int threads) {
    const Word n_words = Word(1) << r.dim();
    const std::vector<std::uint64_t> n_ordered = ordered_pair_counts(r, threads);

    // Multiplicity of each value of the squaring map (2^k on its image).
    const std::vector<Word> sq = square_table(r);
    std::vector<std::uint64_t> sq_count(n_words, 0);
    for (Word v = 0; v < n_words; ++v) ++sq_count[sq[v]];

    std::vector<OrbitTriple> table(n_words);
    for (Word x = 0; x < n_words; ++x) {
        OrbitTriple t;
        t.v3 = (x == 0) ? 1 : 0;
        t.v2 = sq_count[x] - t.v3;  // nontrivial roots only at x = 0
        const std::int64_t rem = static_cast<std::int64_t>(n_ordered[x]) -
                                 3 * static_cast<std::int64_t>(t.v2) -
                                 static_cast<std::int64_t>(t.v3);
        if (rem < 0 || rem % 6 != 0)
            throw std::logic_error(
                "orbit arithmetic failed: ordered-pair count not congruent to "
                "3*v2 + v3 mod 6 (tensor symmetry is broken)");
        t.v1 = static_cast<std::uint64_t>(rem / 6);
        table[x] = t;
    }
    return table;
}

OrbitTriple v_orbits(const CupRing& r, const H2Class& x) {
    if (x.dim() != r.dim()) throw std::invalid_argument("v_orbits: dimension mismatch");
    return v_table(r, 0)[x.dual.bits];
}

std::uint64_t v_count(const CupRing& r, const H2Class& x) {
    return v_orbits(r, x).total();
}

std::uint64_t total_count(int b) {
    if (b < 0 || b > kMaxDim) throw std::invalid_argument("total_count: b out of range");
    const std::uint64_t pow2 = std::uint64_t(1) << b;
    const std::uint64_t pow4 = std::uint64_t(1) << (2 * b);
    const std::uint64_t num = 3 * pow2 + pow4 + 2;
    if (num % 6 != 0) throw std::logic_error("total_count: numerator not divisible by 6");
    return num / 6;
}

OrbitTriple vcheck_product(const OrbitTriple& v, const OrbitTriple& u) {
    OrbitTriple p;
    p.v1 = 6 * v.v1 * u.v1 + 3 * v.v1 * u.v2 + 3 * v.v2 * u.v1 + v.v1 * u.v3 + v.v3 * u.v1 +
           v.v2 * u.v2;
    p.v2 = v.v2 * u.v2 + v.v2 * u.v3 + v.v3 * u.v2;
    p.v3 = v.v3 * u.v3;
    return p;
}

std::vector<KleinTriple> klein_classes(int dim) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("klein_classes: dim out of range");
    const Word n_words = Word(1) << dim;
    std::vector<KleinTriple> out;
    out.reserve(total_count(dim));
    out.push_back(KleinTriple{BitVec::zero(dim), BitVec::zero(dim)});
    for (Word a = 1; a < n_words; ++a)
        out.push_back(KleinTriple{BitVec::zero(dim), BitVec(a, dim)});
    for (Word a = 1; a < n_words; ++a)
        for (Word b = a + 1; b < n_words; ++b)
            if ((a ^ b) > b) out.push_back(KleinTriple{BitVec(a, dim), BitVec(b, dim)});
    return out;
}

}  // namespace k4
