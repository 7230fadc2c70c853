#include "klein4/verify.hpp"

#include <random>

#include "klein4/casson.hpp"
#include "klein4/family.hpp"
#include "klein4/klein_count.hpp"
#include "klein4/oracle.hpp"
#include "klein4/ring_spec.hpp"

namespace k4 {

namespace {

using nlohmann::json;

json ring_json(const CupRing& r) {
    return ring_to_explicit_spec(r);
}

std::optional<VerifyFailure> fail(const std::string& check, json reproducer) {
    return VerifyFailure{check, std::move(reproducer)};
}

std::optional<VerifyFailure> check_ring(const CupRing& r) {
    const int n = r.dim();
    const Word n_words = Word(1) << n;

    if (!r.symmetric_ok())
        return fail("tensor_symmetry", {{"ring", ring_json(r)}});
    if (!r.postnikov_ok())
        return fail("realizability_condition", {{"ring", ring_json(r)}});

    // square(a) must agree with cup(a,a) everywhere (they are computed by
    // different routes), and squaring must be additive.
    std::mt19937_64 rng(0x5eed);
    const bool exhaustive = n <= 10;
    const int samples = exhaustive ? static_cast<int>(n_words) : 512;
    for (int s = 0; s < samples; ++s) {
        const Word a = exhaustive ? static_cast<Word>(s)
                                  : static_cast<Word>(rng() & (n_words - 1));
        const BitVec va(a, n);
        if (r.square(va) != r.cup(va, va))
            return fail("square_equals_cup_diagonal",
                        {{"ring", ring_json(r)}, {"a", va.to_string()}});
        const Word b = static_cast<Word>(rng() & (n_words - 1));
        const BitVec vb(b, n);
        if (r.square(va ^ vb) != (r.square(va) ^ r.square(vb)))
            return fail("squaring_linear",
                        {{"ring", ring_json(r)}, {"a", va.to_string()}, {"b", vb.to_string()}});
    }

    // w2 is constant on the six reorderings of a triple.
    for (int s = 0; s < 64; ++s) {
        const BitVec a(static_cast<Word>(rng() & (n_words - 1)), n);
        const BitVec b(static_cast<Word>(rng() & (n_words - 1)), n);
        const BitVec c = a ^ b;
        const H2Class w = w2_of(r, a, b);
        if (w2_of(r, b, a) != w || w2_of(r, a, c) != w || w2_of(r, c, a) != w ||
            w2_of(r, b, c) != w || w2_of(r, c, b) != w)
            return fail("w2_orbit_invariance",
                        {{"ring", ring_json(r)}, {"a", a.to_string()}, {"b", b.to_string()}});
    }

    const std::vector<std::uint64_t> n_ordered = ordered_pair_counts(r, 0);
    const std::vector<OrbitTriple> table = v_table(r, 0);
    const int k = r.k_invariant();

    std::uint64_t sum = 0, admissible_seen = 0;
    for (Word x = 0; x < n_words; ++x) {
        const OrbitTriple& t = table[x];
        sum += t.total();
        if (6 * t.v1 + 3 * t.v2 + t.v3 != n_ordered[x])
            return fail("ordered_count_identity",
                        {{"ring", ring_json(r)}, {"x", BitVec(x, n).to_string()}});
        const std::uint64_t roots = t.v2 + t.v3;
        if (roots != 0 && roots != (std::uint64_t(1) << k))
            return fail("square_root_count_dichotomy",
                        {{"ring", ring_json(r)},
                         {"x", BitVec(x, n).to_string()},
                         {"v2_plus_v3", roots},
                         {"k", k}});
        const H2Class xc(BitVec(x, n));
        const bool sq = r.is_square(xc);
        if (sq != (roots != 0))
            return fail("square_membership_vs_roots",
                        {{"ring", ring_json(r)}, {"x", xc.to_string()}});
        if (!sq) ++admissible_seen;
    }
    if (sum != total_count(n))
        return fail("table_total",
                    {{"ring", ring_json(r)}, {"sum", sum}, {"expected", total_count(n)}});
    if (admissible_seen != count_admissible(r))
        return fail("admissible_count_formula",
                    {{"ring", ring_json(r)},
                     {"enumerated", admissible_seen},
                     {"formula", count_admissible(r)}});

    if (n <= oracle::kOracleMaxDim) {
        const std::vector<std::uint64_t> brute = oracle::brute_v_table(r);
        for (Word x = 0; x < n_words; ++x)
            if (brute[x] != table[x].total())
                return fail("oracle_equivalence",
                            {{"ring", ring_json(r)},
                             {"x", BitVec(x, n).to_string()},
                             {"fast", table[x].total()},
                             {"brute", brute[x]}});
    }
    return std::nullopt;
}

// Parity laws across non-squares, assuming a realizable ring.
std::optional<VerifyFailure> check_parity_laws(const CupRing& r,
                                               const std::vector<OrbitTriple>& table) {
    const int n = r.dim();
    const int k = r.k_invariant();
    const Word n_words = Word(1) << n;

    std::optional<int> common_parity;
    for (Word x = 0; x < n_words; ++x) {
        const H2Class xc(BitVec(x, n));
        if (r.is_square(xc)) continue;
        const std::uint64_t v = table[x].total();
        const int parity = static_cast<int>(v & 1);
        if (k >= 1) {
            if (common_parity && *common_parity != parity)
                return fail("parity_constant_across_non_squares",
                            {{"ring", ring_json(r)}, {"x", xc.to_string()}});
            common_parity = parity;
            if (k >= 4 && parity != 0)
                return fail("parity_zero_for_k_ge_4",
                            {{"ring", ring_json(r)}, {"x", xc.to_string()}, {"v", v}});
        }
        if (n == 2 && parity != 0)
            return fail("v_even_for_dim_2",
                        {{"ring", ring_json(r)}, {"x", xc.to_string()}, {"v", v}});
        if (n == 1 && v != 0)
            return fail("v_zero_for_dim_1",
                        {{"ring", ring_json(r)}, {"x", xc.to_string()}, {"v", v}});
    }
    return std::nullopt;
}

// Connected-sum product law against direct-sum counts, all class pairs.
std::optional<VerifyFailure> check_sum_law(const CupRing& r1, const CupRing& r2) {
    const CupRing sum = r1.direct_sum(r2);
    const auto t1 = v_table(r1, 0);
    const auto t2 = v_table(r2, 0);
    const auto ts = v_table(sum, 0);
    const Word w1 = Word(1) << r1.dim(), w2 = Word(1) << r2.dim();
    for (Word x1 = 0; x1 < w1; ++x1)
        for (Word x2 = 0; x2 < w2; ++x2) {
            const std::uint64_t expect = vcheck_product(t1[x1], t2[x2]).total();
            const Word x = x1 | (x2 << r1.dim());
            if (ts[x].total() != expect)
                return fail("connected_sum_product_law",
                            {{"ring1", ring_json(r1)},
                             {"ring2", ring_json(r2)},
                             {"x1", BitVec(x1, r1.dim()).to_string()},
                             {"x2", BitVec(x2, r2.dim()).to_string()},
                             {"product", expect},
                             {"direct", ts[x].total()}});
        }
    return std::nullopt;
}

// v is unchanged when RP^3 is summed on (checked as integers on every class).
std::optional<VerifyFailure> check_rp3_stability(const CupRing& r) {
    const CupRing sum = r.direct_sum(rp3());
    const auto t = v_table(r, 0);
    const auto ts = v_table(sum, 0);
    const Word n_words = Word(1) << r.dim();
    for (Word x = 0; x < n_words; ++x)
        if (t[x].total() != ts[x].total())
            return fail("rp3_stability",
                        {{"ring", ring_json(r)},
                         {"x", BitVec(x, r.dim()).to_string()},
                         {"before", t[x].total()},
                         {"after", ts[x].total()}});
    return std::nullopt;
}

}  // namespace

VerifyResult verify_ring(const CupRing& r) {
    VerifyResult result;
    result.rings_checked = 1;
    result.failure = check_ring(r);
    if (!result.failure && r.postnikov_ok())
        result.failure = check_parity_laws(r, v_table(r, 0));
    return result;
}

VerifyResult verify_family(std::uint64_t seed, int ring_count, int max_dim,
                           std::ostream* progress) {
    VerifyResult result;
    FamilyGen gen(seed);
    std::vector<CupRing> small;  // kept for pairwise sum checks

    for (int i = 0; i < ring_count; ++i) {
        const CupRing r = gen.next_ring(max_dim);
        ++result.rings_checked;
        if (progress)
            *progress << "ring " << (i + 1) << "/" << ring_count << " dim=" << r.dim() << "\n";
        result.failure = check_ring(r);
        if (!result.failure) result.failure = check_parity_laws(r, v_table(r, 0));
        if (!result.failure && r.dim() + 1 <= kMaxDim && r.dim() <= 10)
            result.failure = check_rp3_stability(r);
        if (result.failure) return result;
        if (r.dim() <= 5) small.push_back(r);

        // Pair the two most recent small rings whose sum stays in range.
        if (small.size() >= 2) {
            const CupRing& a = small[small.size() - 2];
            const CupRing& b = small[small.size() - 1];
            if (a.dim() + b.dim() <= 10) {
                ++result.sum_pairs_checked;
                result.failure = check_sum_law(a, b);
                if (result.failure) return result;
            }
        }
    }
    return result;
}

}  // namespace k4
