#include "klein4/casson.hpp"

#include "klein4/klein_count.hpp"

namespace k4 {

const char* to_string(CassonCase c) {
    switch (c) {
        case CassonCase::congruence_b_ge_3: return "congruence_b_ge_3";
        case CassonCase::evenness_b_eq_2: return "evenness_b_eq_2";
        case CassonCase::vanishing_b_eq_1: return "vanishing_b_eq_1";
    }
    return "?";
}

bool admissible_mod2(const CupRing& r, const H2Class& x) {
    return !r.is_square(x);
}

std::uint64_t count_admissible(const CupRing& r) {
    const int b = r.dim();
    const int k = r.k_invariant();
    return ((std::uint64_t(1) << k) - 1) << (b - k);
}

CassonReport casson_report(const CupRing& r, const H2Class& x) {
    if (x.dim() != r.dim()) throw std::invalid_argument("casson_report: dimension mismatch");
    if (!admissible_mod2(r, x)) {
        const auto root = r.square_root(x);
        throw SpecError("x = " + x.to_string() +
                        " is the cup-square of " + root->to_string() +
                        "; it fails the condition \"x is not the cup-square of an element of "
                        "H^1(Y;Z_2)\", so no admissible bundle has w2 = x");
    }

    CassonReport rep;
    rep.b = r.dim();
    rep.k = r.k_invariant();
    rep.x = x;
    rep.v = v_count(r, x);
    rep.divisibility_exponent = rep.b > 3 ? rep.b - 3 : 0;
    rep.parity = static_cast<int>(rep.v & 1);

    if (rep.b >= 3) {
        rep.applicability = CassonCase::congruence_b_ge_3;
        rep.statement = "lambda(Y,E) is divisible by 2^" + std::to_string(rep.divisibility_exponent) +
                        "; lambda(Y,E)/2^" + std::to_string(rep.divisibility_exponent) + " = " +
                        std::to_string(rep.parity) + " (mod 2)";
    } else if (rep.b == 2) {
        rep.applicability = CassonCase::evenness_b_eq_2;
        if (rep.parity != 0)
            throw SpecError("b1(2) = 2 forces v_Y(E) even, but v = " + std::to_string(rep.v) +
                            "; this tensor is not the ring of a closed oriented 3-manifold");
        rep.statement = "v_Y(E) = " + std::to_string(rep.v) +
                        " is even as forced; v (mod 2) gives no information about lambda(Y,E)";
    } else {
        rep.applicability = CassonCase::vanishing_b_eq_1;
        if (rep.v != 0)
            throw SpecError("b1(2) = 1 forces v_Y(E) = 0, but v = " + std::to_string(rep.v) +
                            "; this tensor is not the ring of a closed oriented 3-manifold");
        rep.statement = "v_Y(E) = 0 as forced; no information about lambda(Y,E)";
    }
    return rep;
}

int grading_shift(const CupRing& r, const H2Class& x, BitVec w) {
    if (x.dim() != r.dim() || w.dim != r.dim())
        throw std::invalid_argument("grading_shift: dimension mismatch");
    const int bit = (x.eval(w) + r.eval_u(w, w, w)) & 1;
    return 4 * bit;
}

}  // namespace k4
