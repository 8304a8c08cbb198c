#include "kmu/invariants.hpp"

#include "kmu/errors.hpp"

namespace kmu {

InvariantSet ci_invariants(const std::vector<int>& weights, const std::vector<long long>& degrees) {
    if (weights.empty() || degrees.empty()) throw DomainError("weights and degrees must be nonempty");
    for (int w : weights)
        if (w <= 0) throw DomainError("weights must be positive");
    for (long long d : degrees)
        if (d <= 0) throw DomainError("degrees must be positive");

    Field Q = Field::rationals();
    long long wprod = 1, dprod = 1;
    for (int w : weights) wprod *= w;
    for (long long d : degrees) dprod *= d;

    InvariantSet inv;
    inv.h3 = Scalar::fraction(dprod, wprod, Q);
    for (int w : weights)
        if (w == 1) ++inv.h0;

    // log of prod(1+w_i H)/prod(1+d_j H): power sums p_k = sum w^k - sum d^k
    long long p1 = 0, p2 = 0, p3 = 0;
    for (int w : weights) {
        p1 += w;
        p2 += static_cast<long long>(w) * w;
        p3 += static_cast<long long>(w) * w * w;
    }
    for (long long d : degrees) {
        p1 -= d;
        p2 -= d * d;
        p3 -= d * d * d;
    }
    if (p1 != 0) return inv;  // not Calabi-Yau: H^3 and h0 only

    // exp back: c2 = -p2/2, c3 = p3/3 (using c1 = p1 = 0)
    Scalar c2 = Scalar::fraction(-p2, 2, Q);
    Scalar c3 = Scalar::fraction(p3, 3, Q);
    inv.c2h = c2 * inv.h3;
    Scalar chi = c3 * inv.h3;
    if (chi.den() == 1) inv.chi = chi.num();
    return inv;
}

InvariantSet transition_invariants(const InvariantSet& inv, long long d, TransitionDirection dir) {
    if (d < 1 || d > 9) throw DomainError("del Pezzo degree must lie in 1..9");
    Field Q = Field::rationals();
    long long sign = dir == TransitionDirection::unproject ? 1 : -1;
    InvariantSet out;
    out.h3 = inv.h3 + Scalar::of_int(sign * d, Q);
    if (inv.c2h) out.c2h = *inv.c2h + Scalar::of_int(sign * (12 - 2 * d), Q);
    out.h0 = inv.h0 + static_cast<int>(sign);
    // chi and h12 are not determined by the transition arithmetic
    return out;
}

std::vector<InvariantSet> cascade(const InvariantSet& start, long long d, int steps,
                                  TransitionDirection dir) {
    if (steps < 0) throw DomainError("steps must be non-negative");
    std::vector<InvariantSet> out{start};
    for (int i = 0; i < steps; ++i) out.push_back(transition_invariants(out.back(), d, dir));
    return out;
}

}  // namespace kmu
