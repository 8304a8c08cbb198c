#pragma once

#include <optional>
#include <vector>

#include "kmu/scalar.hpp"

namespace kmu {

// Numerical invariants of a (polarized) Calabi-Yau threefold family.  h0 is
// the number of sections of O(1), the tables' dim|H| column; the projective
// dimension of |H| is h0 - 1.
struct InvariantSet {
    Scalar h3;                      // degree H^3, exact rational
    std::optional<Scalar> c2h;      // c_2(X).H
    int h0 = 0;
    std::optional<long long> chi;   // topological Euler characteristic
    std::optional<long long> h12;   // Hodge number, catalog data for Pfaffian rows

    bool same_polarization(const InvariantSet& o) const {
        return h3 == o.h3 && h0 == o.h0 &&
               ((!c2h && !o.c2h) || (c2h && o.c2h && *c2h == *o.c2h));
    }
};

// Chern-series invariants of a complete intersection of the given degrees in
// the weighted projective space with the given weights, truncated at H^3.
// For non-Calabi-Yau input (sum of degrees != sum of weights) only H^3 and
// h0 are meaningful and the other fields stay empty.
InvariantSet ci_invariants(const std::vector<int>& weights, const std::vector<long long>& degrees);

enum class TransitionDirection { unproject, project };

// The invariant transition across a Kustin-Miller unprojection contracting a
// del Pezzo surface of degree d: unprojecting gains H^3 += d,
// c2.H += 12 - 2d, h0 += 1; chi is not determined by this arithmetic.
InvariantSet transition_invariants(const InvariantSet& inv, long long d, TransitionDirection dir);

// iterated unprojections (or projections), start included in the output
std::vector<InvariantSet> cascade(const InvariantSet& start, long long d, int steps,
                                  TransitionDirection dir = TransitionDirection::unproject);

}  // namespace kmu
