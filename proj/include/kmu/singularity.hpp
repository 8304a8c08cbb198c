#pragma once

#include <optional>

#include "kmu/geometry.hpp"

namespace kmu {

struct SingularityReport {
    enum class Verdict {
        smooth,                // singular scheme empty away from the cone origin
        isolated,              // zero-dimensional singular scheme
        positive_dimensional,  //
        singular_witness       // certified singular by an explicit cone point
    };
    Verdict verdict = Verdict::smooth;
    int dimension = -1;  // projective dimension of the singular scheme
    std::optional<long long> degree;
    std::optional<std::vector<Scalar>> witness;
    std::string method;
    long long reductions = 0;

    bool is_smooth() const { return verdict == Verdict::smooth; }
    std::string verdict_name() const;
};

// Jacobian matrix of the generators, rows = generators, cols = variables
std::vector<std::vector<Polynomial>> jacobian_matrix(const std::vector<Polynomial>& gens);

// all size x size minors (zero minors dropped)
std::vector<Polynomial> jacobian_minors(const std::vector<std::vector<Polynomial>>& jac, int size,
                                        const RingPtr& ring);

// I + the (codim x codim) minors of the Jacobian of its generators,
// saturated by the irrelevant ideal (saturation skippable for callers that
// only need dimension/degree, which are saturation-invariant)
Ideal singular_scheme(const Ideal& I, int codim, const GroebnerOptions& opts = {}, bool saturate = true);

// Quasi-smoothness of the affine cone minus the origin.  A cheap exact
// certificate is tried first: points supported on few coordinates where all
// generators vanish and the Jacobian rank drops below the codimension.
// Otherwise the singular scheme's dimension decides.
SingularityReport quasi_smooth_ideal(const Ideal& I, int codim, const GroebnerOptions& opts = {},
                                     int witness_max_support = 2);

// seeded generic member of the family
SingularityReport quasi_smooth(const VarietySpec& v, std::uint64_t seed, const GroebnerOptions& opts = {});

// generic forms of the given degrees in the ideal of V(q): equation j is
// sum_i q_i r_ij with seeded random r_ij (the "generic member containing D")
std::vector<Polynomial> generic_containing(const std::vector<Polynomial>& q,
                                           const std::vector<long long>& degrees, Rng rng);

// expected node count of a generic transverse intersection: product of the
// degrees over the product of the ambient weights; 0 if any degree is 0;
// throws DomainError on a non-integer result (fall back to the GB degree)
long long node_count_bezout(const std::vector<long long>& degrees, const std::vector<int>& weights);

}  // namespace kmu
