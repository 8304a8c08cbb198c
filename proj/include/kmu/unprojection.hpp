#pragma once

#include <optional>

#include "kmu/geometry.hpp"
#include "kmu/matrix.hpp"

namespace kmu {

// Output of one explicit unprojection: the ideal of Y in the ring extended
// by the unprojection variable, the exceptional ideal downstairs, and the
// unprojection point (0 : ... : 0 : 1).
struct UnprojectionResult {
    RingPtr ring;             // extended ring
    std::size_t unproj_var = 0;
    std::vector<Polynomial> y_generators;  // without lifted ambient constraints
    Ideal exceptional;        // in the original ring
    std::vector<Scalar> point;
    std::string mechanism;
    std::uint64_t seed = 0;
    std::optional<AntisymmetricMatrix> matrix;
    std::optional<VarietySpec> y_spec;

    // inputs, lifted to the extended ring (verification hooks)
    std::vector<Polynomial> in_q, in_a, in_b;
    // ambient constraints instantiated by the row drivers, already lifted
    std::vector<Polynomial> lifted_constraints;

    // the full ideal of Y, ambient constraints included
    Ideal y_ideal() const {
        std::vector<Polynomial> gens = y_generators;
        gens.insert(gens.end(), lifted_constraints.begin(), lifted_constraints.end());
        return Ideal(ring, std::move(gens));
    }
};

// --- codimension 2: the Ax - By format -------------------------------------
// X = q1 a1 + q2 a2, D = V(q1,q2); Y = <s q1 + a2, s q2 - a1> with
// s of weight deg(a1) - deg(q2) = deg(a2) - deg(q1) > 0.  The identity
// q2 g1 - q1 g2 = q1 a1 + q2 a2 holds on the nose.
UnprojectionResult unproject_codim2(const Polynomial& q1, const Polynomial& q2, const Polynomial& a1,
                                    const Polynomial& a2, const std::string& var_name = "s");

// the defining symbolic identity, zero iff it holds
Polynomial codim2_identity_defect(const UnprojectionResult& r);

// --- codimension 3: 5x5 Pfaffians -------------------------------------------
// First row (0, t, a1, a2, a3), second row (-t, 0, b1, b2, b3), lower-right
// block the cross-product matrix of (q1,q2,q3).  deg a_i = e1 - d_i,
// deg b_i = e2 - d_i, t of weight e1 + e2 - d1 - d2 - d3 > 0.
// hypersurface degrees (e1, e2) are inferred from the borders when possible;
// pass them explicitly for degenerate (zero) borders
AntisymmetricMatrix km_matrix_codim3(const std::vector<Polynomial>& q, const std::vector<Polynomial>& a,
                                     const std::vector<Polynomial>& b, const std::string& var_name = "t",
                                     std::optional<std::pair<long long, long long>> degrees = std::nullopt);

UnprojectionResult unproject_codim3(const std::vector<Polynomial>& q, const std::vector<Polynomial>& a,
                                    const std::vector<Polynomial>& b, const std::string& var_name = "t");

// --- general Pfaffian extension ---------------------------------------------
// M odd antisymmetric with Pfaffians f_i, X = <h1, h2> with h1 = sum a_i f_i,
// h2 = sum b_i f_i.  N is the (n+2)x(n+2) bordered matrix; Y its maximal
// Pfaffians, exceptional ideal <f_1..f_n>.
AntisymmetricMatrix km_extension_matrix(const AntisymmetricMatrix& M, const std::vector<Polynomial>& a,
                                        const std::vector<Polynomial>& b, const std::string& var_name = "t",
                                        std::optional<std::pair<long long, long long>> border_twice = std::nullopt);

UnprojectionResult unproject_pfaffian_extension(const AntisymmetricMatrix& M, const std::vector<Polynomial>& a,
                                                const std::vector<Polynomial>& b,
                                                const std::string& var_name = "t");

// Generators the Kustin-Miller format predicts for the maximal Pfaffians of
// the extension matrix, in matching order and sign: used as the symbolic
// identity oracle.  Entry 0 is sum b_i f_i, entry 1 is sum a_i f_i, entry
// 2+i is +-(t f_i - sum_{j<k} sgn (a_j b_k - a_k b_j) Pf(M omit i,j,k)).
std::vector<Polynomial> km_predicted_generators(const AntisymmetricMatrix& M, const std::vector<Polynomial>& a,
                                                const std::vector<Polynomial>& b, const Polynomial& t);

// --- Tom and Jerry -----------------------------------------------------------
// The two 5x5 linear formats embedding D = V(l1..l4) (cut on the ambient
// sheet) into a Pfaffian threefold; transcribed as printed.  The printed
// Jerry matrix uses l3 at both (1,4) and (2,4); passing `fifth` replaces the
// (2,4) entry by an independent form.
AntisymmetricMatrix tom_matrix(const std::vector<Polynomial>& l, const std::vector<Polynomial>& h);
AntisymmetricMatrix jerry_matrix(const std::vector<Polynomial>& l, const std::vector<Polynomial>& h,
                                 const std::optional<Polynomial>& fifth = std::nullopt);

// --- Segre cone targets -------------------------------------------------------
enum class SegreKind { P2xP2, P1xP1xP1 };

// Homogeneous ideal of the cone over the Segre embedding (one extra vertex
// variable absent from the generators): 2x2 minors of the generic 3x3 for
// P2xP2, the 9 quadrics of the trilinear kernel for P1xP1xP1.
Ideal segre_cone_ideal(SegreKind kind, Field field);

// --- table-row driver ---------------------------------------------------------
// Instantiate a (D subset X) pair sharing an ambient and run the requested
// constructor; mechanism is one of codim2, codim3, extend, tom, jerry.
// Seeded constraints are shared between D, X and Y.
UnprojectionResult unproject_pair(const VarietySpec& X, const VarietySpec& D, std::uint64_t seed,
                                  const std::string& mechanism);

}  // namespace kmu
