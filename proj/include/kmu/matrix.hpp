#pragma once

#include <vector>

#include "kmu/polynomial.hpp"

namespace kmu {

// Antisymmetric matrix of polynomials with a degree profile: entry (i,j) is
// weighted-homogeneous of degree w_i + w_j for row weights w.  Row weights
// may be half-integers (the weighted Pfaffian families need them), so they
// are stored doubled.
class AntisymmetricMatrix {
public:
    AntisymmetricMatrix(RingPtr ring, std::vector<int> twice_row_weights);

    std::size_t size() const { return n_; }
    const RingPtr& ring() const { return ring_; }
    const std::vector<int>& twice_row_weights() const { return w2_; }
    // degree of entry (i,j); -1 when the profile makes it half-integral
    int entry_degree(std::size_t i, std::size_t j) const;
    // degree of the maximal Pfaffian omitting row i
    long long pfaffian_degree(std::size_t i) const;

    // set the upper-triangle entry (i < j); validates the degree profile
    void set(std::size_t i, std::size_t j, Polynomial p);
    // signed lookup: at(j,i) == -at(i,j), zero diagonal
    Polynomial at(std::size_t i, std::size_t j) const;

    // Pfaffian of the submatrix on the kept indices (recursive first-row
    // expansion); the kept set must have even size
    Polynomial pfaffian(const std::vector<std::size_t>& keep) const;
    // Pfaffian of the full (even-sized) matrix
    Polynomial pfaffian() const;
    // Pfaffian omitting one row/column of an odd-sized matrix
    Polynomial pfaffian_omitting(std::size_t i) const;

    // signed maximal Pfaffians f_i = (-1)^i Pf(omit i) of an odd matrix;
    // the sign makes M f = 0 hold
    std::vector<Polynomial> maximal_pfaffians() const;

    // generic instance: every entry a dense seeded form of profile degree
    static AntisymmetricMatrix generic(const RingPtr& ring, std::vector<int> twice_row_weights, Rng rng);

private:
    RingPtr ring_;
    std::size_t n_;
    std::vector<int> w2_;
    std::vector<Polynomial> upper_;  // (i,j), i<j, row-major

    std::size_t idx(std::size_t i, std::size_t j) const;  // i < j
};

std::vector<int> row_weights_from_spec(const std::vector<int>& twice);

}  // namespace kmu
