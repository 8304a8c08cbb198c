#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "kmu/polynomial.hpp"

namespace kmu {

struct GroebnerOptions {
    // counts individual reduction steps; exceeding throws BudgetExceededError
    long long max_reductions = 1'000'000;
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> elements;  // reduced, monic, sorted by leading monomial
    long long reductions_used = 0;
};

// Ideal in a graded ring.  Logically immutable; reduced Groebner bases are
// memoized per order (deterministic values, so the lazy cache is benign and
// guarded for concurrent use).
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::wdegrevlex(),
                                  const GroebnerOptions& opts = {}) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::string, std::shared_ptr<const GroebnerBasis>> cache_;

public:
    Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {
        std::lock_guard lk(o.cache_mutex_);
        cache_ = o.cache_;
    }
    Ideal& operator=(const Ideal& o) {
        if (this != &o) {
            ring_ = o.ring_;
            gens_ = o.gens_;
            std::scoped_lock lk(cache_mutex_, o.cache_mutex_);
            cache_ = o.cache_;
        }
        return *this;
    }
};

// --- spec operations ------------------------------------------------------

// I with its reduced basis computed (idempotent)
Ideal groebner_basis(const Ideal& I, const MonomialOrder& order = MonomialOrder::wdegrevlex(),
                     const GroebnerOptions& opts = {});

// unique remainder of f modulo the reduced basis; zero iff f in I
Polynomial normal_form(const Polynomial& f, const Ideal& I, const GroebnerOptions& opts = {});

bool ideal_contains_poly(const Ideal& I, const Polynomial& f, const GroebnerOptions& opts = {});

// J subseteq I, i.e. V(J) contains V(I)
bool contains(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {});

bool ideal_equal(const Ideal& A, const Ideal& B, const GroebnerOptions& opts = {});

// I intersect k[vars outside block]; result lives in the same ring but its
// generators are free of the block variables
Ideal eliminate(const Ideal& I, const std::vector<int>& block, const GroebnerOptions& opts = {});

Ideal ideal_sum(const Ideal& A, const Ideal& B);
Ideal intersect(const Ideal& A, const Ideal& B, const GroebnerOptions& opts = {});

// I : g^infinity (Rabinowitsch trick)
Ideal saturate(const Ideal& I, const Polynomial& g, const GroebnerOptions& opts = {});
// I : J^infinity = intersection of the per-generator saturations
Ideal saturate(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {});
// I : x_i^infinity for homogeneous I (cheap degrevlex division)
Ideal saturate_variable(const Ideal& I, std::size_t var, const GroebnerOptions& opts = {});
// I : m^infinity, m the irrelevant ideal of all variables
Ideal saturate_irrelevant(const Ideal& I, const GroebnerOptions& opts = {});

struct DimDeg {
    int dimension = -1;                     // of Proj(ring/I); -1 = empty
    std::optional<long long> degree;        // when dimension == 0
    long long hilbert_numerator_at_one = 0; // after stripping (1-t) factors
    int numerator_one_multiplicity = 0;
};

// Krull dimension of Proj via independent sets of the initial ideal, degree
// via the Hilbert-series numerator (0-dimensional case).  Requires a
// homogeneous ideal.
DimDeg projective_dimension_and_degree(const Ideal& I, const GroebnerOptions& opts = {});

// Hilbert numerator N(t) of R/(monomial ideal), dense coefficients from t^0
std::vector<long long> hilbert_numerator(const std::vector<Monomial>& gens, const GradedRing& ring);

}  // namespace kmu
