#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmu/monomial.hpp"
#include "kmu/ring.hpp"
#include "kmu/rng.hpp"

namespace kmu {

struct Term {
    Monomial mono;
    Scalar coef;
};

// Immutable sparse multivariate polynomial.  Terms are kept sorted in
// descending canonical order (wdegrevlex with the ring's weights), zero
// coefficients are never stored, so equality and printing are structural.
class Polynomial {
public:
    Polynomial() = default;  // zero in no ring; only useful as a placeholder

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, std::int64_t v);
    static Polynomial constant(RingPtr ring, const Scalar& v);
    static Polynomial variable(RingPtr ring, std::size_t i);
    static Polynomial monomial(RingPtr ring, Monomial m, Scalar c);
    // sorts, merges duplicates, drops zeros
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }
    const Term& leading_term() const;  // canonical order; throws on zero

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // formal partial derivative
    Polynomial derivative(std::size_t var) const;

    bool is_homogeneous() const;
    // common weighted degree of all terms; throws DomainError on zero input,
    // NotHomogeneousError on mixed degrees
    long long weighted_degree() const;
    // nullopt for zero or inhomogeneous input
    std::optional<long long> try_weighted_degree() const;

    Scalar evaluate(std::span<const Scalar> point) const;

    // map into a ring that has this ring's variables as a prefix
    Polynomial lift(const RingPtr& bigger) const;
    // inverse of lift; throws if a dropped variable occurs
    Polynomial drop_to(const RingPtr& smaller) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// All monomials of the given weighted degree, in a fixed deterministic order.
std::vector<Monomial> monomial_basis(const GradedRing& ring, long long degree);

struct RandomForm {
    Polynomial poly;
    bool empty_basis = false;  // requested degree has no monomials
};

// Dense homogeneous form of the requested weighted degree with seeded
// nonzero coefficients; deterministic per (ring, degree, seed).
RandomForm random_form(const RingPtr& ring, long long degree, Rng rng);
RandomForm random_form(const RingPtr& ring, long long degree, std::uint64_t seed);

}  // namespace kmu
