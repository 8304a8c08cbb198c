#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmu/ideal.hpp"
#include "kmu/matrix.hpp"

namespace kmu {

// Ambient constraint: a generic hypersurface of fixed degree (the T_e of the
// tables) or a sheet of 4x4 Pfaffians of a 5x5 matrix with a fixed degree
// profile (the tables' "Pf", generic linear unless stated otherwise).
struct Constraint {
    enum class Kind { hypersurface, pfaffian };
    Kind kind = Kind::hypersurface;
    long long degree = 0;            // hypersurface
    std::vector<int> twice_profile;  // pfaffian row weights, doubled

    static Constraint hypersurface(long long d) { return {Kind::hypersurface, d, {}}; }
    static Constraint pfaffian_sheet(std::vector<int> twice = {1, 1, 1, 1, 1}) {
        return {Kind::pfaffian, 0, std::move(twice)};
    }

    long long adjunction() const;  // contribution to the dualizing degree
    int codim() const { return kind == Kind::hypersurface ? 1 : 3; }
    long long degree_factor() const;  // contribution to Bezout products
    bool operator==(const Constraint&) const = default;
};

struct AmbientSpace {
    std::vector<int> weights;
    Field field = Field::prime(101);
    std::vector<Constraint> constraints;

    RingPtr ring() const { return GradedRing::weighted(weights, field); }
    long long weight_sum() const;
    long long weight_product() const;
    int weight_one_count() const;
    bool operator==(const AmbientSpace&) const = default;
};

struct Presentation {
    enum class Kind { ci, pfaffian, explicit_ideal };
    Kind kind = Kind::ci;
    std::vector<long long> ci;            // CI degrees (constraints not repeated here)
    std::vector<int> twice_profile;       // pfaffian presentation
    std::vector<std::string> generators;  // explicit ideal, polynomial text

    static Presentation complete_intersection(std::vector<long long> degrees) {
        return {Kind::ci, std::move(degrees), {}, {}};
    }
    static Presentation pfaffian(std::vector<int> twice) { return {Kind::pfaffian, {}, std::move(twice), {}}; }
    static Presentation explicit_ideal(std::vector<std::string> gens) {
        return {Kind::explicit_ideal, {}, {}, std::move(gens)};
    }
    bool operator==(const Presentation&) const = default;
};

struct VarietySpec {
    std::string name;
    AmbientSpace ambient;
    Presentation presentation;
};

// every declared degree admits a monomial, pfaffian profiles are odd-sized
void validate_spec(const VarietySpec& v);

// twist k with omega = O(k): CI and explicit presentations use
// sum(degrees) + sum(constraint adjunctions) - sum(weights); 5x5 Pfaffian
// presentations use 2*sum(row weights) in place of the equation degrees.
long long dualizing_degree(const VarietySpec& v);

// weight of the adjoined unprojection variable, k_X - k_D > 0
long long unprojection_weight(const VarietySpec& X, const VarietySpec& D);

// anticanonical degree of a CI del Pezzo: product of defining degrees over
// the weight product; requires k_D = -1 and an integer result
long long delpezzo_degree(const VarietySpec& D);
Scalar delpezzo_degree_rational(const VarietySpec& D);

// H^3 of the (threefold) spec by Bezout bookkeeping, as an exact rational
Scalar h3_degree(const VarietySpec& v);

int spec_codim(const VarietySpec& v);

struct Instance {
    Ideal ideal;                              // all generators, constraints included
    std::vector<Polynomial> constraint_gens;  // instantiated constraints only
    std::vector<Polynomial> presentation_gens;
    std::optional<AntisymmetricMatrix> matrix;  // pfaffian presentations
};

// seeded generic member; deterministic per (spec, seed)
Instance instantiate(const VarietySpec& v, std::uint64_t seed);

// Hilbert numerator of a 5x5 Pfaffian profile: 1 - sum t^(s-wi) + sum
// t^(s+wi) - t^(2s); degree_factor()/h3 bookkeeping evaluates it at 1 after
// stripping the (1-t)^3
std::vector<long long> pfaffian_profile_numerator(const std::vector<int>& twice);
long long pfaffian_profile_degree(const std::vector<int>& twice);

}  // namespace kmu
