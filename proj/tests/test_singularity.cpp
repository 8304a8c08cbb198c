#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmu/parser.hpp"
#include "kmu/singularity.hpp"

using namespace kmu;

namespace {
const Field F101 = Field::prime(101);
}

TEST_CASE("fermat quintic is smooth") {
    auto ring = GradedRing::projective(5, F101);
    Polynomial f = Polynomial::zero(ring);
    for (int i = 0; i < 5; ++i) f += Polynomial::variable(ring, i).pow(5);
    Ideal I(ring, {f});
    auto sing = singular_scheme(I, 1);
    CHECK(projective_dimension_and_degree(sing).dimension == -1);
    auto rep = quasi_smooth_ideal(I, 1);
    CHECK(rep.is_smooth());
    CHECK(rep.method == "jacobian-dimension");
}

TEST_CASE("nodal surface: one node, found as witness and as scheme") {
    auto ring = GradedRing::projective(4, F101);
    // rank-3 quadric in P^3 (x4 unused by the cone structure): node at (0:0:0:1)
    auto f = parse_polynomial("x0*x1 - x2^2", ring);
    Ideal I(ring, {f});
    auto rep = quasi_smooth_ideal(I, 1);
    CHECK(rep.verdict == SingularityReport::Verdict::singular_witness);
    REQUIRE(rep.witness.has_value());
    // the witness is a genuine singular cone point
    for (const auto& g : I.generators()) CHECK(g.evaluate(*rep.witness).is_zero());

    // disabling the witness scan gives the scheme picture: the singular
    // scheme is the point (0:0:0:1)
    auto rep2 = quasi_smooth_ideal(I, 1, {}, 0);
    CHECK(rep2.verdict == SingularityReport::Verdict::isolated);
    CHECK(rep2.dimension == 0);
    REQUIRE(rep2.degree.has_value());
    CHECK(*rep2.degree == 1);
}

TEST_CASE("singular scheme of the quintic containing a plane has degree 16") {
    auto ring = GradedRing::projective(5, F101);
    Rng rng(1);
    auto q1 = random_form(ring, 1, rng.split("q1")).poly;
    auto q2 = random_form(ring, 1, rng.split("q2")).poly;
    auto x = generic_containing({q1, q2}, {5}, rng.split("X"));
    Ideal X(ring, x);
    auto sing = singular_scheme(X, 1, {}, /*saturate=*/false);
    auto dd = projective_dimension_and_degree(sing);
    CHECK(dd.dimension == 0);
    REQUIRE(dd.degree.has_value());
    CHECK(*dd.degree == 16);
    CHECK(*dd.degree == node_count_bezout({1, 1, 4, 4}, {1, 1, 1, 1, 1}));

    // the saturated scheme has the same dimension and degree
    auto sat = singular_scheme(X, 1);
    auto dd2 = projective_dimension_and_degree(sat);
    CHECK(dd2.dimension == 0);
    CHECK(*dd2.degree == 16);
}

TEST_CASE("bezout node counts") {
    CHECK(node_count_bezout({1, 1, 4, 4}, {1, 1, 1, 1, 1}) == 16);
    CHECK(node_count_bezout({3, 1, 2, 4}, {1, 1, 1, 1, 1}) == 24);
    CHECK(node_count_bezout({2, 2, 2, 1, 3}, {1, 1, 1, 1, 1, 2}) == 12);
    CHECK(node_count_bezout({37, 0, 2}, {1, 1, 1}) == 0);
    CHECK_THROWS_AS(node_count_bezout({3}, {2, 1}), DomainError);
}

TEST_CASE("node count for the D_{3,1} splitting of the quintic") {
    // Bezout predicts 24; confirm with the Groebner degree of the node
    // configuration V(q1, q2, a1, a2)
    auto ring = GradedRing::projective(5, F101);
    Rng rng(7);
    auto q1 = random_form(ring, 3, rng.split("q1")).poly;
    auto q2 = random_form(ring, 1, rng.split("q2")).poly;
    auto a1 = random_form(ring, 2, rng.split("a1")).poly;
    auto a2 = random_form(ring, 4, rng.split("a2")).poly;
    Ideal nodes(ring, {q1, q2, a1, a2});
    auto dd = projective_dimension_and_degree(nodes);
    CHECK(dd.dimension == 0);
    REQUIRE(dd.degree.has_value());
    CHECK(*dd.degree == 24);
    CHECK(*dd.degree == node_count_bezout({3, 1, 2, 4}, {1, 1, 1, 1, 1}));
}

TEST_CASE("quasi-smooth spec driver is deterministic per seed") {
    VarietySpec quadric{"Q", AmbientSpace{{1, 1, 1, 1}, F101, {}},
                        Presentation::complete_intersection({2})};
    auto a = quasi_smooth(quadric, 5);
    auto b = quasi_smooth(quadric, 5);
    CHECK(a.verdict == b.verdict);
    CHECK(a.is_smooth());  // generic quadric surface is smooth
}

TEST_CASE("generic complete intersections with no imposed containment are smooth") {
    // ten seeds each for a surface and a threefold family
    VarietySpec quadric{"Q in P^3", AmbientSpace{{1, 1, 1, 1}, F101, {}},
                        Presentation::complete_intersection({2})};
    VarietySpec ci22{"X_{2,2} in P^4", AmbientSpace{{1, 1, 1, 1, 1}, F101, {}},
                     Presentation::complete_intersection({2, 2})};
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CHECK(quasi_smooth(quadric, seed).is_smooth());
        CHECK(quasi_smooth(ci22, seed).is_smooth());
    }
}

TEST_CASE("generic X4 containing D_{2,2,2} is smooth") {
    auto ring = GradedRing::weighted({1, 1, 1, 1, 1, 2}, F101);
    Rng rng(3);
    std::vector<Polynomial> q;
    for (int i = 0; i < 3; ++i) q.push_back(random_form(ring, 2, rng.split("q" + std::to_string(i))).poly);
    auto x4 = generic_containing(q, {4}, rng.split("X"));
    Ideal X(ring, x4);
    auto rep = quasi_smooth_ideal(X, 1);
    CHECK(rep.is_smooth());
}
