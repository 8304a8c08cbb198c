#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmu/parser.hpp"
#include "kmu/unprojection.hpp"

using namespace kmu;

namespace {

const Field F101 = Field::prime(101);

std::vector<Polynomial> forms(const RingPtr& ring, const std::vector<long long>& degs, Rng rng,
                              const std::string& label) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < degs.size(); ++i)
        out.push_back(random_form(ring, degs[i], rng.split(label + std::to_string(i))).poly);
    return out;
}

bool equal_up_to_sign(const Polynomial& a, const Polynomial& b) { return a == b || a == -b; }

}  // namespace

TEST_CASE("codim2: quintic containing a cubic-linear complete intersection") {
    auto ring = GradedRing::projective(5, F101);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(seed);
        auto q = forms(ring, {3, 1}, rng, "q");
        auto a = forms(ring, {2, 4}, rng, "a");
        auto r = unproject_codim2(q[0], q[1], a[0], a[1]);
        CHECK(r.ring->nvars() == 6);
        CHECK(r.ring->weight(5) == 1);  // s-weight = 5 - 3 - 1
        CHECK(r.y_generators[0].weighted_degree() == 4);
        CHECK(r.y_generators[1].weighted_degree() == 2);  // Y_{2,4} in P^5
        CHECK(codim2_identity_defect(r).is_zero());
        // the unprojection point lies on Y
        for (const auto& g : r.y_generators) CHECK(g.evaluate(r.point).is_zero());
        // exceptional ideal is <q1,q2> downstairs
        CHECK(r.exceptional.generators().size() == 2);
    }
}

TEST_CASE("codim2: both table splittings of the quintic") {
    auto ring = GradedRing::projective(5, F101);
    Rng rng(2);
    auto q = forms(ring, {2, 2}, rng, "q");
    auto a = forms(ring, {3, 3}, rng, "a");
    auto r = unproject_codim2(q[0], q[1], a[0], a[1]);
    CHECK(r.y_generators[0].weighted_degree() == 3);
    CHECK(r.y_generators[1].weighted_degree() == 3);  // Y_{3,3} in P^5
    CHECK(codim2_identity_defect(r).is_zero());
}

TEST_CASE("codim2 degree mismatch is rejected") {
    auto ring = GradedRing::projective(5, F101);
    Rng rng(2);
    auto q = forms(ring, {3, 1}, rng, "q");
    auto a = forms(ring, {4, 4}, rng, "a");
    CHECK_THROWS_AS(unproject_codim2(q[0], q[1], a[0], a[1]), DomainError);
    // s-weight zero: quintic = q1 a1 + q2 a2 with deg q = (5,5) is impossible,
    // use deg q = (2,3), a = (3,2): weight = 5 - 2 - 3 = 0
    auto q0 = forms(ring, {2, 3}, rng, "q0");
    auto a0 = forms(ring, {3, 2}, rng, "a0");
    CHECK_THROWS_AS(unproject_codim2(q0[0], q0[1], a0[0], a0[1]), DomainError);
}

TEST_CASE("km 5x5 matrix and its Pfaffians") {
    // example-6 degrees: q quadric, a linear, b quadric in P(1^5,2)
    auto ring = GradedRing::weighted({1, 1, 1, 1, 1, 2}, F101);
    Rng rng(6);
    auto q = forms(ring, {2, 2, 2}, rng, "q");
    auto a = forms(ring, {1, 1, 1}, rng, "a");
    auto b = forms(ring, {2, 2, 2}, rng, "b");
    auto m = km_matrix_codim3(q, a, b);
    CHECK(m.size() == 5);
    CHECK(m.ring()->nvars() == 7);
    CHECK(m.ring()->weight(6) == 1);  // t-weight = 3 + 4 - 6

    // Pfaffian degrees (4,3,3,3,3) match the X_{3,4} presentation
    std::multiset<long long> degs;
    for (const auto& f : m.maximal_pfaffians()) degs.insert(f.weighted_degree());
    CHECK(degs == std::multiset<long long>{3, 3, 3, 3, 4});

    // deleting the first row/column gives sum b_i q_i
    auto ext = m.ring();
    Polynomial expect = Polynomial::zero(ext);
    for (int i = 0; i < 3; ++i) expect += b[i].lift(ext) * q[i].lift(ext);
    CHECK(equal_up_to_sign(m.pfaffian_omitting(0), expect));
}

TEST_CASE("km identity: the five Pfaffians match the predicted generators") {
    auto ring = GradedRing::weighted({1, 1, 1, 1, 1, 2}, F101);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Rng rng(seed);
        auto q = forms(ring, {2, 2, 2}, rng, "q");
        auto a = forms(ring, {1, 1, 1}, rng, "a");
        auto b = forms(ring, {2, 2, 2}, rng, "b");
        auto r = unproject_codim3(q, a, b);
        auto t = Polynomial::variable(r.ring, r.unproj_var);
        // rebuild the base matrix to feed the predictor
        auto base_matrix = [&] {
            long long d1 = 2, d2 = 2, d3 = 2;
            AntisymmetricMatrix M(ring, {static_cast<int>(d2 + d3 - d1), static_cast<int>(d1 + d3 - d2),
                                         static_cast<int>(d1 + d2 - d3)});
            M.set(0, 1, q[2]);
            M.set(0, 2, -q[1]);
            M.set(1, 2, q[0]);
            return M;
        }();
        auto predicted = km_predicted_generators(base_matrix, a, b, t);
        REQUIRE(predicted.size() == r.y_generators.size());
        for (std::size_t i = 0; i < predicted.size(); ++i) CHECK(r.y_generators[i] == predicted[i]);
        // h1, h2 and t q_i - 2x2 minors, up to sign
        Polynomial h1 = Polynomial::zero(r.ring), h2 = Polynomial::zero(r.ring);
        for (int i = 0; i < 3; ++i) {
            h1 += a[i].lift(r.ring) * q[i].lift(r.ring);
            h2 += b[i].lift(r.ring) * q[i].lift(r.ring);
        }
        CHECK(equal_up_to_sign(r.y_generators[0], h2));
        CHECK(equal_up_to_sign(r.y_generators[1], h1));
        CHECK(equal_up_to_sign(
            r.y_generators[2],
            t * q[0].lift(r.ring) -
                (a[1].lift(r.ring) * b[2].lift(r.ring) - a[2].lift(r.ring) * b[1].lift(r.ring))));
    }
}

TEST_CASE("degenerate zero borders") {
    auto ring = GradedRing::weighted({1, 1, 1, 1, 1, 2}, F101);
    Rng rng(4);
    auto q = forms(ring, {2, 2, 2}, rng, "q");
    std::vector<Polynomial> z(3, Polynomial::zero(ring));
    auto m = km_matrix_codim3(q, z, z, "t", {{3, 4}});
    auto f = m.maximal_pfaffians();
    auto t = Polynomial::variable(m.ring(), m.ring()->nvars() - 1);
    CHECK(f[0].is_zero());
    CHECK(f[1].is_zero());
    for (int i = 0; i < 3; ++i) CHECK(equal_up_to_sign(f[2 + i], t * q[i].lift(m.ring())));
    // without explicit degrees the degenerate input is rejected
    CHECK_THROWS_AS(km_matrix_codim3(q, z, z), DomainError);
}

TEST_CASE("extension at n=5: the 7x7 all-linear family") {
    auto ring = GradedRing::projective(6, F101);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        Rng rng(seed);
        auto M = AntisymmetricMatrix::generic(ring, {1, 1, 1, 1, 1}, rng.split("M"));
        auto a = forms(ring, {1, 1, 1, 1, 1}, rng, "a");
        auto b = forms(ring, {1, 1, 1, 1, 1}, rng, "b");
        auto r = unproject_pfaffian_extension(M, a, b);
        REQUIRE(r.matrix.has_value());
        CHECK(r.matrix->size() == 7);
        // all entries linear, so all 7 Pfaffians are cubics
        for (const auto& g : r.y_generators) CHECK(g.weighted_degree() == 3);
        auto t = Polynomial::variable(r.ring, r.unproj_var);
        auto predicted = km_predicted_generators(M, a, b, t);
        for (std::size_t i = 0; i < predicted.size(); ++i) CHECK(r.y_generators[i] == predicted[i]);
        // projection: h1 and h2 have no t and generate the X ideal
        CHECK(r.y_generators[0].try_weighted_degree().has_value());
        for (const auto& tm : r.y_generators[0].terms()) CHECK(tm.mono[r.unproj_var] == 0);
    }
}

TEST_CASE("elimination of t recovers X up to saturation (seeded)") {
    auto ring = GradedRing::weighted({1, 1, 1, 1, 1, 2}, F101);
    Rng rng(12);
    auto q = forms(ring, {2, 2, 2}, rng, "q");
    auto a = forms(ring, {1, 1, 1}, rng, "a");
    auto b = forms(ring, {2, 2, 2}, rng, "b");
    auto r = unproject_codim3(q, a, b);
    Ideal Y = r.y_ideal();
    Ideal E = eliminate(Y, {static_cast<int>(r.unproj_var)});
    std::vector<Polynomial> down;
    for (const auto& g : E.generators()) down.push_back(g.drop_to(ring));
    Ideal Edown(ring, down);
    Ideal X(ring, {r.y_generators[1].drop_to(ring), r.y_generators[0].drop_to(ring)});
    CHECK(contains(Edown, X));  // X lies in the eliminated ideal
    // the projected ideal sits inside the exceptional locus's ideal
    CHECK(contains(r.exceptional, Edown));
    Ideal sat = saturate(Edown, r.exceptional);
    CHECK(ideal_equal(sat, saturate(X, r.exceptional)));
    CHECK(ideal_equal(sat, X));
}

TEST_CASE("tom and jerry formats") {
    auto ring = GradedRing::projective(9, F101);  // P^8
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(seed);
        auto l = forms(ring, {1, 1, 1, 1}, rng, "l");
        auto h4 = forms(ring, {1, 1, 1, 1}, rng, "h");
        auto h3 = std::vector<Polynomial>(h4.begin(), h4.begin() + 3);
        Ideal L(ring, l);

        auto tom = tom_matrix(l, h4);
        auto tf = tom.maximal_pfaffians();
        CHECK(tf.size() == 5);
        for (const auto& f : tf) {
            if (f.is_zero()) continue;
            CHECK(f.weighted_degree() == 2);
            CHECK(ideal_contains_poly(L, f));  // containment of D in the Tom variety
        }

        auto jerry = jerry_matrix(l, h3);
        for (const auto& f : jerry.maximal_pfaffians()) {
            if (f.is_zero()) continue;
            CHECK(ideal_contains_poly(L, f));
        }
        // printed Jerry repeats l3 at (1,4) and (2,4) [1-based]
        CHECK(jerry.at(0, 3) == l[2]);
        CHECK(jerry.at(1, 3) == l[2]);
        // the variant takes an independent fifth form there; its Pfaffians
        // land in <l1..l4,l5> but no longer all contain V(l1..l4), which is
        // why "as printed" is the default
        auto fifth = random_form(ring, 1, rng.split("fifth")).poly;
        auto jerry2 = jerry_matrix(l, h3, fifth);
        CHECK(jerry2.at(1, 3) == fifth);
        Ideal L5(ring, {l[0], l[1], l[2], l[3], fifth});
        bool all_in_l4 = true;
        for (const auto& f : jerry2.maximal_pfaffians()) {
            if (f.is_zero()) continue;
            CHECK(ideal_contains_poly(L5, f));
            if (!ideal_contains_poly(L, f)) all_in_l4 = false;
        }
        CHECK(!all_in_l4);
    }
}

TEST_CASE("tom with zero h collapses") {
    auto ring = GradedRing::projective(9, F101);
    Rng rng(3);
    auto l = forms(ring, {1, 1, 1, 1}, rng, "l");
    std::vector<Polynomial> z(4, Polynomial::zero(ring));
    auto tom = tom_matrix(l, z);
    for (const auto& f : tom.maximal_pfaffians())
        if (!f.is_zero()) {
            // only the first Pfaffian (omitting the h row) survives
            CHECK(equal_up_to_sign(f, l[0] * l[3] - l[1] * l[2]));
        }
    // nonlinear input is rejected
    auto quad = random_form(ring, 2, rng.split("2")).poly;
    CHECK_THROWS_AS(tom_matrix({l[0], l[1], l[2], quad}, l), DomainError);
}

TEST_CASE("segre cone ideals") {
    auto p22 = segre_cone_ideal(SegreKind::P2xP2, F101);
    CHECK(p22.generators().size() == 9);
    CHECK(p22.ring()->nvars() == 10);
    for (const auto& g : p22.generators()) {
        CHECK(g.weighted_degree() == 2);
        for (const auto& t : g.terms()) CHECK(t.mono[9] == 0);  // vertex absent
    }
    auto dd22 = projective_dimension_and_degree(p22);
    CHECK(dd22.dimension == 5);  // cone over the 4-fold

    auto p111 = segre_cone_ideal(SegreKind::P1xP1xP1, F101);
    CHECK(p111.generators().size() == 9);
    CHECK(p111.ring()->nvars() == 9);
    auto dd111 = projective_dimension_and_degree(p111);
    CHECK(dd111.dimension == 4);  // cone over the 3-fold

    // generators vanish on the parameterized points z_abc = x_a y_b u_c
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        Scalar x[2], y[2], u[2];
        for (int i = 0; i < 2; ++i) {
            x[i] = Scalar::of_int(static_cast<std::int64_t>(rng.below(101)), F101);
            y[i] = Scalar::of_int(static_cast<std::int64_t>(rng.below(101)), F101);
            u[i] = Scalar::of_int(static_cast<std::int64_t>(rng.below(101)), F101);
        }
        std::vector<Scalar> pt;
        for (int i = 0; i < 8; ++i) pt.push_back(x[(i >> 2) & 1] * y[(i >> 1) & 1] * u[i & 1]);
        pt.push_back(Scalar::of_int(static_cast<std::int64_t>(rng.below(101)), F101));  // vertex free
        for (const auto& g : p111.generators()) CHECK(g.evaluate(pt).is_zero());
    }
}

TEST_CASE("unproject_pair drives a codim-2 table row") {
    // row: T_6 in P(1^2,2^2,3^2), D_{2,3}, X_{6}: Y_{3,4,6} in P(1^3,2^2,3^2)
    AmbientSpace T{{1, 1, 2, 2, 3, 3}, F101, {Constraint::hypersurface(6)}};
    VarietySpec D{"D_{2,3,6}", T, Presentation::complete_intersection({2, 3})};
    VarietySpec X{"X_{6,6}", T, Presentation::complete_intersection({6})};
    auto r = unproject_pair(X, D, 17, "codim2");
    REQUIRE(r.y_spec.has_value());
    CHECK(r.y_spec->ambient.weights == std::vector<int>{1, 1, 2, 2, 3, 3, 1});
    std::multiset<long long> ydeg(r.y_spec->presentation.ci.begin(), r.y_spec->presentation.ci.end());
    CHECK(ydeg == std::multiset<long long>{3, 4});
    CHECK(r.lifted_constraints.size() == 1);
    CHECK(codim2_identity_defect(r).is_zero());
    CHECK(r.y_ideal().generators().size() == 3);
    // determinism
    auto r2 = unproject_pair(X, D, 17, "codim2");
    for (std::size_t i = 0; i < r.y_generators.size(); ++i) CHECK(r.y_generators[i] == r2.y_generators[i]);
}

TEST_CASE("unproject_pair drives example 6") {
    AmbientSpace amb{{1, 1, 1, 1, 1, 2}, F101, {}};
    VarietySpec D{"D_{2,2,2}", amb, Presentation::complete_intersection({2, 2, 2})};
    VarietySpec X{"X_{3,4}", amb, Presentation::complete_intersection({3, 4})};
    auto r = unproject_pair(X, D, 21, "codim3");
    REQUIRE(r.y_spec.has_value());
    CHECK(r.y_spec->ambient.weights == std::vector<int>{1, 1, 1, 1, 1, 2, 1});
    CHECK(r.y_spec->presentation.kind == Presentation::Kind::pfaffian);
    // the WPf(1,2) profile: one row of weight 0, four of weight 1
    CHECK(r.matrix->twice_row_weights() == std::vector<int>{0, 2, 2, 2, 2});
    std::multiset<long long> degs;
    for (const auto& g : r.y_generators) degs.insert(g.weighted_degree());
    CHECK(degs == std::multiset<long long>{3, 3, 3, 3, 4});
}
