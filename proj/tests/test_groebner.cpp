#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "kmu/ideal.hpp"
#include "kmu/linalg.hpp"
#include "kmu/parser.hpp"

using namespace kmu;

namespace {

const Field F101 = Field::prime(101);

Polynomial P(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

Ideal I(const RingPtr& ring, std::initializer_list<std::string> gens) {
    std::vector<Polynomial> v;
    for (const auto& g : gens) v.push_back(P(ring, g));
    return Ideal(ring, std::move(v));
}

// ideal membership in bounded degree by exact linear algebra: for a
// homogeneous ideal, f (homogeneous of degree d) lies in I iff it is a
// k-linear combination of the m*g of degree d
bool member_by_linear_algebra(const Polynomial& f, const Ideal& ideal) {
    const RingPtr& ring = f.ring();
    long long d = f.weighted_degree();
    auto basis = monomial_basis(*ring, d);
    auto col_of = [&](const Monomial& m) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == m) return i;
        throw Error("monomial not in basis");
    };
    std::vector<Polynomial> rows;
    for (const auto& g : ideal.generators()) {
        long long dg = g.weighted_degree();
        if (dg > d) continue;
        for (const auto& m : monomial_basis(*ring, d - dg))
            rows.push_back(g * Polynomial::monomial(ring, m, Scalar::one(ring->field())));
    }
    ScalarMatrix A(rows.size(), basis.size(), ring->field());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& t : rows[i].terms()) A.at(i, col_of(t.mono)) = t.coef;
    ScalarMatrix B(rows.size() + 1, basis.size(), ring->field());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& t : rows[i].terms()) B.at(i, col_of(t.mono)) = t.coef;
    for (const auto& t : f.terms()) B.at(rows.size(), col_of(t.mono)) = t.coef;
    return A.rank() == B.rank();
}

}  // namespace

TEST_CASE("basic reduced bases") {
    auto ring = GradedRing::projective(2, F101);
    auto gb1 = I(ring, {"x0", "x0*x1"}).groebner();
    REQUIRE(gb1.elements.size() == 1);
    CHECK(gb1.elements[0] == P(ring, "x0"));

    auto gb2 = I(ring, {"x0^2 - x1^2", "x0 - x1"}).groebner();
    REQUIRE(gb2.elements.size() == 1);
    CHECK(gb2.elements[0] == P(ring, "x0 - x1"));
}

TEST_CASE("reduced basis is deterministic and permutation independent") {
    auto ring = GradedRing::projective(3, F101);
    auto a = I(ring, {"x0*x1 - x2^2", "x0^2 - x1*x2", "x1^2 - x0*x2"});
    auto b = I(ring, {"x1^2 - x0*x2", "x0*x1 - x2^2", "x0^2 - x1*x2"});
    auto ga = a.groebner().elements;
    auto gb = b.groebner().elements;
    REQUIRE(ga.size() == gb.size());
    for (std::size_t i = 0; i < ga.size(); ++i) CHECK(ga[i] == gb[i]);
}

TEST_CASE("normal form basics") {
    auto ring = GradedRing::projective(3, F101);
    auto ideal = I(ring, {"x0^2 - x1*x2", "x1^3 - x2^3"});
    for (const auto& g : ideal.generators()) CHECK(normal_form(g, ideal).is_zero());
    auto one = Polynomial::constant(ring, 1);
    CHECK(normal_form(one, I(ring, {"x0"})) == one);
    // remainder is unique: reducing twice changes nothing
    auto f = P(ring, "x0^3 + x1^3");
    auto r = normal_form(f, ideal);
    CHECK(normal_form(r, ideal) == r);
}

TEST_CASE("membership matches the linear-algebra oracle on random ideals") {
    auto ring = GradedRing::projective(4, F101);
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Rng rng(seed);
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k)
            gens.push_back(random_form(ring, 2 + static_cast<long long>(rng.split(k).below(2)),
                                       rng.split(100 + k)).poly);
        Ideal ideal(ring, gens);
        // a known member of degree 4
        auto member = gens[0] * random_form(ring, 4 - gens[0].weighted_degree(), rng.split("m")).poly +
                      gens[1] * random_form(ring, 4 - gens[1].weighted_degree(), rng.split("n")).poly;
        // and an arbitrary quartic
        auto probe = random_form(ring, 4, rng.split("p")).poly;
        for (const auto& f : {member, probe}) {
            if (f.is_zero()) continue;
            bool via_gb = normal_form(f, ideal).is_zero();
            bool via_la = member_by_linear_algebra(f, ideal);
            CHECK(via_gb == via_la);
            ++checked;
        }
        CHECK(normal_form(member, ideal).is_zero());
    }
    CHECK(checked >= 100);
}

TEST_CASE("contains") {
    auto ring = GradedRing::projective(5, F101);
    Rng rng(11);
    auto q1 = random_form(ring, 1, rng.split("q1")).poly;
    auto q2 = random_form(ring, 1, rng.split("q2")).poly;
    auto a1 = random_form(ring, 4, rng.split("a1")).poly;
    auto a2 = random_form(ring, 4, rng.split("a2")).poly;
    Ideal D(ring, {q1, q2});
    Ideal X(ring, {q1 * a1 + q2 * a2});
    CHECK(contains(D, X));   // X in <q1,q2>
    CHECK(!contains(X, D));
    CHECK(contains(D, D));
}

TEST_CASE("eliminate") {
    auto ring = GradedRing::projective(3, F101);
    auto ideal = I(ring, {"x0 - x2^2", "x1 - x2^3"});
    auto el = eliminate(ideal, {2});  // the twisted cubic's chart relation
    CHECK(!el.generators().empty());
    for (const auto& g : el.generators())
        for (const auto& t : g.terms()) CHECK(t.mono[2] == 0);
    CHECK(ideal_contains_poly(el, P(ring, "x0^3 - x1^2")));

    // empty block is the identity
    auto same = eliminate(ideal, {});
    CHECK(ideal_equal(same, ideal));
}

TEST_CASE("elimination ideal vanishes on projected points of V(I)") {
    // codim-2 instance: Y = <s q1 + a2, s q2 - a1> in P^4 x s; points of Y
    // project into V(eliminate(Y, s))
    auto ring = GradedRing::projective(5, F101);
    auto ext = ring->extend("s", 1);
    Rng rng(23);
    auto q1 = random_form(ring, 1, rng.split("q1")).poly.lift(ext);
    auto q2 = random_form(ring, 3, rng.split("q2")).poly.lift(ext);
    auto a1 = random_form(ring, 4 - 0, rng.split("a1")).poly.lift(ext);  // deg d-d1 with d=5,d1=1 -> 4
    auto a2 = random_form(ring, 2, rng.split("a2")).poly.lift(ext);      // d-d2 = 2
    auto s = Polynomial::variable(ext, 5);
    Ideal Y(ext, {s * q1 + a2, s * q2 - a1});
    Ideal E = eliminate(Y, {5});
    auto X = q1 * a1 + q2 * a2;  // the projected hypersurface
    CHECK(ideal_contains_poly(E, X));

    int found = 0;
    Rng prng(99);
    while (found < 50) {
        // sample a point on Y: pick x with q1(x) != 0, put s := -a2/q1 and
        // keep it when the remaining equation also vanishes
        std::vector<Scalar> pt;
        for (int i = 0; i < 6; ++i) pt.push_back(Scalar::of_int(static_cast<std::int64_t>(prng.below(101)), F101));
        // solve the last coordinate of x so that X(x) = 0 by scanning F_101
        bool ok = false;
        for (int v = 0; v < 101 && !ok; ++v) {
            pt[4] = Scalar::of_int(v, F101);
            if (!X.evaluate(std::span<const Scalar>(pt.data(), 6)).is_zero()) continue;
            if (q1.evaluate(std::span<const Scalar>(pt.data(), 6)).is_zero()) continue;
            ok = true;
        }
        if (!ok) continue;
        ++found;
        for (const auto& g : E.generators()) CHECK(g.evaluate(pt).is_zero());
    }
}

TEST_CASE("projective dimension and degree") {
    auto ring5 = GradedRing::projective(5, F101);
    auto point = I(ring5, {"x0", "x1", "x2", "x3"});
    auto dd = projective_dimension_and_degree(point);
    CHECK(dd.dimension == 0);
    REQUIRE(dd.degree.has_value());
    CHECK(*dd.degree == 1);

    auto ring4 = GradedRing::projective(4, F101);
    auto hyper = I(ring4, {"x0"});
    auto dd2 = projective_dimension_and_degree(hyper);
    CHECK(dd2.dimension == 2);
    CHECK(!dd2.degree.has_value());

    auto empty = I(ring4, {"x0", "x1", "x2", "x3"});
    CHECK(projective_dimension_and_degree(empty).dimension == -1);

    CHECK_THROWS_AS(projective_dimension_and_degree(I(ring4, {"x0 + x1^2"})),
                    NotHomogeneousError);
}

TEST_CASE("degree agrees with point counting on split zero-dimensional instances") {
    // ideal of an explicit set of rational points = intersection of the
    // point ideals; its GB degree must equal the point count
    auto ring = GradedRing::projective(3, F101);
    Rng rng(5);
    std::vector<std::vector<Scalar>> pts;
    std::set<std::pair<long long, long long>> seen;
    while (pts.size() < 5) {
        long long a = rng.below(101), b = rng.below(101);
        if (!seen.insert({a, b}).second) continue;
        pts.push_back({Scalar::one(F101), Scalar::of_int(a, F101), Scalar::of_int(b, F101)});
    }
    Ideal acc;
    bool first = true;
    for (const auto& p : pts) {
        // point (1 : a : b) -> ideal <x1 - a x0, x2 - b x0>
        Ideal pid(ring, {P(ring, "x1") - Polynomial::constant(ring, p[1].num()) * P(ring, "x0"),
                         P(ring, "x2") - Polynomial::constant(ring, p[2].num()) * P(ring, "x0")});
        acc = first ? pid : intersect(acc, pid);
        first = false;
    }
    auto dd = projective_dimension_and_degree(acc);
    CHECK(dd.dimension == 0);
    REQUIRE(dd.degree.has_value());
    CHECK(*dd.degree == 5);

    // brute-force count of P^2(F_101) rational points of V(acc)
    long long count = 0;
    auto on_variety = [&](const std::vector<Scalar>& pt) {
        for (const auto& g : acc.generators())
            if (!g.evaluate(pt).is_zero()) return false;
        return true;
    };
    for (int a = 0; a < 101; ++a)
        for (int b = 0; b < 101; ++b)
            if (on_variety({Scalar::one(F101), Scalar::of_int(a, F101), Scalar::of_int(b, F101)})) ++count;
    for (int b = 0; b < 101; ++b)
        if (on_variety({Scalar::zero(F101), Scalar::one(F101), Scalar::of_int(b, F101)})) ++count;
    if (on_variety({Scalar::zero(F101), Scalar::zero(F101), Scalar::one(F101)})) ++count;
    CHECK(count == 5);
}

TEST_CASE("saturation and intersection") {
    auto ring = GradedRing::projective(2, F101);
    auto sat = saturate(I(ring, {"x0^2*x1"}), P(ring, "x0"));
    CHECK(ideal_equal(sat, I(ring, {"x1"})));

    auto satv = saturate_variable(I(ring, {"x0^2*x1"}), 0);
    CHECK(ideal_equal(satv, I(ring, {"x1"})));

    auto both = intersect(I(ring, {"x0"}), I(ring, {"x1"}));
    CHECK(ideal_equal(both, I(ring, {"x0*x1"})));

    auto ring3 = GradedRing::projective(3, F101);
    // embedded irrelevant component drops out
    Ideal J = ideal_sum(I(ring3, {"x0"}), I(ring3, {"x1*x2^3", "x1^2"}));
    auto clean = saturate_irrelevant(J);
    CHECK(ideal_equal(clean, I(ring3, {"x0", "x1"})));
}

TEST_CASE("saturation by an ideal") {
    auto ring = GradedRing::projective(3, F101);
    // V(x0) union an embedded piece supported on V(x1,x2)
    Ideal raw(ring, {P(ring, "x0*x1"), P(ring, "x0*x2")});
    Ideal exc = I(ring, {"x1", "x2"});
    auto sat = saturate(raw, exc);
    CHECK(ideal_equal(sat, I(ring, {"x0"})));
}

TEST_CASE("budget is an explicit error") {
    auto ring = GradedRing::projective(4, F101);
    Rng rng(3);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(random_form(ring, 3, rng.split(k)).poly);
    Ideal ideal(ring, gens);
    GroebnerOptions tiny;
    tiny.max_reductions = 5;
    CHECK_THROWS_AS(ideal.groebner(MonomialOrder::wdegrevlex(), tiny), BudgetExceededError);
}

TEST_CASE("groebner over the rationals") {
    auto ring = GradedRing::projective(2, Field::rationals());
    auto gb = I(ring, {"x0^2 - x1^2", "x0 - x1"}).groebner();
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == P(ring, "x0 - x1"));
}
