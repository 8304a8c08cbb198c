#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmu/invariants.hpp"

using namespace kmu;

namespace {

const Field Q = Field::rationals();

Scalar rat(long long n, long long d = 1) { return Scalar::fraction(n, d, Q); }

// independent oracle: truncate prod(1+w H)/prod(1+d H) to H^3 by direct
// series multiplication, no power sums
struct Series3 {
    Scalar c[4] = {Scalar::one(Q), Scalar::zero(Q), Scalar::zero(Q), Scalar::zero(Q)};
    void mul_linear(long long a) {  // * (1 + aH)
        for (int i = 3; i >= 1; --i) c[i] = c[i] + c[i - 1] * rat(a);
    }
    void div_linear(long long a) {  // * (1 - aH + a^2 H^2 - a^3 H^3)
        Scalar inv[4] = {rat(1), rat(-a), rat(a * a), rat(-a * a * a)};
        Scalar out[4];
        for (int i = 0; i < 4; ++i) {
            out[i] = Scalar::zero(Q);
            for (int j = 0; j <= i; ++j) out[i] = out[i] + c[j] * inv[i - j];
        }
        for (int i = 0; i < 4; ++i) c[i] = out[i];
    }
};

InvariantSet oracle_ci(const std::vector<int>& weights, const std::vector<long long>& degrees) {
    Series3 s;
    for (int w : weights) s.mul_linear(w);
    for (long long d : degrees) s.div_linear(d);
    long long wprod = 1, dprod = 1;
    for (int w : weights) wprod *= w;
    for (long long d : degrees) dprod *= d;
    InvariantSet inv;
    inv.h3 = rat(dprod, wprod);
    for (int w : weights)
        if (w == 1) ++inv.h0;
    if (!s.c[1].is_zero()) return inv;
    inv.c2h = s.c[2] * inv.h3;
    Scalar chi = s.c[3] * inv.h3;
    if (chi.den() == 1) inv.chi = chi.num();
    return inv;
}

void check_eq(const InvariantSet& a, long long h3, long long c2h, long long chi, int h0) {
    CHECK(a.h3 == rat(h3));
    REQUIRE(a.c2h.has_value());
    CHECK(*a.c2h == rat(c2h));
    REQUIRE(a.chi.has_value());
    CHECK(*a.chi == chi);
    CHECK(a.h0 == h0);
}

}  // namespace

TEST_CASE("cascade table complete-intersection rows") {
    check_eq(ci_invariants({1, 1, 1, 1, 1, 3}, {2, 6}), 4, 52, -256, 5);
    check_eq(ci_invariants({1, 1, 1, 1, 1, 1}, {2, 4}), 8, 56, -176, 6);
    check_eq(ci_invariants({1, 1, 1, 1, 1, 1, 1}, {2, 2, 3}), 12, 60, -144, 7);
    check_eq(ci_invariants({1, 1, 1, 1, 1, 1, 1, 1}, {2, 2, 2, 2}), 16, 64, -128, 8);
}

TEST_CASE("quintic against the series oracle") {
    auto impl = ci_invariants({1, 1, 1, 1, 1}, {5});
    check_eq(impl, 5, 50, -200, 5);
    auto oracle = oracle_ci({1, 1, 1, 1, 1}, {5});
    CHECK(impl.h3 == oracle.h3);
    CHECK(*impl.c2h == *oracle.c2h);
    CHECK(*impl.chi == *oracle.chi);
}

TEST_CASE("power sums agree with direct series truncation on many inputs") {
    std::vector<std::pair<std::vector<int>, std::vector<long long>>> cases = {
        {{1, 1, 1, 1, 1, 2}, {3, 4}},       {{1, 1, 1, 1, 2, 2}, {4, 4}},
        {{1, 1, 2, 2, 3, 3}, {6, 6}},       {{1, 1, 1, 2, 5}, {10}},
        {{1, 1, 1, 1, 4}, {8}},             {{1, 1, 1, 1, 1, 1, 3}, {2, 3, 4}},
        {{1, 1, 1, 1, 1, 1}, {3, 3}},       {{1, 1, 1, 1, 1, 1, 1}, {2, 2, 2}},
    };
    for (const auto& [w, d] : cases) {
        auto impl = ci_invariants(w, d);
        auto oracle = oracle_ci(w, d);
        CHECK(impl.h3 == oracle.h3);
        CHECK(impl.c2h.has_value() == oracle.c2h.has_value());
        if (impl.c2h) CHECK(*impl.c2h == *oracle.c2h);
        if (impl.chi && oracle.chi) CHECK(*impl.chi == *oracle.chi);
    }
}

TEST_CASE("derived source invariants of examples 6 and 7") {
    auto x34 = ci_invariants({1, 1, 1, 1, 1, 2}, {3, 4});
    CHECK(x34.h3 == rat(6));
    CHECK(*x34.c2h == rat(48));
    CHECK(x34.h0 == 5);

    auto x44 = ci_invariants({1, 1, 1, 1, 2, 2}, {4, 4});
    CHECK(x44.h3 == rat(4));
    CHECK(*x44.c2h == rat(40));
    // P(1^4,2^2) has four weight-1 coordinates
    CHECK(x44.h0 == 4);
}

TEST_CASE("lemma transitions reproduce examples 6 and 7") {
    auto x34 = ci_invariants({1, 1, 1, 1, 1, 2}, {3, 4});
    auto y6 = transition_invariants(x34, 4, TransitionDirection::unproject);
    CHECK(y6.h3 == rat(10));
    CHECK(*y6.c2h == rat(52));
    CHECK(y6.h0 == 6);
    CHECK(!y6.chi.has_value());

    auto x44 = ci_invariants({1, 1, 1, 1, 2, 2}, {4, 4});
    auto y7 = transition_invariants(x44, 3, TransitionDirection::unproject);
    CHECK(y7.h3 == rat(7));
    CHECK(*y7.c2h == rat(46));
    // with the honest weight-1 count for P(1^4,2^2), the lemma lands on the
    // printed dim|H_Y| = 5 = the weight-1 count of P(1^5,2^2)
    CHECK(y7.h0 == 5);
}

TEST_CASE("degree six transition leaves c2.H unchanged") {
    InvariantSet s{rat(10), rat(40), 6, std::nullopt, std::nullopt};
    auto t = transition_invariants(s, 6, TransitionDirection::unproject);
    CHECK(*t.c2h == rat(40));
    CHECK(t.h3 == rat(16));
}

TEST_CASE("transition and its inverse compose to the identity") {
    InvariantSet s{rat(12), rat(60), 7, -144, std::nullopt};
    for (long long d = 1; d <= 9; ++d) {
        auto fwd = transition_invariants(s, d, TransitionDirection::unproject);
        auto back = transition_invariants(fwd, d, TransitionDirection::project);
        CHECK(back.same_polarization(s));
    }
    CHECK_THROWS_AS(transition_invariants(s, 0, TransitionDirection::unproject), DomainError);
    CHECK_THROWS_AS(transition_invariants(s, 10, TransitionDirection::unproject), DomainError);
}

TEST_CASE("the full cascade") {
    auto start = ci_invariants({1, 1, 1, 1, 1, 3}, {2, 6});
    auto seq = cascade(start, 4, 8);
    REQUIRE(seq.size() == 9);
    for (int i = 0; i < 9; ++i) {
        CHECK(seq[i].h3 == rat(4 + 4 * i));
        CHECK(*seq[i].c2h == rat(52 + 4 * i));
        CHECK(seq[i].h0 == 5 + i);
    }
    CHECK(cascade(start, 4, 0).size() == 1);

    // project direction reproduces the table upward
    InvariantSet top{rat(36), rat(84), 13, std::nullopt, std::nullopt};
    auto up = cascade(top, 4, 8, TransitionDirection::project);
    CHECK(up.back().h3 == rat(4));
    CHECK(*up.back().c2h == rat(52));
    CHECK(up.back().h0 == 5);
}

TEST_CASE("non-Calabi-Yau input yields only H3 and h0") {
    auto inv = ci_invariants({1, 1, 1, 1}, {2});
    CHECK(inv.h3 == rat(2));
    CHECK(inv.h0 == 4);
    CHECK(!inv.c2h.has_value());
    CHECK(!inv.chi.has_value());
}
