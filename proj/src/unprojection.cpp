#include "kmu/unprojection.hpp"

#include <numeric>

#include "kmu/linalg.hpp"

namespace kmu {

namespace {

std::vector<Scalar> unprojection_point(const RingPtr& ext) {
    std::vector<Scalar> p(ext->nvars(), Scalar::zero(ext->field()));
    p.back() = Scalar::one(ext->field());
    return p;
}

}  // namespace

UnprojectionResult unproject_codim2(const Polynomial& q1, const Polynomial& q2, const Polynomial& a1,
                                    const Polynomial& a2, const std::string& var_name) {
    const RingPtr& base = q1.ring();
    check_same_ring(base, q2.ring());
    check_same_ring(base, a1.ring());
    check_same_ring(base, a2.ring());
    long long d1 = q1.weighted_degree(), d2 = q2.weighted_degree();
    long long s_weight = a1.weighted_degree() - d2;
    if (s_weight != a2.weighted_degree() - d1)
        throw DomainError("degree mismatch: deg a1 - deg q2 != deg a2 - deg q1");
    if (s_weight <= 0) throw DomainError("unprojection variable weight must be positive");

    RingPtr ext = base->extend(var_name, static_cast<int>(s_weight));
    std::size_t sv = ext->nvars() - 1;
    Polynomial s = Polynomial::variable(ext, sv);

    UnprojectionResult r;
    r.ring = ext;
    r.unproj_var = sv;
    r.in_q = {q1.lift(ext), q2.lift(ext)};
    r.in_a = {a1.lift(ext), a2.lift(ext)};
    r.y_generators = {s * r.in_q[0] + r.in_a[1], s * r.in_q[1] - r.in_a[0]};
    r.exceptional = Ideal(base, {q1, q2});
    r.point = unprojection_point(ext);
    r.mechanism = "codim2";
    return r;
}

Polynomial codim2_identity_defect(const UnprojectionResult& r) {
    if (r.mechanism != "codim2") throw DomainError("codim2 result expected");
    const auto& q = r.in_q;
    const auto& a = r.in_a;
    const auto& g = r.y_generators;
    return q[1] * g[0] - q[0] * g[1] - (q[0] * a[0] + q[1] * a[1]);
}

AntisymmetricMatrix km_extension_matrix(const AntisymmetricMatrix& M, const std::vector<Polynomial>& a,
                                        const std::vector<Polynomial>& b, const std::string& var_name,
                                        std::optional<std::pair<long long, long long>> border_twice) {
    const std::size_t n = M.size();
    if (n % 2 == 0) throw DomainError("extension needs an odd matrix");
    if (a.size() != n || b.size() != n) throw DomainError("need n border entries on each side");
    const RingPtr& base = M.ring();

    // border weights from the degree profile: deg a_i = e1 - deg f_i
    auto border_weight = [&](const std::vector<Polynomial>& v, const char* side) {
        std::optional<long long> w2;
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i].is_zero()) continue;
            long long cand = 2 * v[i].weighted_degree() - M.twice_row_weights()[i];
            if (w2 && *w2 != cand)
                throw DomainError(std::string(side) + " border degrees are inconsistent with the profile");
            w2 = cand;
        }
        if (!w2) throw DomainError(std::string(side) + " border is identically zero (pass the degrees explicitly)");
        return *w2;
    };
    long long v1 = border_twice ? border_twice->first : border_weight(a, "a");
    long long v2 = border_twice ? border_twice->second : border_weight(b, "b");
    long long t2 = v1 + v2;
    if (t2 <= 0 || t2 % 2) throw DomainError("unprojection variable weight must be a positive integer");

    RingPtr ext = base->extend(var_name, static_cast<int>(t2 / 2));
    std::vector<int> w2;
    w2.push_back(static_cast<int>(v1));
    w2.push_back(static_cast<int>(v2));
    for (int w : M.twice_row_weights()) w2.push_back(w);

    AntisymmetricMatrix N(ext, std::move(w2));
    N.set(0, 1, Polynomial::variable(ext, ext->nvars() - 1));
    for (std::size_t i = 0; i < n; ++i) {
        N.set(0, 2 + i, a[i].lift(ext));
        N.set(1, 2 + i, b[i].lift(ext));
        for (std::size_t j = i + 1; j < n; ++j) N.set(2 + i, 2 + j, M.at(i, j).lift(ext));
    }
    return N;
}

UnprojectionResult unproject_pfaffian_extension(const AntisymmetricMatrix& M, const std::vector<Polynomial>& a,
                                                const std::vector<Polynomial>& b,
                                                const std::string& var_name) {
    AntisymmetricMatrix N = km_extension_matrix(M, a, b, var_name);
    UnprojectionResult r;
    r.ring = N.ring();
    r.unproj_var = r.ring->nvars() - 1;
    r.y_generators = N.maximal_pfaffians();
    r.exceptional = Ideal(M.ring(), M.maximal_pfaffians());
    r.point = unprojection_point(r.ring);
    r.mechanism = "pfaffian-extension";
    for (const auto& p : a) r.in_a.push_back(p.lift(r.ring));
    for (const auto& p : b) r.in_b.push_back(p.lift(r.ring));
    r.matrix = std::move(N);
    return r;
}

AntisymmetricMatrix km_matrix_codim3(const std::vector<Polynomial>& q, const std::vector<Polynomial>& a,
                                     const std::vector<Polynomial>& b, const std::string& var_name,
                                     std::optional<std::pair<long long, long long>> degrees) {
    if (q.size() != 3 || a.size() != 3 || b.size() != 3) throw DomainError("three q, a and b each expected");
    const RingPtr& base = q[0].ring();
    long long d1 = q[0].weighted_degree(), d2 = q[1].weighted_degree(), d3 = q[2].weighted_degree();
    // cross-product block of (q1,q2,q3): (3,4) = q3, (3,5) = -q2, (4,5) = q1
    std::vector<int> w2 = {static_cast<int>(d2 + d3 - d1), static_cast<int>(d1 + d3 - d2),
                           static_cast<int>(d1 + d2 - d3)};
    AntisymmetricMatrix M(base, std::move(w2));
    M.set(0, 1, q[2]);
    M.set(0, 2, -q[1]);
    M.set(1, 2, q[0]);
    std::optional<std::pair<long long, long long>> border;
    if (degrees) border = {{2 * degrees->first - (d1 + d2 + d3), 2 * degrees->second - (d1 + d2 + d3)}};
    return km_extension_matrix(M, a, b, var_name, border);
}

UnprojectionResult unproject_codim3(const std::vector<Polynomial>& q, const std::vector<Polynomial>& a,
                                    const std::vector<Polynomial>& b, const std::string& var_name) {
    if (q.size() != 3) throw DomainError("three q expected");
    const RingPtr& base = q[0].ring();
    long long d1 = q[0].weighted_degree(), d2 = q[1].weighted_degree(), d3 = q[2].weighted_degree();
    AntisymmetricMatrix M(base, {static_cast<int>(d2 + d3 - d1), static_cast<int>(d1 + d3 - d2),
                                 static_cast<int>(d1 + d2 - d3)});
    M.set(0, 1, q[2]);
    M.set(0, 2, -q[1]);
    M.set(1, 2, q[0]);
    UnprojectionResult r = unproject_pfaffian_extension(M, a, b, var_name);
    r.mechanism = "codim3";
    r.exceptional = Ideal(base, q);  // == the maximal Pfaffians of the cross block
    for (const auto& p : q) r.in_q.push_back(p.lift(r.ring));
    return r;
}

std::vector<Polynomial> km_predicted_generators(const AntisymmetricMatrix& M, const std::vector<Polynomial>& a,
                                                const std::vector<Polynomial>& b, const Polynomial& t) {
    const std::size_t n = M.size();
    const RingPtr& ext = t.ring();
    std::vector<Polynomial> f = M.maximal_pfaffians();
    std::vector<Polynomial> fl, al, bl;
    for (auto& p : f) fl.push_back(p.lift(ext));
    for (auto& p : a) al.push_back(p.ring().get() == ext.get() || p.ring()->same_as(*ext) ? p : p.lift(ext));
    for (auto& p : b) bl.push_back(p.ring().get() == ext.get() || p.ring()->same_as(*ext) ? p : p.lift(ext));

    std::vector<Polynomial> out;
    Polynomial h2 = Polynomial::zero(ext), h1 = Polynomial::zero(ext);
    for (std::size_t i = 0; i < n; ++i) {
        h2 += bl[i] * fl[i];
        h1 += al[i] * fl[i];
    }
    out.push_back(h2);
    out.push_back(-h1);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial g = t * fl[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (k == i) continue;
                // sign of (i,j,k) as a permutation of its sorted order,
                // times the sub-Pfaffian sign (-1)^(i+j+k+1)
                int perm = (i < j) ? +1 : (i < k ? -1 : +1);
                int sub = ((i + j + k) % 2) ? +1 : -1;
                std::vector<std::size_t> keep;
                for (std::size_t m = 0; m < n; ++m)
                    if (m != i && m != j && m != k) keep.push_back(m);
                Polynomial pf = M.pfaffian(keep).lift(ext);
                Polynomial minor = al[j] * bl[k] - al[k] * bl[j];
                if (perm * sub > 0)
                    g -= minor * pf;
                else
                    g += minor * pf;
            }
        }
        out.push_back(g);
    }
    return out;
}

AntisymmetricMatrix tom_matrix(const std::vector<Polynomial>& l, const std::vector<Polynomial>& h) {
    if (l.size() != 4 || h.size() != 4) throw DomainError("tom format needs l1..l4 and h1..h4");
    const RingPtr& ring = l[0].ring();
    for (const auto& p : l)
        if (!p.is_zero() && p.weighted_degree() != 1) throw DomainError("tom entries must be linear");
    for (const auto& p : h)
        if (!p.is_zero() && p.weighted_degree() != 1) throw DomainError("tom entries must be linear");
    AntisymmetricMatrix m(ring, {1, 1, 1, 1, 1});
    m.set(0, 1, h[0]);
    m.set(0, 2, h[1]);
    m.set(0, 3, h[2]);
    m.set(0, 4, h[3]);
    m.set(1, 3, l[0]);
    m.set(1, 4, l[1]);
    m.set(2, 3, l[2]);
    m.set(2, 4, l[3]);
    return m;
}

AntisymmetricMatrix jerry_matrix(const std::vector<Polynomial>& l, const std::vector<Polynomial>& h,
                                 const std::optional<Polynomial>& fifth) {
    if (l.size() != 4 || h.size() != 3) throw DomainError("jerry format needs l1..l4 and h1..h3");
    const RingPtr& ring = l[0].ring();
    for (const auto& p : l)
        if (!p.is_zero() && p.weighted_degree() != 1) throw DomainError("jerry entries must be linear");
    for (const auto& p : h)
        if (!p.is_zero() && p.weighted_degree() != 1) throw DomainError("jerry entries must be linear");
    AntisymmetricMatrix m(ring, {1, 1, 1, 1, 1});
    m.set(0, 1, l[0]);
    m.set(0, 2, l[1]);
    m.set(0, 3, l[2]);
    // as printed, l3 appears again at (2,4); the variant takes a fifth form
    m.set(1, 3, fifth ? *fifth : l[2]);
    m.set(1, 4, l[3]);
    m.set(2, 3, h[0]);
    m.set(2, 4, h[1]);
    m.set(3, 4, h[2]);
    return m;
}

Ideal segre_cone_ideal(SegreKind kind, Field field) {
    if (kind == SegreKind::P2xP2) {
        // 3x3 coordinate matrix z[3i+j], vertex variable w absent
        std::vector<std::string> vars;
        for (int i = 0; i < 9; ++i) vars.push_back("z" + std::to_string(i));
        vars.push_back("w");
        RingPtr ring = GradedRing::make(vars, std::vector<int>(10, 1), field);
        auto z = [&](int i, int j) { return Polynomial::variable(ring, 3 * i + j); };
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i)
            for (int k = i + 1; k < 3; ++k)
                for (int j = 0; j < 3; ++j)
                    for (int m = j + 1; m < 3; ++m) gens.push_back(z(i, j) * z(k, m) - z(i, m) * z(k, j));
        return Ideal(ring, std::move(gens));
    }
    // P1xP1xP1: kernel of z_(abc) -> x_a y_b u_c in degree 2
    std::vector<std::string> vars;
    for (int i = 0; i < 8; ++i) vars.push_back("z" + std::to_string(i));
    vars.push_back("w");
    RingPtr ring = GradedRing::make(vars, std::vector<int>(9, 1), field);
    // quadric monomials z_i z_j (i <= j) map to the multidegree
    // (a+a', b+b', c+c') in {0,1,2}^3
    std::vector<std::pair<int, int>> qmon;
    for (int i = 0; i < 8; ++i)
        for (int j = i; j < 8; ++j) qmon.push_back({i, j});
    ScalarMatrix map(27, qmon.size(), field);
    for (std::size_t c = 0; c < qmon.size(); ++c) {
        auto [i, j] = qmon[c];
        int a = ((i >> 2) & 1) + ((j >> 2) & 1);
        int b = ((i >> 1) & 1) + ((j >> 1) & 1);
        int d = (i & 1) + (j & 1);
        map.at(9 * a + 3 * b + d, c) = Scalar::one(field);
    }
    auto kernel = map.kernel_basis();
    std::vector<Polynomial> gens;
    for (const auto& v : kernel) {
        std::vector<Term> terms;
        for (std::size_t c = 0; c < qmon.size(); ++c) {
            if (v[c].is_zero()) continue;
            Monomial m(ring->nvars());
            m.set(qmon[c].first, m[qmon[c].first] + 1);
            m.set(qmon[c].second, m[qmon[c].second] + 1);
            terms.push_back({std::move(m), v[c]});
        }
        gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    return Ideal(ring, std::move(gens));
}

namespace {

std::vector<Polynomial> seeded_forms(const RingPtr& ring, const std::vector<long long>& degrees, Rng rng,
                                     const std::string& label) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        auto rf = random_form(ring, degrees[i], rng.split(label + std::to_string(i)));
        if (rf.empty_basis)
            throw DomainError("degree " + std::to_string(degrees[i]) + " has an empty monomial basis");
        out.push_back(rf.poly);
    }
    return out;
}

std::vector<Polynomial> instantiate_constraints(const AmbientSpace& ambient, Rng rng) {
    RingPtr ring = ambient.ring();
    std::vector<Polynomial> cons;
    int ci = 0;
    for (const auto& c : ambient.constraints) {
        Rng sub = rng.split("constraint" + std::to_string(ci++));
        if (c.kind == Constraint::Kind::hypersurface) {
            auto rf = random_form(ring, c.degree, sub);
            if (rf.empty_basis) throw DomainError("constraint degree has an empty monomial basis");
            cons.push_back(rf.poly);
        } else {
            auto m = AntisymmetricMatrix::generic(ring, c.twice_profile, sub);
            for (auto& f : m.maximal_pfaffians()) cons.push_back(std::move(f));
        }
    }
    return cons;
}

AmbientSpace extended_ambient(const AmbientSpace& ambient, long long new_weight) {
    AmbientSpace ext = ambient;
    ext.weights.push_back(static_cast<int>(new_weight));
    return ext;
}

}  // namespace

UnprojectionResult unproject_pair(const VarietySpec& X, const VarietySpec& D, std::uint64_t seed,
                                  const std::string& mechanism) {
    if (!(X.ambient == D.ambient)) throw RingMismatchError("X and D must share the ambient");
    validate_spec(X);
    validate_spec(D);
    RingPtr ring = X.ambient.ring();
    Rng rng(seed);
    std::vector<Polynomial> cons = instantiate_constraints(X.ambient, rng.split("T"));

    auto finish = [&](UnprojectionResult r, Presentation y_pres) {
        r.seed = seed;
        if (!r.ring->same_as(*ring)) {
            for (const auto& c : cons) r.lifted_constraints.push_back(c.lift(r.ring));
            long long sw = r.ring->weight(r.ring->nvars() - 1);
            VarietySpec y{D.name + " in " + X.name + " unprojected", extended_ambient(X.ambient, sw),
                          std::move(y_pres)};
            r.y_spec = std::move(y);
        } else {
            r.lifted_constraints = cons;
            r.y_spec = VarietySpec{D.name + " in " + X.name + " (" + mechanism + " format)", X.ambient,
                                   std::move(y_pres)};
        }
        return r;
    };

    if (mechanism == "codim2") {
        if (D.presentation.kind != Presentation::Kind::ci || D.presentation.ci.size() != 2)
            throw DomainError("codim2 needs D cut by two equations beyond the shared constraints");
        if (X.presentation.kind != Presentation::Kind::ci || X.presentation.ci.size() != 1)
            throw DomainError("codim2 needs a hypersurface X");
        long long d = X.presentation.ci[0];
        long long d1 = D.presentation.ci[0], d2 = D.presentation.ci[1];
        auto q = seeded_forms(ring, {d1, d2}, rng, "q");
        auto a = seeded_forms(ring, {d - d1, d - d2}, rng, "a");
        UnprojectionResult r = unproject_codim2(q[0], q[1], a[0], a[1]);
        return finish(std::move(r), Presentation::complete_intersection({d - d2, d - d1}));
    }
    if (mechanism == "codim3") {
        if (D.presentation.kind != Presentation::Kind::ci || D.presentation.ci.size() != 3)
            throw DomainError("codim3 needs D cut by three equations beyond the shared constraints");
        if (X.presentation.kind != Presentation::Kind::ci || X.presentation.ci.size() != 2)
            throw DomainError("codim3 needs X cut by two hypersurfaces");
        long long e1 = X.presentation.ci[0], e2 = X.presentation.ci[1];
        const auto& dd = D.presentation.ci;
        auto q = seeded_forms(ring, dd, rng, "q");
        auto a = seeded_forms(ring, {e1 - dd[0], e1 - dd[1], e1 - dd[2]}, rng, "a");
        auto b = seeded_forms(ring, {e2 - dd[0], e2 - dd[1], e2 - dd[2]}, rng, "b");
        UnprojectionResult r = unproject_codim3(q, a, b);
        return finish(std::move(r), Presentation::pfaffian(r.matrix->twice_row_weights()));
    }
    if (mechanism == "extend") {
        if (D.presentation.kind != Presentation::Kind::pfaffian)
            throw DomainError("extend needs a Pfaffian-presented D");
        if (X.presentation.kind != Presentation::Kind::ci || X.presentation.ci.size() != 2)
            throw DomainError("extend needs X cut by two hypersurfaces");
        long long e1 = X.presentation.ci[0], e2 = X.presentation.ci[1];
        auto M = AntisymmetricMatrix::generic(ring, D.presentation.twice_profile, rng.split("matrix"));
        std::vector<long long> da, db;
        for (std::size_t i = 0; i < M.size(); ++i) {
            da.push_back(e1 - M.pfaffian_degree(i));
            db.push_back(e2 - M.pfaffian_degree(i));
        }
        auto a = seeded_forms(ring, da, rng, "a");
        auto b = seeded_forms(ring, db, rng, "b");
        UnprojectionResult r = unproject_pfaffian_extension(M, a, b);
        return finish(std::move(r), Presentation::pfaffian(r.matrix->twice_row_weights()));
    }
    if (mechanism == "tom" || mechanism == "jerry") {
        if (D.presentation.kind != Presentation::Kind::ci || D.presentation.ci.size() != 4)
            throw DomainError("tom/jerry need D cut by four linear forms beyond the shared sheet");
        for (long long d : D.presentation.ci)
            if (d != 1) throw DomainError("tom/jerry sections must be linear");
        auto l = seeded_forms(ring, {1, 1, 1, 1}, rng, "l");
        UnprojectionResult r;
        r.ring = ring;
        r.exceptional = Ideal(ring, l);
        r.mechanism = mechanism;
        if (mechanism == "tom") {
            auto h = seeded_forms(ring, {1, 1, 1, 1}, rng, "h");
            auto m = tom_matrix(l, h);
            r.y_generators = m.maximal_pfaffians();
            r.matrix = std::move(m);
        } else {
            auto h = seeded_forms(ring, {1, 1, 1}, rng, "h");
            auto m = jerry_matrix(l, h);
            r.y_generators = m.maximal_pfaffians();
            r.matrix = std::move(m);
        }
        return finish(std::move(r), Presentation::pfaffian({1, 1, 1, 1, 1}));
    }
    throw DomainError("unknown mechanism: " + mechanism);
}

}  // namespace kmu
