#include "kmu/singularity.hpp"

#include <algorithm>

#include "kmu/linalg.hpp"

namespace kmu {

std::string SingularityReport::verdict_name() const {
    switch (verdict) {
        case Verdict::smooth: return "smooth";
        case Verdict::isolated: return "isolated(" + std::to_string(degree.value_or(-1)) + ")";
        case Verdict::positive_dimensional: return "positive-dimensional";
        case Verdict::singular_witness: return "singular(witness)";
    }
    return "?";
}

std::vector<std::vector<Polynomial>> jacobian_matrix(const std::vector<Polynomial>& gens) {
    std::vector<std::vector<Polynomial>> jac;
    jac.reserve(gens.size());
    for (const auto& g : gens) {
        std::vector<Polynomial> row;
        row.reserve(g.ring()->nvars());
        for (std::size_t v = 0; v < g.ring()->nvars(); ++v) row.push_back(g.derivative(v));
        jac.push_back(std::move(row));
    }
    return jac;
}

namespace {

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const std::vector<int>& rows,
                    const std::vector<int>& cols, const RingPtr& ring) {
    if (rows.empty()) return Polynomial::constant(ring, 1);
    Polynomial acc = Polynomial::zero(ring);
    std::vector<int> r2(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Polynomial& e = m[rows[0]][cols[k]];
        if (e.is_zero()) continue;
        std::vector<int> c2;
        c2.reserve(cols.size() - 1);
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != k) c2.push_back(cols[t]);
        Polynomial sub = poly_det(m, r2, c2, ring);
        if (k % 2)
            acc -= e * sub;
        else
            acc += e * sub;
    }
    return acc;
}

}  // namespace

std::vector<Polynomial> jacobian_minors(const std::vector<std::vector<Polynomial>>& jac, int size,
                                        const RingPtr& ring) {
    std::vector<Polynomial> out;
    if (jac.empty()) return out;
    const int R = static_cast<int>(jac.size());
    const int C = static_cast<int>(jac[0].size());
    if (size > R || size > C) return out;
    std::vector<int> rsel, csel;
    auto rec_cols = [&](auto&& self, int start) -> void {
        if (static_cast<int>(csel.size()) == size) {
            Polynomial d = poly_det(jac, rsel, csel, ring);
            if (!d.is_zero()) out.push_back(std::move(d));
            return;
        }
        for (int c = start; c < C; ++c) {
            csel.push_back(c);
            self(self, c + 1);
            csel.pop_back();
        }
    };
    auto rec_rows = [&](auto&& self, int start) -> void {
        if (static_cast<int>(rsel.size()) == size) {
            rec_cols(rec_cols, 0);
            return;
        }
        for (int r = start; r < R; ++r) {
            rsel.push_back(r);
            self(self, r + 1);
            rsel.pop_back();
        }
    };
    rec_rows(rec_rows, 0);
    return out;
}

Ideal singular_scheme(const Ideal& I, int codim, const GroebnerOptions& opts, bool saturate) {
    if (codim <= 0) throw DomainError("codimension must be positive");
    for (const auto& g : I.generators())
        if (!g.is_homogeneous()) throw NotHomogeneousError("singular scheme needs homogeneous generators");
    auto jac = jacobian_matrix(I.generators());
    std::vector<Polynomial> gens = I.generators();
    for (auto& m : jacobian_minors(jac, codim, I.ring())) gens.push_back(std::move(m));
    Ideal J(I.ring(), std::move(gens));
    return saturate ? saturate_irrelevant(J, opts) : J;
}

namespace {

// exact rank of the Jacobian evaluated at a point
std::size_t jacobian_rank_at(const std::vector<std::vector<Polynomial>>& jac,
                             const std::vector<Scalar>& pt, Field f) {
    if (jac.empty()) return 0;
    ScalarMatrix m(jac.size(), jac[0].size(), f);
    for (std::size_t i = 0; i < jac.size(); ++i)
        for (std::size_t j = 0; j < jac[i].size(); ++j) m.at(i, j) = jac[i][j].evaluate(pt);
    return m.rank();
}

// restriction of g to the coordinate subspace supported on S
Polynomial restrict_to(const Polynomial& g, const std::vector<std::size_t>& support) {
    std::vector<char> in(g.ring()->nvars(), 0);
    for (auto s : support) in[s] = 1;
    std::vector<Term> keep;
    for (const auto& t : g.terms()) {
        bool ok = true;
        for (std::size_t v = 0; v < g.ring()->nvars() && ok; ++v)
            if (t.mono[v] && !in[v]) ok = false;
        if (ok) keep.push_back(t);
    }
    return Polynomial::from_terms(g.ring(), std::move(keep));
}

std::optional<std::vector<Scalar>> witness_scan(const std::vector<Polynomial>& gens,
                                                const std::vector<std::vector<Polynomial>>& jac, int codim,
                                                int max_support) {
    if (gens.empty()) return std::nullopt;
    const RingPtr& ring = gens[0].ring();
    Field f = ring->field();
    if (f.is_rational()) return std::nullopt;  // enumeration only over F_p
    const std::size_t n = ring->nvars();
    const long long p = f.p;

    auto try_point = [&](const std::vector<Scalar>& pt,
                         const std::vector<Polynomial>& restricted) -> bool {
        for (const auto& g : restricted)
            if (!g.evaluate(pt).is_zero()) return false;
        return jacobian_rank_at(jac, pt, f) < static_cast<std::size_t>(codim);
    };

    // single-coordinate points
    for (std::size_t i = 0; i < n && max_support >= 1; ++i) {
        std::vector<Polynomial> restricted;
        for (const auto& g : gens) restricted.push_back(restrict_to(g, {i}));
        std::vector<Scalar> pt(n, Scalar::zero(f));
        pt[i] = Scalar::one(f);
        if (try_point(pt, restricted)) return pt;
    }
    // two-coordinate points
    for (std::size_t i = 0; i < n && max_support >= 2; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Polynomial> restricted;
            for (const auto& g : gens) restricted.push_back(restrict_to(g, {i, j}));
            std::vector<Scalar> pt(n, Scalar::zero(f));
            for (long long a = 0; a < p; ++a)
                for (long long b = (a == 0 ? 1 : 0); b < p; ++b) {
                    pt[i] = Scalar::of_int(a, f);
                    pt[j] = Scalar::of_int(b, f);
                    bool on_cone = true;
                    for (const auto& g : restricted)
                        if (!g.evaluate(pt).is_zero()) {
                            on_cone = false;
                            break;
                        }
                    if (on_cone && jacobian_rank_at(jac, pt, f) < static_cast<std::size_t>(codim)) return pt;
                }
        }
    return std::nullopt;
}

}  // namespace

SingularityReport quasi_smooth_ideal(const Ideal& I, int codim, const GroebnerOptions& opts,
                                     int witness_max_support) {
    SingularityReport rep;
    auto jac = jacobian_matrix(I.generators());
    if (witness_max_support > 0) {
        if (auto w = witness_scan(I.generators(), jac, codim, witness_max_support)) {
            rep.verdict = SingularityReport::Verdict::singular_witness;
            rep.witness = std::move(w);
            rep.method = "witness-point";
            return rep;
        }
    }
    // dimension of the singular scheme; saturation does not change it
    Ideal J = singular_scheme(I, codim, opts, /*saturate=*/false);
    DimDeg dd = projective_dimension_and_degree(J, opts);
    rep.dimension = dd.dimension;
    rep.degree = dd.degree;
    rep.reductions = J.groebner(MonomialOrder::wdegrevlex(), opts).reductions_used;
    rep.method = "jacobian-dimension";
    if (dd.dimension < 0)
        rep.verdict = SingularityReport::Verdict::smooth;
    else if (dd.dimension == 0)
        rep.verdict = SingularityReport::Verdict::isolated;
    else
        rep.verdict = SingularityReport::Verdict::positive_dimensional;
    return rep;
}

SingularityReport quasi_smooth(const VarietySpec& v, std::uint64_t seed, const GroebnerOptions& opts) {
    Instance inst = instantiate(v, seed);
    return quasi_smooth_ideal(inst.ideal, spec_codim(v), opts);
}

std::vector<Polynomial> generic_containing(const std::vector<Polynomial>& q,
                                           const std::vector<long long>& degrees, Rng rng) {
    if (q.empty()) throw DomainError("need at least one containment form");
    const RingPtr& ring = q[0].ring();
    std::vector<Polynomial> out;
    for (std::size_t j = 0; j < degrees.size(); ++j) {
        Polynomial eq = Polynomial::zero(ring);
        for (std::size_t i = 0; i < q.size(); ++i) {
            long long need = degrees[j] - q[i].weighted_degree();
            if (need < 0)
                throw DomainError("containment degree smaller than a defining degree");
            auto rf = random_form(ring, need, rng.split("r" + std::to_string(j) + "_" + std::to_string(i)));
            eq += q[i] * rf.poly;
        }
        if (eq.is_zero() || eq.weighted_degree() != degrees[j])
            throw DomainError("containment instance degenerated");
        out.push_back(std::move(eq));
    }
    return out;
}

long long node_count_bezout(const std::vector<long long>& degrees, const std::vector<int>& weights) {
    long long num = 1;
    for (long long d : degrees) {
        if (d < 0) throw DomainError("negative degree");
        if (d == 0) return 0;
        num *= d;
    }
    long long den = 1;
    for (int w : weights) {
        if (w <= 0) throw DomainError("weights must be positive");
        den *= w;
    }
    if (num % den)
        throw DomainError("Bezout count " + std::to_string(num) + "/" + std::to_string(den) +
                          " is not an integer; use the Groebner degree instead");
    return num / den;
}

}  // namespace kmu
