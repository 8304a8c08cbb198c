#include "kmu/geometry.hpp"

#include <numeric>

#include "kmu/parser.hpp"

namespace kmu {

long long Constraint::adjunction() const {
    if (kind == Kind::hypersurface) return degree;
    return std::accumulate(twice_profile.begin(), twice_profile.end(), 0LL);  // 2*sigma
}

long long Constraint::degree_factor() const {
    if (kind == Kind::hypersurface) return degree;
    return pfaffian_profile_degree(twice_profile);
}

long long AmbientSpace::weight_sum() const { return std::accumulate(weights.begin(), weights.end(), 0LL); }

long long AmbientSpace::weight_product() const {
    long long p = 1;
    for (int w : weights) p *= w;
    return p;
}

int AmbientSpace::weight_one_count() const {
    int c = 0;
    for (int w : weights)
        if (w == 1) ++c;
    return c;
}

std::vector<long long> pfaffian_profile_numerator(const std::vector<int>& twice) {
    if (twice.size() % 2 == 0) throw DomainError("pfaffian profile must have odd size");
    long long total = std::accumulate(twice.begin(), twice.end(), 0LL);
    auto bump = [](std::vector<long long>& v, long long e, long long c) {
        if (e < 0) throw DomainError("negative exponent in pfaffian numerator");
        if (static_cast<std::size_t>(e) >= v.size()) v.resize(e + 1, 0);
        v[e] += c;
    };
    std::vector<long long> n{1};
    for (int w2 : twice) {
        if ((total - w2) % 2) throw DomainError("inconsistent pfaffian profile");
        bump(n, (total - w2) / 2, -1);  // generator degrees sigma - w_i
        bump(n, (total + w2) / 2, +1);  // first syzygies at sigma + w_i
    }
    bump(n, total, -1);  // socle at 2*sigma
    return n;
}

long long pfaffian_profile_degree(const std::vector<int>& twice) {
    std::vector<long long> n = pfaffian_profile_numerator(twice);
    // strip (1-t)^3 (the codimension), then evaluate at 1
    for (int k = 0; k < 3; ++k) {
        long long total = std::accumulate(n.begin(), n.end(), 0LL);
        if (total != 0) throw DomainError("pfaffian numerator not divisible by (1-t)^3");
        std::vector<long long> q(n.size() ? n.size() - 1 : 0, 0);
        long long acc = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            acc += n[i];
            q[i] = acc;
        }
        n = std::move(q);
    }
    return std::accumulate(n.begin(), n.end(), 0LL);
}

void validate_spec(const VarietySpec& v) {
    RingPtr ring = v.ambient.ring();
    auto check_degree = [&](long long d, const std::string& what) {
        if (d <= 0) throw DomainError(what + ": degree must be positive");
        if (monomial_basis(*ring, d).empty())
            throw DomainError(what + ": degree " + std::to_string(d) + " admits no monomial in " +
                              "the ambient weights");
    };
    for (const auto& c : v.ambient.constraints)
        if (c.kind == Constraint::Kind::hypersurface) check_degree(c.degree, v.name + " constraint");
    switch (v.presentation.kind) {
        case Presentation::Kind::ci:
            for (long long d : v.presentation.ci) check_degree(d, v.name + " equation");
            break;
        case Presentation::Kind::pfaffian: {
            if (v.presentation.twice_profile.size() % 2 == 0)
                throw DomainError(v.name + ": pfaffian presentation needs odd size");
            AntisymmetricMatrix probe(ring, v.presentation.twice_profile);
            for (std::size_t i = 0; i < probe.size(); ++i) probe.pfaffian_degree(i);
            break;
        }
        case Presentation::Kind::explicit_ideal:
            for (const auto& g : v.presentation.generators) parse_polynomial(g, ring);
            break;
    }
}

namespace {

long long presentation_adjunction(const VarietySpec& v) {
    switch (v.presentation.kind) {
        case Presentation::Kind::ci:
            return std::accumulate(v.presentation.ci.begin(), v.presentation.ci.end(), 0LL);
        case Presentation::Kind::pfaffian: {
            const auto& tw = v.presentation.twice_profile;
            if (tw.size() != 5)
                throw DomainError("dualizing degree of a pfaffian presentation is only defined for 5x5");
            return std::accumulate(tw.begin(), tw.end(), 0LL);  // 2*sigma
        }
        case Presentation::Kind::explicit_ideal: {
            // treat the generators as a regular sequence of their degrees
            RingPtr ring = v.ambient.ring();
            long long s = 0;
            for (const auto& g : v.presentation.generators) s += parse_polynomial(g, ring).weighted_degree();
            return s;
        }
    }
    throw DomainError("unreachable");
}

}  // namespace

long long dualizing_degree(const VarietySpec& v) {
    long long k = presentation_adjunction(v) - v.ambient.weight_sum();
    for (const auto& c : v.ambient.constraints) k += c.adjunction();
    return k;
}

long long unprojection_weight(const VarietySpec& X, const VarietySpec& D) {
    if (!(X.ambient == D.ambient)) throw RingMismatchError("unprojection needs a common ambient");
    long long kx = dualizing_degree(X), kd = dualizing_degree(D);
    if (kx <= kd)
        throw DomainError("unprojection hypothesis fails: k_X = " + std::to_string(kx) +
                          " <= k_D = " + std::to_string(kd));
    return kx - kd;
}

Scalar delpezzo_degree_rational(const VarietySpec& D) {
    if (D.presentation.kind != Presentation::Kind::ci)
        throw DomainError("del Pezzo degree needs a CI presentation");
    long long num = 1;
    for (long long d : D.presentation.ci) num *= d;
    for (const auto& c : D.ambient.constraints) num *= c.degree_factor();
    return Scalar::fraction(num, D.ambient.weight_product(), Field::rationals());
}

long long delpezzo_degree(const VarietySpec& D) {
    long long k = dualizing_degree(D);
    if (k != -1) throw DomainError(D.name + ": not anticanonically embedded (k = " + std::to_string(k) + ")");
    Scalar d = delpezzo_degree_rational(D);
    if (d.den() != 1 || d.num() <= 0)
        throw DomainError(D.name + ": del Pezzo degree " + d.str() + " is not a positive integer");
    return d.num();
}

Scalar h3_degree(const VarietySpec& v) {
    long long num = 1;
    switch (v.presentation.kind) {
        case Presentation::Kind::ci:
            for (long long d : v.presentation.ci) num *= d;
            break;
        case Presentation::Kind::pfaffian:
            num *= pfaffian_profile_degree(v.presentation.twice_profile);
            break;
        case Presentation::Kind::explicit_ideal:
            throw DomainError("no degree bookkeeping for explicit presentations");
    }
    for (const auto& c : v.ambient.constraints) num *= c.degree_factor();
    return Scalar::fraction(num, v.ambient.weight_product(), Field::rationals());
}

int spec_codim(const VarietySpec& v) {
    int c = 0;
    for (const auto& k : v.ambient.constraints) c += k.codim();
    switch (v.presentation.kind) {
        case Presentation::Kind::ci:
            return c + static_cast<int>(v.presentation.ci.size());
        case Presentation::Kind::pfaffian:
            return c + 3;
        case Presentation::Kind::explicit_ideal:
            return c + static_cast<int>(v.presentation.generators.size());
    }
    throw DomainError("unreachable");
}

Instance instantiate(const VarietySpec& v, std::uint64_t seed) {
    validate_spec(v);
    RingPtr ring = v.ambient.ring();
    Rng rng(seed);
    Instance inst{Ideal(), {}, {}, std::nullopt};

    int ci = 0;
    for (const auto& c : v.ambient.constraints) {
        Rng sub = rng.split("constraint" + std::to_string(ci++));
        if (c.kind == Constraint::Kind::hypersurface) {
            auto rf = random_form(ring, c.degree, sub);
            if (rf.empty_basis) throw DomainError("constraint degree has an empty monomial basis");
            inst.constraint_gens.push_back(rf.poly);
        } else {
            auto m = AntisymmetricMatrix::generic(ring, c.twice_profile, sub);
            for (auto& f : m.maximal_pfaffians()) inst.constraint_gens.push_back(std::move(f));
        }
    }

    switch (v.presentation.kind) {
        case Presentation::Kind::ci: {
            int ei = 0;
            for (long long d : v.presentation.ci) {
                auto rf = random_form(ring, d, rng.split("eq" + std::to_string(ei++)));
                if (rf.empty_basis) throw DomainError("equation degree has an empty monomial basis");
                inst.presentation_gens.push_back(rf.poly);
            }
            break;
        }
        case Presentation::Kind::pfaffian: {
            auto m = AntisymmetricMatrix::generic(ring, v.presentation.twice_profile, rng.split("matrix"));
            inst.presentation_gens = m.maximal_pfaffians();
            inst.matrix = std::move(m);
            break;
        }
        case Presentation::Kind::explicit_ideal:
            for (const auto& g : v.presentation.generators)
                inst.presentation_gens.push_back(parse_polynomial(g, ring));
            break;
    }

    std::vector<Polynomial> gens = inst.constraint_gens;
    gens.insert(gens.end(), inst.presentation_gens.begin(), inst.presentation_gens.end());
    inst.ideal = Ideal(ring, std::move(gens));
    return inst;
}

}  // namespace kmu
