#include "kmu/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace kmu {

namespace {

// working representation: terms sorted descending in the active order
struct GbPoly {
    std::vector<Term> terms;
    long long sugar = 0;
    const Monomial& lm() const { return terms.front().mono; }
};

struct Engine {
    const GradedRing& ring;
    MonomialOrder order;
    GroebnerOptions opts;
    long long reductions = 0;

    Engine(const GradedRing& r, MonomialOrder o, GroebnerOptions op) : ring(r), order(std::move(o)), opts(op) {}

    void charge() {
        if (++reductions > opts.max_reductions)
            throw BudgetExceededError("reduction budget exceeded (" + std::to_string(opts.max_reductions) + ")",
                                      reductions);
    }

    std::vector<Term> sorted_terms(const Polynomial& p) const {
        std::vector<Term> t = p.terms();
        std::sort(t.begin(), t.end(),
                  [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono, ring) > 0; });
        return t;
    }

    static long long sugar_degree(const std::vector<Term>& terms, const GradedRing& ring) {
        long long s = 0;
        for (const auto& t : terms) s = std::max(s, t.mono.weighted_degree(ring));
        return s;
    }

    void make_monic(std::vector<Term>& terms) const {
        if (terms.empty() || terms.front().coef.is_one()) return;
        Scalar inv = terms.front().coef.inverse();
        for (auto& t : terms) t.coef *= inv;
    }

    // h -= c * x^m * g, h and g sorted descending, g monic with lm(x^m g) == lm(h)
    std::vector<Term> sub_scaled(std::span<const Term> h, const Scalar& c, const Monomial& m,
                                 const std::vector<Term>& g) const {
        std::vector<Term> out;
        out.reserve(h.size() + g.size());
        std::size_t i = 0, j = 0;
        while (i < h.size() && j < g.size()) {
            Monomial gm = g[j].mono * m;
            int cmp = order.compare(h[i].mono, gm, ring);
            if (cmp > 0) {
                out.push_back(h[i++]);
            } else if (cmp < 0) {
                Scalar s = -(c * g[j].coef);
                if (!s.is_zero()) out.push_back({std::move(gm), s});
                ++j;
            } else {
                Scalar s = h[i].coef - c * g[j].coef;
                if (!s.is_zero()) out.push_back({std::move(gm), s});
                ++i;
                ++j;
            }
        }
        for (; i < h.size(); ++i) out.push_back(h[i]);
        for (; j < g.size(); ++j) {
            Scalar s = -(c * g[j].coef);
            if (!s.is_zero()) out.push_back({g[j].mono * m, s});
        }
        return out;
    }

    // full normal form against basis; returns remainder, accumulates sugar
    std::vector<Term> normal_form(std::vector<Term> h, long long& sugar, const std::vector<GbPoly>& basis) {
        std::vector<Term> remainder;
        std::size_t start = 0;  // h[0..start) already moved to the remainder
        while (start < h.size()) {
            const GbPoly* reducer = nullptr;
            for (const auto& g : basis)
                if (g.lm().divides(h[start].mono)) {
                    reducer = &g;
                    break;
                }
            if (!reducer) {
                remainder.push_back(std::move(h[start]));
                ++start;
                continue;
            }
            charge();
            Monomial shift = reducer->lm().divide_into(h[start].mono);
            sugar = std::max(sugar, reducer->sugar + shift.weighted_degree(ring));
            h = sub_scaled(std::span(h).subspan(start), h[start].coef, shift, reducer->terms);
            start = 0;
        }
        return remainder;
    }

    struct Pair {
        long long sugar;
        long long lcm_degree;
        std::size_t i, j;
        Monomial lcm;
    };

    struct PairCmp {
        const Engine* eng;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
            if (int c = eng->order.compare(a.lcm, b.lcm, eng->ring)) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    std::vector<GbPoly> basis;
    std::set<Pair, PairCmp> pairs{PairCmp{this}};

    Pair make_pair(std::size_t i, std::size_t j) const {
        Monomial l = Monomial::lcm(basis[i].lm(), basis[j].lm());
        long long di = basis[i].sugar + (l.weighted_degree(ring) - basis[i].lm().weighted_degree(ring));
        long long dj = basis[j].sugar + (l.weighted_degree(ring) - basis[j].lm().weighted_degree(ring));
        return Pair{std::max(di, dj), l.weighted_degree(ring), i, j, std::move(l)};
    }

    // Gebauer-Moeller update: chain criterion on old pairs, multiple/coprime
    // criteria on the new ones
    void add_to_basis(GbPoly p) {
        make_monic(p.terms);
        std::size_t t = basis.size();
        basis.push_back(std::move(p));
        const Monomial& lt = basis[t].lm();

        for (auto it = pairs.begin(); it != pairs.end();) {
            if (lt.divides(it->lcm) && Monomial::lcm(basis[it->i].lm(), lt) != it->lcm &&
                Monomial::lcm(basis[it->j].lm(), lt) != it->lcm)
                it = pairs.erase(it);
            else
                ++it;
        }

        std::vector<Pair> fresh;
        fresh.reserve(t);
        for (std::size_t i = 0; i < t; ++i) fresh.push_back(make_pair(i, t));

        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a]) continue;
                if (fresh[b].lcm != fresh[a].lcm && !drop[b] && fresh[b].lcm.divides(fresh[a].lcm)) drop[a] = true;
            }
        // equal-lcm groups: a coprime member kills the group, otherwise keep one
        std::map<std::vector<std::uint16_t>, std::vector<std::size_t>> groups;
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) groups[fresh[a].lcm.exps()].push_back(a);
        for (auto& [_, members] : groups) {
            bool any_coprime = false;
            for (std::size_t a : members)
                if (basis[fresh[a].i].lm().coprime_with(lt)) any_coprime = true;
            bool first = true;
            for (std::size_t a : members) {
                if (any_coprime || !first) drop[a] = true;
                first = false;
            }
        }
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) pairs.insert(std::move(fresh[a]));
    }

    std::vector<Term> spolynomial(const Pair& p) {
        const GbPoly& f = basis[p.i];
        const GbPoly& g = basis[p.j];
        Monomial mf = f.lm().divide_into(p.lcm);
        Monomial mg = g.lm().divide_into(p.lcm);
        // x^mf * f - x^mg * g; both monic
        std::vector<Term> s;
        s.reserve(f.terms.size());
        for (const auto& t : f.terms) s.push_back({t.mono * mf, t.coef});
        return sub_scaled(s, Scalar::one(ring.field()), mg, g.terms);
    }

    std::vector<Polynomial> run(const std::vector<Polynomial>& input, RingPtr ring_ptr) {
        for (const auto& f : input) {
            if (f.is_zero()) continue;
            GbPoly p{sorted_terms(f), 0};
            p.sugar = sugar_degree(p.terms, ring);
            long long sugar = p.sugar;
            p.terms = normal_form(std::move(p.terms), sugar, basis);
            p.sugar = sugar;
            if (!p.terms.empty()) add_to_basis(std::move(p));
        }
        while (!pairs.empty()) {
            Pair p = *pairs.begin();
            pairs.erase(pairs.begin());
            std::vector<Term> s = spolynomial(p);
            if (s.empty()) continue;
            long long sugar = p.sugar;
            s = normal_form(std::move(s), sugar, basis);
            if (!s.empty()) add_to_basis(GbPoly{std::move(s), sugar});
        }
        return reduce_final(std::move(ring_ptr));
    }

    std::vector<Polynomial> reduce_final(RingPtr ring_ptr) {
        // minimalize: drop elements whose lm is divisible by another kept lm
        std::vector<std::size_t> idx(basis.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return order.compare(basis[a].lm(), basis[b].lm(), ring) < 0;
        });
        std::vector<std::size_t> kept;
        for (std::size_t i : idx) {
            bool divisible = false;
            for (std::size_t k : kept)
                if (basis[k].lm().divides(basis[i].lm())) {
                    divisible = true;
                    break;
                }
            if (!divisible) kept.push_back(i);
        }
        // interreduce tails
        std::vector<GbPoly> reduced;
        reduced.reserve(kept.size());
        for (std::size_t k : kept) reduced.push_back(basis[k]);
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            std::vector<GbPoly> others;
            others.reserve(reduced.size() - 1);
            for (std::size_t j = 0; j < reduced.size(); ++j)
                if (j != i) others.push_back(reduced[j]);
            long long sugar = reduced[i].sugar;
            std::vector<Term> nf = normal_form(reduced[i].terms, sugar, others);
            reduced[i].terms = std::move(nf);
            make_monic(reduced[i].terms);
        }
        std::vector<Polynomial> out;
        out.reserve(reduced.size());
        for (auto& g : reduced) out.push_back(Polynomial::from_terms(ring_ptr, std::move(g.terms)));
        return out;
    }
};

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        check_same_ring(ring_, g.ring());
        gens_.push_back(std::move(g));
    }
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order, const GroebnerOptions& opts) const {
    if (!ring_) throw DomainError("ideal has no ring");
    const std::string key = order.describe();
    {
        std::lock_guard lk(cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    Engine eng(*ring_, order, opts);
    auto gb = std::make_shared<GroebnerBasis>();
    gb->order = order;
    gb->elements = eng.run(gens_, ring_);
    gb->reductions_used = eng.reductions;
    std::lock_guard lk(cache_mutex_);
    auto [it, _] = cache_.try_emplace(key, std::move(gb));
    return *it->second;
}

std::string Ideal::str() const {
    std::ostringstream os;
    os << "ideal(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].str();
    }
    os << ")";
    return os.str();
}

Ideal groebner_basis(const Ideal& I, const MonomialOrder& order, const GroebnerOptions& opts) {
    I.groebner(order, opts);
    return I;
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, const GroebnerOptions& opts) {
    check_same_ring(f.ring(), I.ring());
    const GroebnerBasis& gb = I.groebner(MonomialOrder::wdegrevlex(), opts);
    Engine eng(*I.ring(), gb.order, opts);
    std::vector<GbPoly> basis;
    basis.reserve(gb.elements.size());
    for (const auto& g : gb.elements) basis.push_back({eng.sorted_terms(g), 0});
    long long sugar = 0;
    auto r = eng.normal_form(eng.sorted_terms(f), sugar, basis);
    return Polynomial::from_terms(I.ring(), std::move(r));
}

bool ideal_contains_poly(const Ideal& I, const Polynomial& f, const GroebnerOptions& opts) {
    return normal_form(f, I, opts).is_zero();
}

bool contains(const Ideal& I, const Ideal& J, const GroebnerOptions& opts) {
    check_same_ring(I.ring(), J.ring());
    for (const auto& g : J.generators())
        if (!ideal_contains_poly(I, g, opts)) return false;
    return true;
}

bool ideal_equal(const Ideal& A, const Ideal& B, const GroebnerOptions& opts) {
    return contains(A, B, opts) && contains(B, A, opts);
}

Ideal eliminate(const Ideal& I, const std::vector<int>& block, const GroebnerOptions& opts) {
    if (block.empty()) return I;
    MonomialOrder order = MonomialOrder::elimination(block, I.ring()->nvars());
    const GroebnerBasis& gb = I.groebner(order, opts);
    std::vector<char> mask(I.ring()->nvars(), 0);
    for (int v : block) mask[v] = 1;
    std::vector<Polynomial> kept;
    for (const auto& g : gb.elements) {
        bool uses_block = false;
        for (const auto& t : g.terms())
            for (std::size_t i = 0; i < mask.size() && !uses_block; ++i)
                if (mask[i] && t.mono[i]) uses_block = true;
        if (!uses_block) kept.push_back(g);
    }
    return Ideal(I.ring(), std::move(kept));
}

Ideal ideal_sum(const Ideal& A, const Ideal& B) {
    check_same_ring(A.ring(), B.ring());
    auto gens = A.generators();
    gens.insert(gens.end(), B.generators().begin(), B.generators().end());
    return Ideal(A.ring(), std::move(gens));
}

Ideal intersect(const Ideal& A, const Ideal& B, const GroebnerOptions& opts) {
    check_same_ring(A.ring(), B.ring());
    if (A.is_zero_ideal() || B.is_zero_ideal()) return Ideal(A.ring(), {});
    RingPtr ext = A.ring()->extend("w@", 1);
    std::size_t w = ext->nvars() - 1;
    Polynomial t = Polynomial::variable(ext, w);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& a : A.generators()) gens.push_back(t * a.lift(ext));
    for (const auto& b : B.generators()) gens.push_back(one_minus_t * b.lift(ext));
    Ideal J(ext, std::move(gens));
    Ideal E = eliminate(J, {static_cast<int>(w)}, opts);
    std::vector<Polynomial> out;
    for (const auto& g : E.generators()) out.push_back(g.drop_to(A.ring()));
    return Ideal(A.ring(), std::move(out));
}

Ideal saturate(const Ideal& I, const Polynomial& g, const GroebnerOptions& opts) {
    check_same_ring(I.ring(), g.ring());
    if (g.is_zero()) throw DomainError("saturation by zero");
    RingPtr ext = I.ring()->extend("w@", 1);
    std::size_t w = ext->nvars() - 1;
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(f.lift(ext));
    gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, w) * g.lift(ext));
    Ideal J(ext, std::move(gens));
    Ideal E = eliminate(J, {static_cast<int>(w)}, opts);
    std::vector<Polynomial> out;
    for (const auto& h : E.generators()) out.push_back(h.drop_to(I.ring()));
    return Ideal(I.ring(), std::move(out));
}

Ideal saturate(const Ideal& I, const Ideal& J, const GroebnerOptions& opts) {
    if (J.is_zero_ideal()) throw DomainError("saturation by the zero ideal");
    bool first = true;
    Ideal acc;
    for (const auto& g : J.generators()) {
        Ideal s = saturate(I, g, opts);
        acc = first ? s : intersect(acc, s, opts);
        first = false;
    }
    return acc;
}

namespace {

RingPtr permuted_ring(const GradedRing& ring, const std::vector<std::size_t>& perm) {
    std::vector<std::string> vars;
    std::vector<int> weights;
    for (std::size_t p : perm) {
        vars.push_back(ring.vars()[p]);
        weights.push_back(ring.weight(p));
    }
    return GradedRing::make(std::move(vars), std::move(weights), ring.field());
}

Polynomial permute_poly(const Polynomial& f, const RingPtr& target, const std::vector<std::size_t>& inv_perm) {
    std::vector<Term> out;
    out.reserve(f.nterms());
    for (const auto& t : f.terms()) {
        std::vector<std::uint16_t> e(f.ring()->nvars());
        for (std::size_t i = 0; i < e.size(); ++i) e[inv_perm[i]] = t.mono[i];
        out.push_back({Monomial(std::move(e)), t.coef});
    }
    return Polynomial::from_terms(target, std::move(out));
}

}  // namespace

Ideal saturate_variable(const Ideal& I, std::size_t var, const GroebnerOptions& opts) {
    for (const auto& g : I.generators())
        if (!g.is_homogeneous()) return saturate(I, Polynomial::variable(I.ring(), var), opts);
    const std::size_t n = I.ring()->nvars();
    // move var last; in wdegrevlex the saturation by the last variable is
    // division of the basis elements by its largest power
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < n; ++i)
        if (i != var) perm.push_back(i);
    perm.push_back(var);
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    RingPtr pring = permuted_ring(*I.ring(), perm);

    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(permute_poly(g, pring, inv));
    Ideal J(pring, std::move(gens));
    for (;;) {
        const GroebnerBasis& gb = J.groebner(MonomialOrder::wdegrevlex(), opts);
        bool divided = false;
        std::vector<Polynomial> next;
        for (const auto& g : gb.elements) {
            int k = 0xffff;
            for (const auto& t : g.terms()) k = std::min<int>(k, t.mono[n - 1]);
            if (k == 0) {
                next.push_back(g);
                continue;
            }
            divided = true;
            std::vector<Term> terms;
            for (const auto& t : g.terms()) {
                Monomial m = t.mono;
                m.set(n - 1, t.mono[n - 1] - k);
                terms.push_back({std::move(m), t.coef});
            }
            next.push_back(Polynomial::from_terms(pring, std::move(terms)));
        }
        J = Ideal(pring, std::move(next));
        if (!divided) break;
    }
    std::vector<std::size_t> back(n);
    for (std::size_t i = 0; i < n; ++i) back[i] = perm[i];
    std::vector<Polynomial> out;
    for (const auto& g : J.generators()) out.push_back(permute_poly(g, I.ring(), back));
    return Ideal(I.ring(), std::move(out));
}

Ideal saturate_irrelevant(const Ideal& I, const GroebnerOptions& opts) {
    const std::size_t n = I.ring()->nvars();
    Ideal acc = saturate_variable(I, 0, opts);
    for (std::size_t v = 1; v < n; ++v) acc = intersect(acc, saturate_variable(I, v, opts), opts);
    return acc;
}

// --- Hilbert series -------------------------------------------------------

namespace {

using Coeffs = std::vector<long long>;

Coeffs mul_one_minus_power(const Coeffs& a, std::size_t d) {
    Coeffs r(a.size() + d, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
        r[i + d] -= a[i];
    }
    return r;
}

Coeffs add(const Coeffs& a, const Coeffs& b, std::size_t shift) {
    Coeffs r(std::max(a.size(), b.size() + shift), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] += b[i];
    return r;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.total_degree() < b.total_degree(); });
    std::vector<Monomial> out;
    for (auto& m : gens) {
        bool divisible = false;
        for (const auto& k : out)
            if (k.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(std::move(m));
    }
    return out;
}

Coeffs numerator_rec(std::vector<Monomial> gens, const GradedRing& ring) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return Coeffs{1};
    if (gens.size() == 1 && gens[0].is_one()) return Coeffs{0};
    // pairwise coprime: product formula
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime_with(gens[j])) coprime = false;
    if (coprime) {
        Coeffs r{1};
        for (const auto& m : gens) r = mul_one_minus_power(r, static_cast<std::size_t>(m.weighted_degree(ring)));
        return r;
    }
    // pivot on the most frequent variable
    std::vector<int> freq(ring.nvars(), 0);
    for (const auto& m : gens)
        for (std::size_t i = 0; i < ring.nvars(); ++i)
            if (m[i]) ++freq[i];
    std::size_t v = std::max_element(freq.begin(), freq.end()) - freq.begin();

    std::vector<Monomial> plus;   // gens + (x_v), minimalized by dropping multiples of x_v
    std::vector<Monomial> colon;  // gens : x_v
    Monomial xv(ring.nvars());
    xv.set(v, 1);
    plus.push_back(xv);
    for (const auto& m : gens) {
        if (m[v]) {
            Monomial q = m;
            q.set(v, m[v] - 1);
            colon.push_back(std::move(q));
        } else {
            plus.push_back(m);
            colon.push_back(m);
        }
    }
    Coeffs a = numerator_rec(std::move(plus), ring);
    Coeffs b = numerator_rec(std::move(colon), ring);
    // 0 -> R/(I:x_v)(-w_v) -> R/I -> R/(I+x_v) -> 0 gives
    // N(I) = N(I+x_v) + t^w_v N(I:x_v)
    return add(a, b, static_cast<std::size_t>(ring.weight(v)));
}

}  // namespace

std::vector<long long> hilbert_numerator(const std::vector<Monomial>& gens, const GradedRing& ring) {
    Coeffs r = numerator_rec(gens, ring);
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) r.push_back(0);
    return r;
}

DimDeg projective_dimension_and_degree(const Ideal& I, const GroebnerOptions& opts) {
    for (const auto& g : I.generators())
        if (!g.is_homogeneous())
            throw NotHomogeneousError("projective dimension needs a weighted-homogeneous ideal");
    const GradedRing& ring = *I.ring();
    const std::size_t n = ring.nvars();
    const GroebnerBasis& gb = I.groebner(MonomialOrder::wdegrevlex(), opts);

    std::vector<Monomial> lms;
    lms.reserve(gb.elements.size());
    for (const auto& g : gb.elements) lms.push_back(g.leading_term().mono);
    lms = minimalize_monomials(std::move(lms));

    DimDeg result;
    bool unit_ideal = lms.size() == 1 && lms[0].is_one();

    // affine Krull dimension via independent sets of the initial ideal
    int best = -1;
    if (!unit_ideal) {
        if (n > 62) throw DomainError("too many variables for the independent-set search");
        std::vector<std::uint64_t> supports;
        supports.reserve(lms.size());
        for (const auto& m : lms) {
            std::uint64_t s = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (m[i]) s |= (1ULL << i);
            supports.push_back(s);
        }
        // depth-first over variables, pruning when even taking all the rest
        // cannot beat the current best
        auto rec = [&](auto&& self, std::size_t var, std::uint64_t chosen, int count) -> void {
            if (count + static_cast<int>(n - var) <= best) return;
            if (var == n) {
                best = std::max(best, count);
                return;
            }
            std::uint64_t with = chosen | (1ULL << var);
            bool ok = true;
            for (std::uint64_t s : supports)
                if ((s & ~with) == 0) {
                    ok = false;
                    break;
                }
            if (ok) self(self, var + 1, with, count + 1);
            self(self, var + 1, chosen, count);
        };
        rec(rec, 0, 0, 0);
        best = std::max(best, 0);
    }
    int affine_dim = unit_ideal ? -1 : best;  // dim of R/I as affine cone; -1 for the zero ring
    result.dimension = affine_dim - 1 >= -1 ? affine_dim - 1 : -1;

    // Hilbert numerator: strip (1-t) factors, evaluate at 1
    Coeffs num = hilbert_numerator(lms, ring);
    int multiplicity = 0;
    auto eval1 = [](const Coeffs& c) {
        long long s = 0;
        for (long long v : c) s += v;
        return s;
    };
    while (!(num.size() == 1 && num[0] == 0) && eval1(num) == 0) {
        // divide by (1-t): q_i = sum_{j<=i} c_j
        Coeffs q(num.size() ? num.size() - 1 : 0, 0);
        long long acc = 0;
        for (std::size_t i = 0; i + 1 < num.size() + 1 && i < q.size(); ++i) {
            acc += num[i];
            q[i] = acc;
        }
        num = std::move(q);
        if (num.empty()) num.push_back(0);
        ++multiplicity;
    }
    result.numerator_one_multiplicity = multiplicity;
    result.hilbert_numerator_at_one = eval1(num);

    if (!unit_ideal) {
        // consistency between the two dimension computations
        int hilbert_affine = static_cast<int>(n) - multiplicity;
        if (eval1(num) == 0) hilbert_affine = -1;  // zero module
        if (hilbert_affine != affine_dim)
            throw Error("internal: Hilbert and independent-set dimensions disagree");
    }

    if (result.dimension == 0) {
        long long wprod = 1;
        for (std::size_t i = 0; i < n; ++i) wprod *= ring.weight(i);
        if (result.hilbert_numerator_at_one % wprod == 0)
            result.degree = result.hilbert_numerator_at_one / wprod;
    }
    return result;
}

}  // namespace kmu
