#include "kmu/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

namespace kmu {

namespace {

// canonical descending compare
bool term_before(const GradedRing& ring, const Monomial& a, const Monomial& b) {
    return MonomialOrder::wdegrevlex().compare(a, b, ring) > 0;
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ring) {
    Polynomial p;
    p.ring_ = std::move(ring);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t v) {
    return constant(ring, Scalar::of_int(v, ring->field()));
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& v) {
    Polynomial p = zero(std::move(ring));
    if (!v.is_zero()) p.terms_.push_back({Monomial(p.ring_->nvars()), v});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw DomainError("variable index out of range");
    Monomial m(ring->nvars());
    m.set(i, 1);
    return monomial(std::move(ring), std::move(m), Scalar::one(ring->field()));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar c) {
    if (m.arity() != ring->nvars()) throw DomainError("monomial arity mismatch");
    Polynomial p = zero(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.mono.arity() != ring->nvars()) throw DomainError("monomial arity mismatch");
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return term_before(*ring, a.mono, b.mono); });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coef += t.coef;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coef.is_zero(); });
    Polynomial p = zero(std::move(ring));
    p.terms_ = std::move(merged);
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return terms_.front();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    Polynomial r = zero(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = MonomialOrder::wdegrevlex().compare(terms_[i].mono, o.terms_[j].mono, *ring_);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(o.terms_[j++]);
        else {
            Scalar s = terms_[i].coef + o.terms_[j].coef;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return zero(ring_);
    std::unordered_map<Monomial, Scalar, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            Scalar c = a.coef * b.coef;
            auto [it, fresh] = acc.try_emplace(std::move(m), c);
            if (!fresh) it->second += c;
        }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.push_back({m, c});
    return from_terms(ring_, std::move(terms));
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc = constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= ring_->nvars()) throw DomainError("variable index out of range");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        int e = t.mono[var];
        if (e == 0) continue;
        Scalar c = t.coef * Scalar::of_int(e, ring_->field());
        if (c.is_zero()) continue;  // characteristic p
        Monomial m = t.mono;
        m.set(var, e - 1);
        out.push_back({std::move(m), c});
    }
    return from_terms(ring_, std::move(out));
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    long long d = terms_.front().mono.weighted_degree(*ring_);
    for (const auto& t : terms_)
        if (t.mono.weighted_degree(*ring_) != d) return false;
    return true;
}

long long Polynomial::weighted_degree() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no degree");
    long long d = terms_.front().mono.weighted_degree(*ring_);
    for (const auto& t : terms_)
        if (t.mono.weighted_degree(*ring_) != d) throw NotHomogeneousError("polynomial is not weighted-homogeneous");
    return d;
}

std::optional<long long> Polynomial::try_weighted_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.front().mono.weighted_degree(*ring_);
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
    if (point.size() != ring_->nvars()) throw DomainError("evaluation point arity mismatch");
    Scalar acc = Scalar::zero(ring_->field());
    for (const auto& t : terms_) {
        Scalar v = t.coef;
        for (std::size_t i = 0; i < point.size(); ++i)
            if (t.mono[i]) v *= point[i].pow(t.mono[i]);
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::lift(const RingPtr& bigger) const {
    const std::size_t n = ring_->nvars(), m = bigger->nvars();
    if (m < n || bigger->field() != ring_->field()) throw RingMismatchError("not an extension ring");
    for (std::size_t i = 0; i < n; ++i)
        if (bigger->vars()[i] != ring_->vars()[i] || bigger->weight(i) != ring_->weight(i))
            throw RingMismatchError("not an extension ring");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint16_t> e(t.mono.exps());
        e.resize(m, 0);
        out.push_back({Monomial(std::move(e)), t.coef});
    }
    return from_terms(bigger, std::move(out));
}

Polynomial Polynomial::drop_to(const RingPtr& smaller) const {
    const std::size_t n = smaller->nvars(), m = ring_->nvars();
    if (m < n || smaller->field() != ring_->field()) throw RingMismatchError("not a subring");
    for (std::size_t i = 0; i < n; ++i)
        if (ring_->vars()[i] != smaller->vars()[i] || ring_->weight(i) != smaller->weight(i))
            throw RingMismatchError("not a subring");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        for (std::size_t i = n; i < m; ++i)
            if (t.mono[i]) throw DomainError("polynomial uses a variable outside the subring");
        std::vector<std::uint16_t> e(t.mono.exps().begin(), t.mono.exps().begin() + n);
        out.push_back({Monomial(std::move(e)), t.coef});
    }
    return from_terms(smaller, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

std::vector<Monomial> monomial_basis(const GradedRing& ring, long long degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<std::uint16_t> cur(ring.nvars(), 0);
    // fixed recursion order keeps random_form deterministic
    auto rec = [&](auto&& self, std::size_t var, long long rem) -> void {
        if (var + 1 == ring.nvars()) {
            if (rem % ring.weight(var) == 0 && rem / ring.weight(var) <= 0xffff) {
                cur[var] = static_cast<std::uint16_t>(rem / ring.weight(var));
                out.emplace_back(cur);
                cur[var] = 0;
            }
            return;
        }
        long long maxe = rem / ring.weight(var);
        if (maxe > 0xffff) throw OverflowError("exponent out of 16-bit range");
        for (long long e = maxe; e >= 0; --e) {
            cur[var] = static_cast<std::uint16_t>(e);
            self(self, var + 1, rem - e * ring.weight(var));
        }
        cur[var] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

RandomForm random_form(const RingPtr& ring, long long degree, Rng rng) {
    if (degree < 0) throw DomainError("random_form needs degree >= 0");
    auto basis = monomial_basis(*ring, degree);
    RandomForm rf;
    if (basis.empty()) {
        rf.poly = Polynomial::zero(ring);
        rf.empty_basis = true;
        return rf;
    }
    Field f = ring->field();
    std::vector<Term> terms;
    terms.reserve(basis.size());
    for (auto& m : basis) {
        // nonzero coefficient: every basis monomial is present
        std::int64_t c = f.is_rational() ? static_cast<std::int64_t>(rng.below(199)) - 99
                                         : static_cast<std::int64_t>(rng.below(f.p - 1)) + 1;
        if (f.is_rational() && c >= 0) c += 1;  // skip 0 keeping the draw symmetric
        terms.push_back({std::move(m), Scalar::of_int(c, f)});
    }
    rf.poly = Polynomial::from_terms(ring, std::move(terms));
    return rf;
}

RandomForm random_form(const RingPtr& ring, long long degree, std::uint64_t seed) {
    return random_form(ring, degree, Rng(seed));
}

}  // namespace kmu
