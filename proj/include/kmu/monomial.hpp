#pragma once

#include <cstdint>
#include <vector>

#include "kmu/errors.hpp"
#include "kmu/ring.hpp"

namespace kmu {

// Exponent tuple.  Exponents are capped at 16 bits per variable; anything
// larger is outside the desk-scale contract and throws.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : e_(arity, 0) {}
    explicit Monomial(std::vector<std::uint16_t> e) : e_(std::move(e)) {}

    std::size_t arity() const { return e_.size(); }
    std::uint16_t operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, int v) {
        if (v < 0 || v > 0xffff) throw OverflowError("exponent out of 16-bit range");
        e_[i] = static_cast<std::uint16_t>(v);
    }
    const std::vector<std::uint16_t>& exps() const { return e_; }

    bool is_one() const {
        for (auto x : e_)
            if (x) return false;
        return true;
    }

    long long weighted_degree(const GradedRing& ring) const {
        long long d = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) d += static_cast<long long>(e_[i]) * ring.weight(i);
        return d;
    }
    long long total_degree() const {
        long long d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            int v = int(e_[i]) + int(o.e_[i]);
            if (v > 0xffff) throw OverflowError("exponent out of 16-bit range");
            r.e_[i] = static_cast<std::uint16_t>(v);
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // quotient o / this, caller guarantees divisibility
    Monomial divide_into(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<std::uint16_t>(o.e_[i] - e_[i]);
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto x : e_) {
            h ^= x;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

private:
    std::vector<std::uint16_t> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Term orders used by the engine.  wdegrevlex uses the ring's weights, so
// weighted-homogeneous input stays homogeneous along a GB computation.  The
// elimination order puts a block of variables in front (block part compared
// by wdegrevlex, then the rest), which is what eliminate()/saturate() need.
class MonomialOrder {
public:
    static MonomialOrder wdegrevlex() { return MonomialOrder{}; }
    static MonomialOrder elimination(std::vector<int> block_vars, std::size_t arity);

    bool is_elimination() const { return !in_block_.empty(); }
    const std::vector<char>& block_mask() const { return in_block_; }

    // >0 if a comes after b in the order (a "larger"), <0 if smaller, 0 equal
    int compare(const Monomial& a, const Monomial& b, const GradedRing& ring) const;

    bool equals(const MonomialOrder& o) const { return in_block_ == o.in_block_; }
    std::string describe() const;

private:
    std::vector<char> in_block_;  // empty = plain wdegrevlex
};

}  // namespace kmu
