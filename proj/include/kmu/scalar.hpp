#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "kmu/errors.hpp"

namespace kmu {

// Coefficient field: the rationals (p == 0) or a prime field F_p.
struct Field {
    std::uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;

    static Field rationals() { return Field{0}; }
    static Field prime(std::uint32_t p);  // validates primality

    std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
    static Field parse(const std::string& name);
};

// Exact field element.  Over Q this is an int64 fraction in lowest terms
// (den > 0); over F_p a residue in [0,p) with den == 1.  Intermediate
// products go through __int128; anything that would leave int64 throws
// OverflowError rather than silently wrapping.
class Scalar {
public:
    Scalar() = default;  // 0 over Q

    static Scalar zero(Field f) { return of_int(0, f); }
    static Scalar one(Field f) { return of_int(1, f); }
    static Scalar of_int(std::int64_t v, Field f);
    static Scalar fraction(std::int64_t num, std::int64_t den, Field f);

    Field field() const { return Field{p_}; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws DomainError on 0
    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        return p_ == o.p_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;  // "3", "-2/5"

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::uint32_t p_ = 0;

    void check_same_field(const Scalar& o) const {
        if (p_ != o.p_) throw RingMismatchError("scalar field mismatch");
    }
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace kmu
