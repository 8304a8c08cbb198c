#include "kmu/scalar.hpp"

#include <numeric>
#include <ostream>
#include <utility>

namespace kmu {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

i64 to_i64_checked(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw OverflowError("rational coefficient overflow");
    return static_cast<i64>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// mod into [0,p)
i64 mod_p(i128 v, std::uint32_t p) {
    i128 r = v % i128(p);
    if (r < 0) r += p;
    return static_cast<i64>(r);
}

i64 inv_mod(i64 a, std::uint32_t p) {
    i64 t = 0, newt = 1, r = p, newr = a % i64(p);
    if (newr < 0) newr += p;
    if (newr == 0) throw DomainError("inverse of zero in F_p");
    while (newr != 0) {
        i64 q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw DomainError("element not invertible mod p");
    return t < 0 ? t + p : t;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime_u32(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
    return Field{p};
}

Field Field::parse(const std::string& name) {
    if (name == "Q") return rationals();
    if (name.size() > 1 && name[0] == 'F') {
        std::uint64_t p = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') throw DomainError("bad field name: " + name);
            p = p * 10 + (name[i] - '0');
            if (p > 0xffffffffULL) throw DomainError("modulus too large: " + name);
        }
        return prime(static_cast<std::uint32_t>(p));
    }
    throw DomainError("bad field name: " + name + " (expected \"Q\" or \"F<p>\")");
}

Scalar Scalar::of_int(i64 v, Field f) {
    Scalar s;
    s.p_ = f.p;
    s.num_ = f.p == 0 ? v : mod_p(v, f.p);
    return s;
}

Scalar Scalar::fraction(i64 num, i64 den, Field f) {
    if (den == 0) throw DomainError("zero denominator");
    if (f.p != 0) {
        Scalar s = of_int(num, f);
        return s * of_int(den, f).inverse();
    }
    Scalar s;
    if (den < 0) {
        num = to_i64_checked(-i128(num));
        den = to_i64_checked(-i128(den));
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num = static_cast<i64>(num / g);
        den = static_cast<i64>(den / g);
    }
    s.num_ = num;
    s.den_ = den;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (p_ == 0)
        r.num_ = to_i64_checked(-i128(num_));
    else if (num_ != 0)
        r.num_ = i64(p_) - num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.p_ = p_;
    if (p_ != 0) {
        r.num_ = mod_p(i128(num_) + o.num_, p_);
        return r;
    }
    i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    r.num_ = to_i64_checked(n);
    r.den_ = to_i64_checked(d);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.p_ = p_;
    if (p_ != 0) {
        r.num_ = mod_p(i128(num_) * o.num_, p_);
        return r;
    }
    // reduce cross gcds before multiplying
    i128 g1 = gcd128(num_, o.den_), g2 = gcd128(o.num_, den_);
    i128 n = (i128(num_) / g1) * (i128(o.num_) / g2);
    i128 d = (i128(den_) / g2) * (i128(o.den_) / g1);
    r.num_ = to_i64_checked(n);
    r.den_ = to_i64_checked(d);
    return r;
}

Scalar Scalar::inverse() const {
    if (num_ == 0) throw DomainError("division by zero");
    Scalar r;
    r.p_ = p_;
    if (p_ != 0) {
        r.num_ = inv_mod(num_, p_);
        return r;
    }
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? to_i64_checked(-i128(num_)) : num_;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar acc = Scalar::one(field());
    Scalar base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace kmu
