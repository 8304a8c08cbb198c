#include "kmu/monomial.hpp"

namespace kmu {

MonomialOrder MonomialOrder::elimination(std::vector<int> block_vars, std::size_t arity) {
    MonomialOrder o;
    o.in_block_.assign(arity, 0);
    bool any = false;
    for (int v : block_vars) {
        if (v < 0 || static_cast<std::size_t>(v) >= arity) throw DomainError("elimination block variable out of range");
        o.in_block_[v] = 1;
        any = true;
    }
    if (!any) return wdegrevlex();
    return o;
}

namespace {

// wdegrevlex on a masked subset of the variables; mask == nullptr means all
int cmp_masked(const Monomial& a, const Monomial& b, const GradedRing& ring, const std::vector<char>* mask,
               char want) {
    long long da = 0, db = 0;
    const std::size_t n = a.arity();
    for (std::size_t i = 0; i < n; ++i) {
        if (mask && (*mask)[i] != want) continue;
        da += static_cast<long long>(a[i]) * ring.weight(i);
        db += static_cast<long long>(b[i]) * ring.weight(i);
    }
    if (da != db) return da < db ? -1 : 1;
    // revlex tie break: last differing exponent, smaller exponent wins
    for (std::size_t i = n; i-- > 0;) {
        if (mask && (*mask)[i] != want) continue;
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, const GradedRing& ring) const {
    if (in_block_.empty()) return cmp_masked(a, b, ring, nullptr, 0);
    if (int c = cmp_masked(a, b, ring, &in_block_, 1)) return c;
    return cmp_masked(a, b, ring, &in_block_, 0);
}

std::string MonomialOrder::describe() const {
    if (in_block_.empty()) return "wdegrevlex";
    std::string s = "eliminate(";
    bool first = true;
    for (std::size_t i = 0; i < in_block_.size(); ++i)
        if (in_block_[i]) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
    return s + ")";
}

}  // namespace kmu
