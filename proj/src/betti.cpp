#include "kmu/betti.hpp"

#include <algorithm>
#include <sstream>

namespace kmu {

void BettiTable::add(int i, long long j, long long count) {
    if (count < 0) throw DomainError("negative Betti number");
    if (count == 0) return;
    if (i < 0) throw DomainError("negative homological index");
    entries_[{i, j}] += count;
}

long long BettiTable::at(int i, long long j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::max_homological() const {
    int m = 0;
    for (const auto& [k, v] : entries_) m = std::max(m, k.first);
    return m;
}

long long BettiTable::total_rank(int i) const {
    long long s = 0;
    for (const auto& [k, v] : entries_)
        if (k.first == i) s += v;
    return s;
}

long long BettiTable::alternating_rank_sum() const {
    long long s = 0;
    for (const auto& [k, v] : entries_) s += (k.first % 2 ? -v : v);
    return s;
}

bool BettiTable::gorenstein_symmetric() const {
    if (entries_.empty()) return false;
    int c = max_homological();
    long long socle = -1;
    for (const auto& [k, v] : entries_)
        if (k.first == c) {
            if (socle >= 0) return false;  // socle must be a single twist
            if (v != 1) return false;
            socle = k.second;
        }
    for (const auto& [k, v] : entries_)
        if (at(c - k.first, socle - k.second) != v) return false;
    return true;
}

std::vector<std::vector<long long>> BettiTable::layout() const {
    if (entries_.empty()) return {};
    long long rmin = 0, rmax = 0;
    int cols = max_homological() + 1;
    bool first = true;
    for (const auto& [k, v] : entries_) {
        long long r = k.second - k.first;
        if (first) {
            rmin = rmax = r;
            first = false;
        }
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    std::vector<std::vector<long long>> out(rmax - rmin + 1, std::vector<long long>(cols, 0));
    for (const auto& [k, v] : entries_) out[k.second - k.first - rmin][k.first] = v;
    return out;
}

std::string BettiTable::render() const {
    std::ostringstream os;
    for (const auto& row : layout()) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
        os << "\n";
    }
    return os.str();
}

BettiTable koszul_betti(const std::vector<long long>& degrees) {
    for (long long d : degrees)
        if (d <= 0) throw DomainError("Koszul degrees must be positive");
    BettiTable t(static_cast<int>(degrees.size()));
    const std::size_t k = degrees.size();
    if (k > 30) throw DomainError("Koszul complex too large");
    for (std::size_t mask = 0; mask < (1ULL << k); ++mask) {
        int i = 0;
        long long j = 0;
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (1ULL << b)) {
                ++i;
                j += degrees[b];
            }
        t.add(i, j, 1);
    }
    return t;
}

LinkResult link_betti_full(const BettiTable& d_table, const std::vector<long long>& ci_degrees, int codim) {
    if (static_cast<int>(ci_degrees.size()) != codim)
        throw DomainError("complete intersection must have codim many degrees");
    if (d_table.codim() >= 0 && d_table.codim() != codim)
        throw DomainError("codimension mismatch: table says " + std::to_string(d_table.codim()) +
                          ", link wants " + std::to_string(codim));
    if (d_table.at(0, 0) != 1) throw DomainError("expected the table of a cyclic module");
    BettiTable K = koszul_betti(ci_degrees);
    long long s = 0;
    for (long long d : ci_degrees) s += d;

    // dualized-and-twisted summands of the cone, kept separate so the
    // cancellation pairs stay identifiable:
    //   G_i = K^(c-i)(-s) + F^(c-i+1)(-s)
    std::map<std::pair<int, long long>, long long> from_k, from_f;
    for (const auto& [key, v] : K.entries()) {
        int i = codim - key.first;
        if (i < 0) continue;
        from_k[{i, s - key.second}] += v;
    }
    for (const auto& [key, v] : d_table.entries()) {
        int i = codim - key.first + 1;
        if (i < 0) continue;
        from_f[{i, s - key.second}] += v;
    }

    LinkResult out{BettiTable(codim), BettiTable(codim)};
    for (const auto& [k, v] : from_k) out.cone.add(k.first, k.second, v);
    for (const auto& [k, v] : from_f) out.cone.add(k.first, k.second, v);

    // comparison map phi_j: K_j -> F_j dualizes to F^j(-s) -> K^j(-s),
    // i.e. homological degree c-j+1 -> c-j; equal twists there cancel
    for (auto& [k, v] : from_k) {
        auto it = from_f.find({k.first + 1, k.second});
        if (it == from_f.end()) continue;
        long long c = std::min(v, it->second);
        v -= c;
        it->second -= c;
    }
    for (const auto& [k, v] : from_k)
        if (v) out.reduced.add(k.first, k.second, v);
    for (const auto& [k, v] : from_f)
        if (v) out.reduced.add(k.first, k.second, v);
    if (out.reduced.at(0, 0) != 1) throw Error("internal: linked table lost its unit");
    return out;
}

BettiTable link_betti(const BettiTable& d_table, const std::vector<long long>& ci_degrees, int codim) {
    return link_betti_full(d_table, ci_degrees, codim).reduced;
}

BettiTable delpezzo6_betti(DelPezzo6Model model) {
    // both classical models resolve with the same numbers; shipped per model
    // to keep the provenance of the two linkage routes separate
    BettiTable t(4);
    switch (model) {
        case DelPezzo6Model::p2xp2:
        case DelPezzo6Model::p1xp1xp1:
            t.add(0, 0, 1);
            t.add(1, 2, 9);
            t.add(2, 3, 16);
            t.add(3, 4, 9);
            t.add(4, 6, 1);
            break;
    }
    return t;
}

}  // namespace kmu
