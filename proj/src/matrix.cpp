#include "kmu/matrix.hpp"

#include <numeric>

namespace kmu {

AntisymmetricMatrix::AntisymmetricMatrix(RingPtr ring, std::vector<int> twice_row_weights)
    : ring_(std::move(ring)), n_(twice_row_weights.size()), w2_(std::move(twice_row_weights)) {
    if (n_ < 2) throw DomainError("antisymmetric matrix needs size >= 2");
    upper_.assign(n_ * (n_ - 1) / 2, Polynomial::zero(ring_));
}

std::size_t AntisymmetricMatrix::idx(std::size_t i, std::size_t j) const {
    // row-major upper triangle
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

int AntisymmetricMatrix::entry_degree(std::size_t i, std::size_t j) const {
    int s = w2_[i] + w2_[j];
    return s % 2 == 0 ? s / 2 : -1;
}

long long AntisymmetricMatrix::pfaffian_degree(std::size_t i) const {
    long long total = std::accumulate(w2_.begin(), w2_.end(), 0LL);
    long long d2 = total - w2_[i];
    if (d2 % 2) throw DomainError("half-integral Pfaffian degree: inconsistent profile");
    return d2 / 2;
}

void AntisymmetricMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
    if (i >= j || j >= n_) throw DomainError("upper-triangle index expected");
    check_same_ring(ring_, p.ring());
    if (!p.is_zero()) {
        int d = entry_degree(i, j);
        if (d < 0) throw DomainError("profile forces entry (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") to vanish (half-integral degree)");
        if (p.weighted_degree() != d)
            throw DomainError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") has degree " +
                              std::to_string(p.weighted_degree()) + ", profile wants " + std::to_string(d));
    }
    upper_[idx(i, j)] = std::move(p);
}

Polynomial AntisymmetricMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw DomainError("index out of range");
    if (i == j) return Polynomial::zero(ring_);
    if (i < j) return upper_[idx(i, j)];
    return -upper_[idx(j, i)];
}

Polynomial AntisymmetricMatrix::pfaffian(const std::vector<std::size_t>& keep) const {
    if (keep.size() % 2) throw DomainError("Pfaffian needs an even-sized submatrix");
    if (keep.empty()) return Polynomial::constant(ring_, 1);
    Polynomial acc = Polynomial::zero(ring_);
    std::vector<std::size_t> rest;
    rest.reserve(keep.size() - 2);
    for (std::size_t k = 1; k < keep.size(); ++k) {
        Polynomial e = at(keep[0], keep[k]);
        if (e.is_zero()) continue;
        rest.clear();
        for (std::size_t m = 1; m < keep.size(); ++m)
            if (m != k) rest.push_back(keep[m]);
        Polynomial sub = pfaffian(rest);
        if (k % 2)
            acc += e * sub;
        else
            acc -= e * sub;
    }
    return acc;
}

Polynomial AntisymmetricMatrix::pfaffian() const {
    std::vector<std::size_t> all(n_);
    for (std::size_t i = 0; i < n_; ++i) all[i] = i;
    return pfaffian(all);
}

Polynomial AntisymmetricMatrix::pfaffian_omitting(std::size_t i) const {
    std::vector<std::size_t> keep;
    keep.reserve(n_ - 1);
    for (std::size_t k = 0; k < n_; ++k)
        if (k != i) keep.push_back(k);
    return pfaffian(keep);
}

std::vector<Polynomial> AntisymmetricMatrix::maximal_pfaffians() const {
    if (n_ % 2 == 0) throw DomainError("maximal Pfaffians of an odd matrix expected");
    std::vector<Polynomial> f;
    f.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Polynomial p = pfaffian_omitting(i);
        f.push_back(i % 2 ? -p : p);
    }
    return f;
}

AntisymmetricMatrix AntisymmetricMatrix::generic(const RingPtr& ring, std::vector<int> twice_row_weights,
                                                 Rng rng) {
    AntisymmetricMatrix m(ring, std::move(twice_row_weights));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            int d = m.entry_degree(i, j);
            if (d < 0) continue;  // profile forces zero
            auto rf = random_form(ring, d, rng.split("m" + std::to_string(i) + "_" + std::to_string(j)));
            m.set(i, j, rf.poly);
        }
    return m;
}

}  // namespace kmu
