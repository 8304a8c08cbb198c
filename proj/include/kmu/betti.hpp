#pragma once

#include <map>
#include <string>
#include <vector>

#include "kmu/errors.hpp"

namespace kmu {

// Graded Betti numbers beta_{i,j} of a cyclic module, displayed in the
// conventional layout (column = homological index i, row = j - i).
class BettiTable {
public:
    BettiTable() = default;
    explicit BettiTable(int codim) : codim_(codim) {}

    static BettiTable ring() {
        BettiTable t(0);
        t.add(0, 0, 1);
        return t;
    }

    void add(int i, long long j, long long count);
    long long at(int i, long long j) const;
    const std::map<std::pair<int, long long>, long long>& entries() const { return entries_; }

    int codim() const { return codim_; }
    void set_codim(int c) { codim_ = c; }

    int max_homological() const;
    long long total_rank(int i) const;
    long long alternating_rank_sum() const;

    // palindromic duality beta_{i,j} = beta_{c-i, s-j} of arithmetically
    // Gorenstein tables; s is inferred from the socle entry
    bool gorenstein_symmetric() const;

    // dense (row = j - i, column = i) layout between the extreme rows
    std::vector<std::vector<long long>> layout() const;
    std::string render() const;

    bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }

private:
    std::map<std::pair<int, long long>, long long> entries_;
    int codim_ = -1;
};

// Koszul complex of a regular sequence of the given degrees:
// beta_{i, sum of an i-subset} counted over subsets
BettiTable koszul_betti(const std::vector<long long>& degrees);

struct LinkResult {
    BettiTable cone;     // the raw dualized mapping cone
    BettiTable reduced;  // after the forced consecutive cancellations
};

// Betti table of the ideal linked to D through a complete intersection of
// the given degrees: dual of the mapping cone Koszul(ci) -> res(D), twisted
// by the total CI degree.  Cancellation removes equal-degree pairs between
// the dualized Koszul part in homological degree c-j and the dualized
// resolution part in degree c-j+1, the entries the comparison map matches.
LinkResult link_betti_full(const BettiTable& d_table, const std::vector<long long>& ci_degrees, int codim);
BettiTable link_betti(const BettiTable& d_table, const std::vector<long long>& ci_degrees, int codim);

// The degree-6 del Pezzo surface table (1; 9, 16, 9; 1), shipped as data for
// both classical models of the surface: a codimension-2 linear section of
// the cone over P2xP2 and a hyperplane section of the cone over P1xP1xP1.
// tests/oracles/delpezzo6.m2 reproduces both with an independent CAS; the
// in-repo cross-check pins beta_{1,2} and beta_{2,3} by exact linear algebra
// on the Segre cone ideals.
enum class DelPezzo6Model { p2xp2, p1xp1xp1 };
BettiTable delpezzo6_betti(DelPezzo6Model model);

}  // namespace kmu
