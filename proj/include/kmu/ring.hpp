#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kmu/scalar.hpp"

namespace kmu {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

// Weighted polynomial ring over an exact field: ordered variables with
// strictly positive integer weights.  Rings are immutable and compared
// structurally, so deserialized copies interoperate.
class GradedRing {
public:
    static RingPtr make(std::vector<std::string> vars, std::vector<int> weights, Field field);

    // convenience: n variables x0..x{n-1}, all of weight 1
    static RingPtr projective(int n_vars, Field field);
    // variables named x0.. with the given weights
    static RingPtr weighted(std::vector<int> weights, Field field);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& weights() const { return weights_; }
    int weight(std::size_t i) const { return weights_[i]; }
    Field field() const { return field_; }

    // -1 when absent
    int var_index(const std::string& name) const;

    // new ring with one more variable appended (the unprojection variable)
    RingPtr extend(const std::string& name, int weight) const;

    bool same_as(const GradedRing& o) const {
        return field_ == o.field_ && weights_ == o.weights_ && vars_ == o.vars_;
    }

private:
    GradedRing(std::vector<std::string> vars, std::vector<int> weights, Field field);

    std::vector<std::string> vars_;
    std::vector<int> weights_;
    Field field_;
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b)) throw RingMismatchError("ring mismatch");
}

}  // namespace kmu
