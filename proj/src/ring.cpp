#include "kmu/ring.hpp"

#include <set>

namespace kmu {

GradedRing::GradedRing(std::vector<std::string> vars, std::vector<int> weights, Field field)
    : vars_(std::move(vars)), weights_(std::move(weights)), field_(field) {}

RingPtr GradedRing::make(std::vector<std::string> vars, std::vector<int> weights, Field field) {
    if (vars.size() != weights.size()) throw DomainError("variable/weight count mismatch");
    if (vars.empty()) throw DomainError("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw DomainError("empty variable name");
        if (!seen.insert(v).second) throw DomainError("duplicate variable name: " + v);
    }
    for (int w : weights)
        if (w <= 0) throw DomainError("weights must be strictly positive");
    if (field.p != 0) Field::prime(field.p);  // validate
    return RingPtr(new GradedRing(std::move(vars), std::move(weights), field));
}

RingPtr GradedRing::projective(int n_vars, Field field) {
    return weighted(std::vector<int>(n_vars, 1), field);
}

RingPtr GradedRing::weighted(std::vector<int> weights, Field field) {
    std::vector<std::string> vars;
    vars.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) vars.push_back("x" + std::to_string(i));
    return make(std::move(vars), std::move(weights), field);
}

int GradedRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr GradedRing::extend(const std::string& name, int weight) const {
    std::string n = name;
    while (var_index(n) >= 0) n += "_";
    auto vars = vars_;
    auto weights = weights_;
    vars.push_back(n);
    weights.push_back(weight);
    return make(std::move(vars), std::move(weights), field_);
}

}  // namespace kmu
