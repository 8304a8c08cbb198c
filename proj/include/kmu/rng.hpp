#pragma once

#include <cstdint>
#include <string_view>

namespace kmu {

// Deterministic splittable generator (splitmix64).  Every piece of
// randomness in the toolkit flows from one root seed; children are derived
// by hashing a label so that independent consumers cannot perturb each
// other's streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        // desk scale: modulo bias is irrelevant for bound << 2^64
        return next() % bound;
    }

    Rng split(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return Rng(state_ ^ h);
    }

    Rng split(std::uint64_t salt) const { return Rng(state_ ^ (salt * 0xd1342543de82ef95ULL + 1)); }

private:
    std::uint64_t state_;
};

}  // namespace kmu
