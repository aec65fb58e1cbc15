#pragma once

#include "specgeo/group.hpp"

#include <cstdint>
#include <vector>

namespace specgeo {

inline constexpr size_t kDefaultCharacterCap = 100'000;

// Exact irreducible characters of G represented modulo a certified prime
// r with r = 1 mod exp(G) and r > 2|G|. Degrees are lifted to integers.
// Row order is deterministic: trivial character first, then ascending by
// (degree, value tuple).
struct CharacterTable {
    GroupPtr group;
    ConjugacyClassPartition classes;
    uint64_t prime = 0;            // r
    uint64_t exponent = 0;         // exp(G)
    uint64_t root_of_unity = 0;    // generator of order exp(G) mod r
    std::vector<std::vector<uint64_t>> values;  // k x k residues mod r
    std::vector<uint64_t> degrees;              // integer lifts

    int count() const { return static_cast<int>(values.size()); }
    uint64_t value(int chi, int cls) const { return values[chi][cls]; }
    // chi(g^-1) = conjugate character value: value at the inverse class.
    uint64_t conj_value(int chi, int cls) const {
        return values[chi][classes.inverse_class[cls]];
    }
};

CharacterTable character_table(const GroupPtr& g, size_t cap = kDefaultCharacterCap);

// dim Fix(rho_chi | H) = <Res_H chi, 1_H>, exact nonnegative integer.
uint64_t fixed_space_dim(const CharacterTable& t, int chi, const Subgroup& h);

}  // namespace specgeo
