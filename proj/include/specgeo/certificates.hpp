#pragma once

#include "specgeo/character.hpp"
#include "specgeo/group.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace specgeo {

enum class Relation {
    almost_conjugate,
    elementwise_conjugate,
    fixed_point_equivalent,
    primitive,
};

std::string relation_name(Relation r);

// Verdict plus the evidence needed to re-derive it without the group:
// per-class intersection counts, per-class meet flags, per-irreducible
// fixed-space dimensions, or the order multiset and normal core.
struct Certificate {
    Relation relation;
    bool verdict = false;
    uint64_t group_hash = 0;
    uint64_t h_hash = 0;
    uint64_t k_hash = 0;  // zero for the one-subgroup relation

    // almost_conjugate: |H cap [g]|, |K cap [g]| per class id
    std::vector<std::array<uint64_t, 2>> class_counts;
    // elementwise_conjugate: does the class meet H / K
    std::vector<std::array<bool, 2>> class_meets;
    // fixed_point_equivalent: dim Fix(rho|H), dim Fix(rho|K) per character
    std::vector<std::array<uint64_t, 2>> fixed_dims;
    // primitive: sorted orders of the nontrivial elements of H, and the core
    std::vector<uint64_t> element_orders;
    std::vector<int> core_members;
};

Certificate certify_almost_conjugate(const GroupPtr& g, const Subgroup& h, const Subgroup& k);
Certificate certify_almost_conjugate(const GroupPtr& g, const ConjugacyClassPartition& classes,
                                     const Subgroup& h, const Subgroup& k);

Certificate certify_elementwise_conjugate(const GroupPtr& g, const Subgroup& h,
                                          const Subgroup& k);
Certificate certify_elementwise_conjugate(const GroupPtr& g,
                                          const ConjugacyClassPartition& classes,
                                          const Subgroup& h, const Subgroup& k);

Certificate certify_fixed_point_equivalent(const GroupPtr& g, const Subgroup& h,
                                           const Subgroup& k);
Certificate certify_fixed_point_equivalent(const CharacterTable& t, const Subgroup& h,
                                           const Subgroup& k);

Certificate certify_primitive(const GroupPtr& g, const Subgroup& h);

// chi -> dim Fix(rho_chi | H) in character-table row order.
std::vector<uint64_t> spade_profile(const CharacterTable& t, const Subgroup& h);
std::vector<uint64_t> spade_profile(const GroupPtr& g, const Subgroup& h);

// Re-derives the verdict from the evidence arrays alone.
bool recheck_certificate(const Certificate& c);

}  // namespace specgeo
