#include "specgeo/certificates.hpp"

#include <algorithm>

namespace specgeo {

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::almost_conjugate: return "almost_conjugate";
        case Relation::elementwise_conjugate: return "elementwise_conjugate";
        case Relation::fixed_point_equivalent: return "fixed_point_equivalent";
        case Relation::primitive: return "primitive";
    }
    throw std::logic_error("unknown relation");
}

namespace {

void require_subgroup(const GroupPtr& g, const Subgroup& h, const char* what) {
    if (h.parent != g || !is_subgroup_of(g, h))
        throw std::invalid_argument(std::string(what) + ": not a subgroup of the given group");
}

}  // namespace

Certificate certify_almost_conjugate(const GroupPtr& g, const Subgroup& h, const Subgroup& k) {
    return certify_almost_conjugate(g, conjugacy_classes(g), h, k);
}

Certificate certify_almost_conjugate(const GroupPtr& g, const ConjugacyClassPartition& classes,
                                     const Subgroup& h, const Subgroup& k) {
    require_subgroup(g, h, "certify_almost_conjugate");
    require_subgroup(g, k, "certify_almost_conjugate");
    Certificate c;
    c.relation = Relation::almost_conjugate;
    c.group_hash = g->content_hash();
    c.h_hash = h.content_hash();
    c.k_hash = k.content_hash();
    c.class_counts.assign(classes.count(), {0, 0});
    for (int x : h.members) ++c.class_counts[classes.class_of[x]][0];
    for (int x : k.members) ++c.class_counts[classes.class_of[x]][1];
    c.verdict = true;
    for (const auto& row : c.class_counts)
        if (row[0] != row[1]) c.verdict = false;
    return c;
}

Certificate certify_elementwise_conjugate(const GroupPtr& g, const Subgroup& h,
                                          const Subgroup& k) {
    return certify_elementwise_conjugate(g, conjugacy_classes(g), h, k);
}

Certificate certify_elementwise_conjugate(const GroupPtr& g,
                                          const ConjugacyClassPartition& classes,
                                          const Subgroup& h, const Subgroup& k) {
    require_subgroup(g, h, "certify_elementwise_conjugate");
    require_subgroup(g, k, "certify_elementwise_conjugate");
    Certificate c;
    c.relation = Relation::elementwise_conjugate;
    c.group_hash = g->content_hash();
    c.h_hash = h.content_hash();
    c.k_hash = k.content_hash();
    c.class_meets.assign(classes.count(), {false, false});
    for (int x : h.members) c.class_meets[classes.class_of[x]][0] = true;
    for (int x : k.members) c.class_meets[classes.class_of[x]][1] = true;
    c.verdict = true;
    for (const auto& row : c.class_meets)
        if (row[0] != row[1]) c.verdict = false;
    return c;
}

Certificate certify_fixed_point_equivalent(const GroupPtr& g, const Subgroup& h,
                                           const Subgroup& k) {
    return certify_fixed_point_equivalent(character_table(g), h, k);
}

Certificate certify_fixed_point_equivalent(const CharacterTable& t, const Subgroup& h,
                                           const Subgroup& k) {
    require_subgroup(t.group, h, "certify_fixed_point_equivalent");
    require_subgroup(t.group, k, "certify_fixed_point_equivalent");
    Certificate c;
    c.relation = Relation::fixed_point_equivalent;
    c.group_hash = t.group->content_hash();
    c.h_hash = h.content_hash();
    c.k_hash = k.content_hash();
    c.verdict = true;
    for (int chi = 0; chi < t.count(); ++chi) {
        uint64_t dh = fixed_space_dim(t, chi, h);
        uint64_t dk = fixed_space_dim(t, chi, k);
        c.fixed_dims.push_back({dh, dk});
        if ((dh > 0) != (dk > 0)) c.verdict = false;
    }
    return c;
}

Certificate certify_primitive(const GroupPtr& g, const Subgroup& h) {
    require_subgroup(g, h, "certify_primitive");
    Certificate c;
    c.relation = Relation::primitive;
    c.group_hash = g->content_hash();
    c.h_hash = h.content_hash();
    for (int x : h.members)
        if (x != 0) c.element_orders.push_back(element_order(g, x));
    std::sort(c.element_orders.begin(), c.element_orders.end());
    auto core = normal_core(g, h);
    c.core_members = core.members;
    bool same_prime_order = !c.element_orders.empty();
    if (same_prime_order) {
        uint64_t p = c.element_orders.front();
        // orders of group elements are built from primes; equal order
        // for all nontrivial elements forces a prime
        bool prime = p > 1;
        for (uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        same_prime_order = prime && c.element_orders.back() == p;
    }
    c.verdict = same_prime_order && c.core_members.size() == 1;
    return c;
}

std::vector<uint64_t> spade_profile(const CharacterTable& t, const Subgroup& h) {
    require_subgroup(t.group, h, "spade_profile");
    std::vector<uint64_t> out;
    out.reserve(t.count());
    for (int chi = 0; chi < t.count(); ++chi) out.push_back(fixed_space_dim(t, chi, h));
    return out;
}

std::vector<uint64_t> spade_profile(const GroupPtr& g, const Subgroup& h) {
    return spade_profile(character_table(g), h);
}

bool recheck_certificate(const Certificate& c) {
    switch (c.relation) {
        case Relation::almost_conjugate:
            return std::all_of(c.class_counts.begin(), c.class_counts.end(),
                               [](const auto& r) { return r[0] == r[1]; });
        case Relation::elementwise_conjugate:
            return std::all_of(c.class_meets.begin(), c.class_meets.end(),
                               [](const auto& r) { return r[0] == r[1]; });
        case Relation::fixed_point_equivalent:
            return std::all_of(c.fixed_dims.begin(), c.fixed_dims.end(),
                               [](const auto& r) { return (r[0] > 0) == (r[1] > 0); });
        case Relation::primitive: {
            if (c.element_orders.empty() || c.core_members.size() != 1) return false;
            uint64_t p = c.element_orders.front();
            if (p < 2) return false;
            for (uint64_t d = 2; d * d <= p; ++d)
                if (p % d == 0) return false;
            return c.element_orders.back() == p;
        }
    }
    throw std::logic_error("unknown relation");
}

}  // namespace specgeo
