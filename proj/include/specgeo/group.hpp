#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace specgeo {

using Encoding = std::string;

// Abstract element algebra on canonical byte encodings. Equality of
// encodings must coincide with equality of elements.
class GroupCarrier {
public:
    virtual ~GroupCarrier() = default;
    virtual Encoding identity() const = 0;
    virtual Encoding mul(const Encoding& a, const Encoding& b) const = 0;
    virtual Encoding inv(const Encoding& a) const = 0;
    virtual std::string name() const = 0;
};

using CarrierPtr = std::shared_ptr<const GroupCarrier>;

inline constexpr size_t kDefaultClosureCap = 1'000'000;
inline constexpr size_t kMulTableCap = 4096;

class ConcreteGroup;
using GroupPtr = std::shared_ptr<const ConcreteGroup>;

// Fully enumerated finite group. Identity at index 0; element order is
// BFS discovery order for generated groups, or the supplied enumeration
// order (identity rotated to the front) for directly enumerated ones.
class ConcreteGroup {
public:
    static GroupPtr generate(CarrierPtr carrier, const std::vector<Encoding>& gens,
                             size_t cap = kDefaultClosureCap);
    // Closure is verified; throws if the list is not closed.
    static GroupPtr from_elements(CarrierPtr carrier, std::vector<Encoding> elements,
                                  std::vector<Encoding> gens, size_t cap = kDefaultClosureCap);

    size_t order() const { return elements_.size(); }
    int mul(int a, int b) const {
        if (!table_.empty()) return table_[a][b];
        return index_of_checked(carrier_->mul(elements_[a], elements_[b]));
    }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(inv(g), x), g); }  // g^-1 x g
    const Encoding& encoding(int i) const { return elements_[i]; }
    // -1 when absent.
    int index_of(const Encoding& e) const;
    const std::vector<int>& generators() const { return gens_; }
    const CarrierPtr& carrier() const { return carrier_; }

    uint64_t element_order(int g) const;
    uint64_t exponent() const;  // lcm of element orders
    int power(int g, uint64_t e) const;

    uint64_t content_hash() const;

private:
    ConcreteGroup() = default;
    void finalize(size_t cap);
    int index_of_checked(const Encoding& e) const;

    CarrierPtr carrier_;
    std::vector<Encoding> elements_;
    std::unordered_map<Encoding, int> index_;
    std::vector<int> gens_;
    std::vector<int> inv_;
    std::vector<std::vector<int>> table_;  // built when order <= kMulTableCap
};

struct Subgroup {
    GroupPtr parent;
    std::vector<int> members;  // sorted indices, identity included

    size_t order() const { return members.size(); }
    bool contains(int g) const;
    // Small generating set (greedy), useful for conjugacy search.
    std::vector<int> small_generating_set() const;
    uint64_t content_hash() const;
};

// Smallest subgroup of G containing the seeds.
Subgroup subgroup_from(const GroupPtr& g, const std::vector<int>& seeds);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
bool is_subgroup_of(const GroupPtr& g, const Subgroup& h);

struct ConjugacyClassPartition {
    std::vector<int> class_of;       // element index -> class id
    std::vector<int> class_reps;     // one representative per class
    std::vector<int> class_sizes;
    std::vector<int> witness;        // element w with w^-1 * rep * w = x
    std::vector<int> inverse_class;  // class id of inverses

    int count() const { return static_cast<int>(class_reps.size()); }
};

ConjugacyClassPartition conjugacy_classes(const GroupPtr& g);

struct CosetTable {
    GroupPtr parent;
    Subgroup subgroup;
    std::vector<int> coset_reps;          // representative element per coset
    std::vector<int> coset_of_element;    // element index -> coset id of Hg
    // action[x][c] = coset id of (Hg_c) * x
    std::vector<std::vector<int>> action;

    int index() const { return static_cast<int>(coset_reps.size()); }
};

CosetTable coset_table(const GroupPtr& g, const Subgroup& h);

uint64_t element_order(const GroupPtr& g, int idx);

Subgroup normal_core(const GroupPtr& g, const Subgroup& h);

struct ConjugacyWitness {
    bool conjugate = false;
    int witness = -1;  // g with g^-1 H g = K when conjugate
};

ConjugacyWitness are_subgroups_conjugate(const GroupPtr& g, const Subgroup& h,
                                         const Subgroup& k);

// Brute-force commutator subgroup, for cross-checks.
Subgroup commutator_subgroup(const GroupPtr& g);

// Every subgroup of G, found by repeatedly closing known subgroups with
// one extra element. Sorted by (order, member list). Throws when more
// than `limit` subgroups appear.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, size_t limit = 100'000);

// Deterministic search for two elements generating G: candidates for the
// first slot are tried in order of decreasing element order. Returns
// nullopt when G is not 2-generated.
std::optional<std::pair<int, int>> find_generating_pair(const GroupPtr& g);

}  // namespace specgeo
