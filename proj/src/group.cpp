#include "specgeo/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace specgeo {

namespace {

uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

GroupPtr ConcreteGroup::generate(CarrierPtr carrier, const std::vector<Encoding>& gens,
                                 size_t cap) {
    auto g = std::shared_ptr<ConcreteGroup>(new ConcreteGroup());
    g->carrier_ = std::move(carrier);
    Encoding id = g->carrier_->identity();
    g->elements_.push_back(id);
    g->index_.emplace(id, 0);
    // closed generating alphabet: generators and their inverses
    std::vector<Encoding> alphabet;
    for (const auto& s : gens) {
        if (!g->index_.count(s)) {
            g->index_.emplace(s, static_cast<int>(g->elements_.size()));
            g->elements_.push_back(s);
        }
        alphabet.push_back(s);
        Encoding si = g->carrier_->inv(s);
        if (std::find(alphabet.begin(), alphabet.end(), si) == alphabet.end())
            alphabet.push_back(si);
    }
    for (const auto& s : gens) g->gens_.push_back(g->index_.at(s));
    // BFS closure in discovery order
    for (size_t head = 0; head < g->elements_.size(); ++head) {
        Encoding cur = g->elements_[head];
        for (const auto& s : alphabet) {
            Encoding nxt = g->carrier_->mul(cur, s);
            if (!g->index_.count(nxt)) {
                if (g->elements_.size() >= cap)
                    throw std::runtime_error("generate_group: closure cap exceeded");
                g->index_.emplace(nxt, static_cast<int>(g->elements_.size()));
                g->elements_.push_back(std::move(nxt));
            }
        }
    }
    g->finalize(cap);
    return g;
}

GroupPtr ConcreteGroup::from_elements(CarrierPtr carrier, std::vector<Encoding> elements,
                                      std::vector<Encoding> gens, size_t cap) {
    if (elements.size() > cap)
        throw std::runtime_error("from_elements: closure cap exceeded");
    auto g = std::shared_ptr<ConcreteGroup>(new ConcreteGroup());
    g->carrier_ = std::move(carrier);
    Encoding id = g->carrier_->identity();
    auto it = std::find(elements.begin(), elements.end(), id);
    if (it == elements.end())
        throw std::invalid_argument("from_elements: identity not in element list");
    // deterministic order: identity first, rest in given order
    std::vector<Encoding> ordered;
    ordered.reserve(elements.size());
    ordered.push_back(id);
    for (auto& e : elements)
        if (e != id) ordered.push_back(std::move(e));
    g->elements_ = std::move(ordered);
    for (size_t i = 0; i < g->elements_.size(); ++i) {
        if (!g->index_.emplace(g->elements_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("from_elements: duplicate element");
    }
    for (const auto& s : gens) {
        auto jt = g->index_.find(s);
        if (jt == g->index_.end())
            throw std::invalid_argument("from_elements: generator not in element list");
        g->gens_.push_back(jt->second);
    }
    // closure check
    for (const auto& a : g->elements_) {
        if (!g->index_.count(g->carrier_->inv(a)))
            throw std::invalid_argument("from_elements: not closed under inverse");
    }
    g->finalize(cap);
    return g;
}

void ConcreteGroup::finalize(size_t cap) {
    (void)cap;
    const size_t n = elements_.size();
    inv_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        auto it = index_.find(carrier_->inv(elements_[i]));
        if (it == index_.end())
            throw std::invalid_argument("group: not closed under inverse");
        inv_[i] = it->second;
    }
    if (n <= kMulTableCap) {
        table_.assign(n, std::vector<int>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                auto it = index_.find(carrier_->mul(elements_[i], elements_[j]));
                if (it == index_.end())
                    throw std::invalid_argument("group: not closed under multiplication");
                table_[i][j] = it->second;
            }
    }
    // identity law for all elements
    for (size_t i = 0; i < n; ++i) {
        if (mul(0, static_cast<int>(i)) != static_cast<int>(i) ||
            mul(static_cast<int>(i), 0) != static_cast<int>(i))
            throw std::invalid_argument("group: identity law fails");
    }
    // associativity spot-check
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<int> dist(0, static_cast<int>(n) - 1);
    for (int t = 0; t < 1000; ++t) {
        int a = dist(rng), b = dist(rng), c = dist(rng);
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::invalid_argument("group: associativity spot-check failed");
    }
}

int ConcreteGroup::index_of(const Encoding& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? -1 : it->second;
}

int ConcreteGroup::index_of_checked(const Encoding& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw std::logic_error("group: product left the element set");
    return it->second;
}

uint64_t ConcreteGroup::element_order(int g) const {
    uint64_t m = 1;
    int x = g;
    while (x != 0) {
        x = mul(x, g);
        ++m;
    }
    return m;
}

uint64_t ConcreteGroup::exponent() const {
    uint64_t e = 1;
    for (size_t i = 0; i < order(); ++i)
        e = std::lcm(e, element_order(static_cast<int>(i)));
    return e;
}

int ConcreteGroup::power(int g, uint64_t e) const {
    int r = 0, base = g;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

uint64_t ConcreteGroup::content_hash() const {
    uint64_t h = fnv1a(carrier_->name());
    for (const auto& e : elements_) h = fnv1a(e, h);
    return h;
}

bool Subgroup::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

std::vector<int> Subgroup::small_generating_set() const {
    std::vector<int> gens;
    std::vector<char> in_closure(parent->order(), 0);
    std::vector<int> closure{0};
    in_closure[0] = 1;
    for (int m : members) {
        if (in_closure[m]) continue;
        gens.push_back(m);
        // extend closure with new generator
        for (size_t head = 0; head < closure.size(); ++head) {
            for (int s : gens) {
                int a = parent->mul(closure[head], s);
                if (!in_closure[a]) {
                    in_closure[a] = 1;
                    closure.push_back(a);
                }
                int b = parent->mul(closure[head], parent->inv(s));
                if (!in_closure[b]) {
                    in_closure[b] = 1;
                    closure.push_back(b);
                }
            }
        }
    }
    return gens;
}

uint64_t Subgroup::content_hash() const {
    uint64_t h = parent->content_hash();
    std::string s;
    for (int m : members) {
        s.append(reinterpret_cast<const char*>(&m), sizeof(m));
    }
    return fnv1a(s, h);
}

Subgroup subgroup_from(const GroupPtr& g, const std::vector<int>& seeds) {
    for (int s : seeds)
        if (s < 0 || s >= static_cast<int>(g->order()))
            throw std::invalid_argument("subgroup_from: seed not in group");
    std::vector<char> mask(g->order(), 0);
    std::vector<int> closure{0};
    mask[0] = 1;
    for (int s : seeds)
        if (!mask[s]) {
            mask[s] = 1;
            closure.push_back(s);
        }
    for (size_t head = 0; head < closure.size(); ++head) {
        for (int s : seeds) {
            int a = g->mul(closure[head], s);
            if (!mask[a]) {
                mask[a] = 1;
                closure.push_back(a);
            }
            int b = g->mul(closure[head], g->inv(s));
            if (!mask[b]) {
                mask[b] = 1;
                closure.push_back(b);
            }
        }
    }
    std::sort(closure.begin(), closure.end());
    if (g->order() % closure.size() != 0)
        throw std::logic_error("subgroup_from: Lagrange check failed");
    return Subgroup{g, std::move(closure)};
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}}; }

Subgroup full_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{g, std::move(all)};
}

bool is_subgroup_of(const GroupPtr& g, const Subgroup& h) {
    if (h.parent != g) return false;
    if (h.members.empty() || h.members[0] != 0) return false;
    for (int a : h.members) {
        if (!h.contains(g->inv(a))) return false;
        for (int b : h.members)
            if (!h.contains(g->mul(a, b))) return false;
    }
    return true;
}

ConjugacyClassPartition conjugacy_classes(const GroupPtr& g) {
    const int n = static_cast<int>(g->order());
    ConjugacyClassPartition p;
    p.class_of.assign(n, -1);
    p.witness.assign(n, 0);
    for (int rep = 0; rep < n; ++rep) {
        if (p.class_of[rep] != -1) continue;
        int cid = p.count();
        p.class_reps.push_back(rep);
        p.class_sizes.push_back(0);
        // orbit of rep under conjugation
        std::vector<int> orbit{rep};
        p.class_of[rep] = cid;
        p.witness[rep] = 0;
        for (size_t head = 0; head < orbit.size(); ++head) {
            for (int s = 0; s < n; ++s) {
                int y = g->conj(s, orbit[head]);
                if (p.class_of[y] == -1) {
                    p.class_of[y] = cid;
                    // witness composition: w' = w * s conjugates rep to y
                    p.witness[y] = g->mul(p.witness[orbit[head]], s);
                    orbit.push_back(y);
                }
            }
        }
        p.class_sizes[cid] = static_cast<int>(orbit.size());
    }
    p.inverse_class.resize(p.count());
    for (int c = 0; c < p.count(); ++c)
        p.inverse_class[c] = p.class_of[g->inv(p.class_reps[c])];
    return p;
}

CosetTable coset_table(const GroupPtr& g, const Subgroup& h) {
    if (!is_subgroup_of(g, h)) throw std::invalid_argument("coset_table: H is not a subgroup of G");
    const int n = static_cast<int>(g->order());
    CosetTable t;
    t.parent = g;
    t.subgroup = h;
    t.coset_of_element.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (t.coset_of_element[x] != -1) continue;
        int cid = static_cast<int>(t.coset_reps.size());
        t.coset_reps.push_back(x);
        for (int m : h.members) t.coset_of_element[g->mul(m, x)] = cid;
    }
    if (static_cast<size_t>(t.index()) * h.order() != g->order())
        throw std::logic_error("coset_table: index mismatch");
    t.action.assign(n, std::vector<int>(t.index()));
    for (int x = 0; x < n; ++x)
        for (int c = 0; c < t.index(); ++c)
            t.action[x][c] = t.coset_of_element[g->mul(t.coset_reps[c], x)];
    return t;
}

uint64_t element_order(const GroupPtr& g, int idx) {
    if (idx < 0 || idx >= static_cast<int>(g->order()))
        throw std::invalid_argument("element_order: element not in group");
    return g->element_order(idx);
}

Subgroup normal_core(const GroupPtr& g, const Subgroup& h) {
    if (!is_subgroup_of(g, h)) throw std::invalid_argument("normal_core: H not a subgroup");
    std::vector<char> mask(g->order(), 0);
    for (int m : h.members) mask[m] = 1;
    for (size_t x = 0; x < g->order(); ++x) {
        // intersect mask with x^-1 H x
        std::vector<char> conj_mask(g->order(), 0);
        for (int m : h.members) conj_mask[g->conj(static_cast<int>(x), m)] = 1;
        size_t remaining = 0;
        for (size_t y = 0; y < g->order(); ++y) {
            mask[y] &= conj_mask[y];
            remaining += mask[y];
        }
        if (remaining == 1) break;  // only the identity left
    }
    std::vector<int> members;
    for (size_t y = 0; y < g->order(); ++y)
        if (mask[y]) members.push_back(static_cast<int>(y));
    Subgroup core{g, std::move(members)};
    // result must be normal in G
    for (size_t x = 0; x < g->order(); ++x)
        for (int m : core.members)
            if (!core.contains(g->conj(static_cast<int>(x), m)))
                throw std::logic_error("normal_core: result not normal");
    return core;
}

ConjugacyWitness are_subgroups_conjugate(const GroupPtr& g, const Subgroup& h,
                                         const Subgroup& k) {
    if (h.parent != g || k.parent != g)
        throw std::invalid_argument("are_subgroups_conjugate: parent mismatch");
    if (h.order() != k.order()) return {false, -1};
    if (h.members == k.members) return {true, 0};
    std::vector<int> gens = h.small_generating_set();
    for (int x = 0; x < static_cast<int>(g->order()); ++x) {
        bool ok = true;
        for (int s : gens) {
            if (!k.contains(g->conj(x, s))) {
                ok = false;
                break;
            }
        }
        if (ok) return {true, x};  // |H| = |K| and conj(H) <= K forces equality
    }
    return {false, -1};
}

Subgroup commutator_subgroup(const GroupPtr& g) {
    std::vector<int> comms;
    const int n = static_cast<int>(g->order());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            comms.push_back(g->mul(g->mul(g->inv(a), g->inv(b)), g->mul(a, b)));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup_from(g, comms);
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, size_t limit) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    seen.insert({0});
    queue.push_back({0});
    const int n = static_cast<int>(g->order());
    for (size_t head = 0; head < queue.size(); ++head) {
        auto base = queue[head];  // copy: queue may reallocate
        for (int x = 1; x < n; ++x) {
            if (std::binary_search(base.begin(), base.end(), x)) continue;
            auto seeds = base;
            seeds.push_back(x);
            auto sub = subgroup_from(g, seeds);
            if (seen.insert(sub.members).second) {
                queue.push_back(sub.members);
                if (seen.size() > limit)
                    throw std::runtime_error("all_subgroups: limit exceeded");
            }
        }
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (auto& m : seen) out.push_back(Subgroup{g, m});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members < b.members;
    });
    return out;
}

std::optional<std::pair<int, int>> find_generating_pair(const GroupPtr& g) {
    const int n = static_cast<int>(g->order());
    if (n == 1) return std::make_pair(0, 0);
    std::vector<int> order_of(n);
    std::vector<int> first(n);
    std::iota(first.begin(), first.end(), 0);
    for (int x = 0; x < n; ++x) order_of[x] = static_cast<int>(g->element_order(x));
    std::stable_sort(first.begin(), first.end(),
                     [&](int a, int b) { return order_of[a] > order_of[b]; });
    for (int x : first) {
        if (x == 0) continue;
        for (int y = 1; y < n; ++y) {
            if (y == x) continue;
            if (subgroup_from(g, {x, y}).order() == g->order())
                return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

}  // namespace specgeo
