#include "doctest.h"

#include "specgeo/constructions.hpp"
#include "specgeo/group.hpp"

#include <algorithm>
#include <random>

using namespace specgeo;

namespace {

Encoding pe(std::initializer_list<int> v) {
    Encoding e;
    for (int x : v) e.push_back(static_cast<char>(x));
    return e;
}

GroupPtr sym(unsigned n) {
    std::vector<int> cycle(n), swap01(n);
    for (unsigned i = 0; i < n; ++i) {
        cycle[i] = static_cast<int>((i + 1) % n);
        swap01[i] = static_cast<int>(i);
    }
    std::swap(swap01[0], swap01[1]);
    return permutation_group(n, {swap01, cycle});
}

}  // namespace

TEST_CASE("closure from generators") {
    auto s6 = sym(6);
    CHECK(s6->order() == 720);
    auto s3 = sym(3);
    CHECK(s3->order() == 6);

    // trivial group from the identity alone
    auto triv = permutation_group(4, {{0, 1, 2, 3}});
    CHECK(triv->order() == 1);

    // identity sits at index 0 and the laws hold
    CHECK(s3->mul(0, 3) == 3);
    for (int g = 0; g < 6; ++g) CHECK(s3->mul(g, s3->inv(g)) == 0);
}

TEST_CASE("conjugacy classes") {
    auto s3 = sym(3);
    auto cc = conjugacy_classes(s3);
    std::vector<int> sizes = cc.class_sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 2, 3});
    CHECK(cc.class_of[0] == 0);
    CHECK(cc.class_sizes[0] == 1);

    // abelian: every class a singleton
    auto z12 = cyclic_group(12);
    auto acc = conjugacy_classes(z12);
    CHECK(acc.count() == 12);

    // witnesses actually conjugate representatives to members
    auto s4 = sym(4);
    auto scc = conjugacy_classes(s4);
    int total = 0;
    for (int s : scc.class_sizes) total += s;
    CHECK(total == 24);
    for (int x = 0; x < 24; ++x) {
        int c = scc.class_of[x];
        int w = scc.witness[x];
        CHECK(s4->conj(w, scc.class_reps[c]) == x);
    }

    // conjugation permutes classes identically
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int g = static_cast<int>(rng() % 24);
        for (int x = 0; x < 24; ++x)
            CHECK(scc.class_of[s4->conj(g, x)] == scc.class_of[x]);
    }
}

TEST_CASE("subgroups and cosets") {
    auto s4 = sym(4);
    CHECK(trivial_subgroup(s4).order() == 1);
    CHECK(subgroup_from(s4, {}).order() == 1);

    // one element of prime order generates a cyclic subgroup
    int transposition = s4->index_of(pe({1, 0, 2, 3}));
    REQUIRE(transposition > 0);
    auto c2 = subgroup_from(s4, {transposition});
    CHECK(c2.order() == 2);
    CHECK(element_order(s4, transposition) == 2);

    // Lagrange holds for a batch of generated subgroups
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int a = static_cast<int>(rng() % 24), b = static_cast<int>(rng() % 24);
        auto h = subgroup_from(s4, {a, b});
        CHECK(24 % h.order() == 0);
        CHECK(is_subgroup_of(s4, h));
    }

    auto full = full_subgroup(s4);
    auto ct_full = coset_table(s4, full);
    CHECK(ct_full.index() == 1);
    auto ct_triv = coset_table(s4, trivial_subgroup(s4));
    CHECK(ct_triv.index() == 24);

    // action facts: well-defined transitive permutation action, H fixes H
    auto h = subgroup_from(s4, {transposition});
    auto ct = coset_table(s4, h);
    CHECK(ct.index() == 12);
    for (int x : h.members) CHECK(ct.action[x][0] == 0);
    for (int x = 0; x < 24; ++x) {
        std::vector<char> hit(ct.index(), 0);
        for (int c = 0; c < ct.index(); ++c) hit[ct.action[x][c]] = 1;
        CHECK(std::count(hit.begin(), hit.end(), 1) == ct.index());
    }
    // compatibility with multiplication
    for (int x = 0; x < 24; ++x)
        for (int c = 0; c < ct.index(); ++c)
            CHECK(ct.action[x][c] == ct.coset_of_element[s4->mul(ct.coset_reps[c], x)]);
}

TEST_CASE("element orders") {
    auto s6 = sym(6);
    CHECK(element_order(s6, 0) == 1);
    int t = s6->index_of(pe({1, 0, 2, 3, 4, 5}));
    CHECK(element_order(s6, t) == 2);
    CHECK(s6->exponent() == 60);

    // x=1, y=1 unitriangular element of the order-27 Heisenberg group
    auto h3 = heisenberg_group(3, 1);
    const auto& c = *dynamic_cast<const HeisenbergCarrier*>(h3->carrier().get());
    auto f = c.field;
    int g = h3->index_of(c.encode(f.one(), f.one(), f.zero()));
    REQUIRE(g >= 0);
    CHECK(element_order(h3, g) == 3);
}

TEST_CASE("normal cores") {
    auto s4 = sym(4);
    // V4 is normal, so it is its own core
    int d1 = s4->index_of(pe({1, 0, 3, 2}));
    int d2 = s4->index_of(pe({2, 3, 0, 1}));
    auto v4 = subgroup_from(s4, {d1, d2});
    REQUIRE(v4.order() == 4);
    auto core = normal_core(s4, v4);
    CHECK(core.members == v4.members);

    // a point stabilizer has trivial core
    std::vector<int> stab;
    for (int g = 0; g < 24; ++g)
        if (s4->encoding(g)[3] == 3) stab.push_back(g);
    auto h = Subgroup{s4, stab};
    CHECK(h.order() == 6);
    CHECK(normal_core(s4, h).order() == 1);

    // largest-normal property by brute force over subgroups of S_4
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        int a = static_cast<int>(rng() % 24), b = static_cast<int>(rng() % 24);
        auto sub = subgroup_from(s4, {a, b});
        auto cr = normal_core(s4, sub);
        for (int x : cr.members)
            CHECK(sub.contains(x));
        // normality
        for (int g = 0; g < 24; ++g)
            for (int x : cr.members) CHECK(cr.contains(s4->conj(g, x)));
    }
}

TEST_CASE("subgroup conjugacy") {
    auto s4 = sym(4);
    int t01 = s4->index_of(pe({1, 0, 2, 3}));
    int t23 = s4->index_of(pe({0, 1, 3, 2}));
    auto h = subgroup_from(s4, {t01});
    auto k = subgroup_from(s4, {t23});

    auto same = are_subgroups_conjugate(s4, h, h);
    CHECK(same.conjugate);
    CHECK(same.witness == 0);

    auto w = are_subgroups_conjugate(s4, h, k);
    REQUIRE(w.conjugate);
    for (int x : h.members) CHECK(k.contains(s4->conj(w.witness, x)));

    // different orders are never conjugate
    auto c3 = subgroup_from(s4, {s4->index_of(pe({1, 2, 0, 3}))});
    CHECK_FALSE(are_subgroups_conjugate(s4, h, c3).conjugate);

    // V4 (normal) vs a non-normal Klein subgroup: same order, not conjugate
    auto v4 = subgroup_from(s4, {s4->index_of(pe({1, 0, 3, 2})),
                                 s4->index_of(pe({2, 3, 0, 1}))});
    auto k4 = subgroup_from(s4, {t01, t23});
    REQUIRE(k4.order() == 4);
    CHECK_FALSE(are_subgroups_conjugate(s4, v4, k4).conjugate);
}

TEST_CASE("commutator subgroup") {
    auto s4 = sym(4);
    auto comm = commutator_subgroup(s4);
    CHECK(comm.order() == 12);  // A_4
    auto z6 = cyclic_group(6);
    CHECK(commutator_subgroup(z6).order() == 1);
}
