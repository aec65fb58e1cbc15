#include "doctest.h"

#include "specgeo/constructions.hpp"

#include <algorithm>
#include <set>

using namespace specgeo;

TEST_CASE("heisenberg groups") {
    auto h4 = heisenberg_group(2, 2);
    CHECK(h4->order() == 64);
    auto h8 = heisenberg_group(2, 3);
    CHECK(h8->order() == 512);
    auto h9 = heisenberg_group(3, 2);
    CHECK(h9->order() == 729);

    // center {x = y = 0} has order q
    const auto& c = *dynamic_cast<const HeisenbergCarrier*>(h4->carrier().get());
    const auto& f = c.field;
    int central = 0;
    for (size_t g = 0; g < h4->order(); ++g) {
        bool commutes = true;
        for (int x : h4->generators())
            if (h4->mul(static_cast<int>(g), x) != h4->mul(x, static_cast<int>(g))) {
                commutes = false;
                break;
            }
        if (commutes) ++central;
    }
    CHECK(central == 4);
    int z = h4->index_of(c.encode(f.zero(), f.zero(), f.one()));
    CHECK(h4->mul(z, h4->generators()[0]) == h4->mul(h4->generators()[0], z));
}

TEST_CASE("horizontal subgroups") {
    auto h4 = heisenberg_group(2, 2);
    CHECK(horizontal_subgroup(h4).order() == 4);
    auto h9 = heisenberg_group(3, 2);
    CHECK(horizontal_subgroup(h9).order() == 9);
    auto h8 = heisenberg_group(2, 3);
    auto hor = horizontal_subgroup(h8);
    CHECK(hor.order() == 8);
    for (int g : hor.members)
        CHECK(element_order(h8, g) <= 2);
}

TEST_CASE("twist maps and representatives") {
    auto f4 = make_finite_field(2, 2);
    CHECK(all_endomorphisms(f4).size() == 16);
    CHECK(twist_representatives(2, 2).size() == 4);
    CHECK(twist_representatives(3, 2).size() == 9);
    CHECK(twist_representatives(2, 1).size() == 1);
    CHECK(twist_representatives(2, 1)[0].matrix == twist_zero(make_finite_field(2, 1)).matrix);

    // representatives are pairwise inequivalent modulo multiplication
    // operators, and every endomorphism lands in exactly one coset
    auto reps = twist_representatives(2, 2);
    auto diff = [&](const TwistMap& a, const TwistMap& b) {
        TwistMap d = a;
        for (unsigned i = 0; i < 2; ++i)
            for (unsigned j = 0; j < 2; ++j)
                d.matrix[i][j] = (a.matrix[i][j] + 2 - b.matrix[i][j]) % 2;
        return d;
    };
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            CHECK_FALSE(is_multiplication_operator(f4, diff(reps[i], reps[j])));
    int covered = 0;
    for (const auto& e : all_endomorphisms(f4))
        for (const auto& r : reps)
            if (is_multiplication_operator(f4, diff(e, r))) {
                ++covered;
                break;
            }
    CHECK(covered == 16);

    // multiplication operators compose like field multiplication
    auto f8 = make_finite_field(2, 3);
    for (uint64_t a = 0; a < 8; ++a)
        for (uint64_t b = 0; b < 8; ++b) {
            auto ma = multiplication_operator(f8, f8.from_index(a));
            auto prod = f8.mul(f8.from_index(a), f8.from_index(b));
            CHECK(ma.apply(f8, f8.from_index(b)) == prod);
            CHECK(is_multiplication_operator(f8, ma));
        }
}

TEST_CASE("twisted horizontal subgroups") {
    auto h4 = heisenberg_group(2, 2);
    auto f4 = make_finite_field(2, 2);
    auto hor = horizontal_subgroup(h4);

    CHECK(twisted_horizontal(h4, twist_zero(f4)).members == hor.members);

    // multiplication twists stay conjugate to the horizontal subgroup
    for (uint64_t ci = 1; ci < 4; ++ci) {
        auto tw = twisted_horizontal(h4, multiplication_operator(f4, f4.from_index(ci)));
        CHECK(tw.order() == 4);
        CHECK(are_subgroups_conjugate(h4, hor, tw).conjugate);
    }

    // the Frobenius map of F_4 is additive but not F_4-linear
    TwistMap frob{{{1, 1}, {0, 1}}};
    CHECK_FALSE(is_multiplication_operator(f4, frob));
    auto tw = twisted_horizontal(h4, frob);
    CHECK(tw.order() == 4);
    CHECK_FALSE(are_subgroups_conjugate(h4, hor, tw).conjugate);

    TwistMap bad{{{1}}};
    CHECK_THROWS(twisted_horizontal(h4, bad));
}

TEST_CASE("twist representatives give pairwise nonconjugate subgroups") {
    for (auto [p, n] : {std::pair<uint64_t, unsigned>{2, 2}, {3, 2}}) {
        auto heis = heisenberg_group(p, n);
        auto reps = twist_representatives(p, n);
        std::vector<Subgroup> subs;
        for (const auto& r : reps) subs.push_back(twisted_horizontal(heis, r));
        for (size_t i = 0; i < subs.size(); ++i)
            for (size_t j = i + 1; j < subs.size(); ++j)
                CHECK_FALSE(are_subgroups_conjugate(heis, subs[i], subs[j]).conjugate);
    }
}

TEST_CASE("affine groups") {
    auto a32 = affine_group(3, 2);
    CHECK(a32->order() == 216);
    auto a23 = affine_group(2, 3);
    CHECK(a23->order() == 1344);
    auto a52 = affine_group(5, 2);
    CHECK(a52->order() == 3000);

    // translations form a normal subgroup of order p^n
    auto trans = subspace_subgroup(a32, {{1, 0}, {0, 1}});
    CHECK(trans.order() == 9);
    for (size_t g = 0; g < a32->order(); ++g)
        for (int x : trans.members)
            CHECK(trans.contains(a32->conj(static_cast<int>(g), x)));
    CHECK(normal_core(a32, trans).members == trans.members);

    // matrix embedding multiplies consistently
    auto matmul = [](const std::vector<std::vector<uint64_t>>& a,
                     const std::vector<std::vector<uint64_t>>& b, uint64_t p) {
        size_t n = a.size();
        std::vector<std::vector<uint64_t>> r(n, std::vector<uint64_t>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                uint64_t s = 0;
                for (size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
                r[i][j] = s % p;
            }
        return r;
    };
    for (int a = 0; a < 40; ++a) {
        int b = (a * 37 + 11) % 216;
        CHECK(affine_to_matrix(a32, a32->mul(a, b)) ==
              matmul(affine_to_matrix(a32, a), affine_to_matrix(a32, b), 3));
    }
}

TEST_CASE("subspace subgroups") {
    auto a32 = affine_group(3, 2);
    CHECK(subspace_subgroup(a32, {}).order() == 1);
    auto line = subspace_subgroup(a32, {{1, 0}});
    CHECK(line.order() == 3);
    CHECK(coset_table(a32, line).index() == 72);
    CHECK(normal_core(a32, line).order() == 1);

    CHECK_THROWS(subspace_subgroup(a32, {{1, 0}, {2, 0}}));
    CHECK_THROWS(subspace_subgroup(a32, {{1, 0, 0}}));

    // any two lines are conjugate inside the affine group
    auto line2 = subspace_subgroup(a32, {{1, 1}});
    auto w = are_subgroups_conjugate(a32, line, line2);
    REQUIRE(w.conjugate);
    for (int x : line.members) CHECK(line2.contains(a32->conj(w.witness, x)));

    auto a52 = affine_group(5, 2);
    auto l1 = subspace_subgroup(a52, {{1, 0}});
    auto l2 = subspace_subgroup(a52, {{2, 3}});
    CHECK(l1.order() == 5);
    CHECK(are_subgroups_conjugate(a52, l1, l2).conjugate);
}

TEST_CASE("semidirect products") {
    // theta = {identity} reproduces A
    auto a = elementary_abelian_group(2, 2);
    auto sd0 = semidirect_product(a, {{0, 1, 2, 3}});
    CHECK(sd0->order() == 4);

    // Z/5 with inversion gives the dihedral group of order 10
    auto z5 = cyclic_group(5);
    std::vector<int> invmap(5);
    for (int i = 0; i < 5; ++i) invmap[i] = z5->inv(i);
    auto d10 = semidirect_product(z5, {invmap});
    CHECK(d10->order() == 10);
    int fives = 0, twos = 0;
    for (size_t g = 1; g < d10->order(); ++g) {
        auto o = element_order(d10, static_cast<int>(g));
        if (o == 5) ++fives;
        if (o == 2) ++twos;
    }
    CHECK(fives == 4);
    CHECK(twos == 5);
    auto base = semidirect_base(d10);
    CHECK(base.order() == 5);
    for (size_t g = 0; g < d10->order(); ++g)
        for (int x : base.members)
            CHECK(base.contains(d10->conj(static_cast<int>(g), x)));

    // F_3^2 acted on by SL(2, F_3) generators rebuilds the affine group
    auto v = elementary_abelian_group(3, 2);
    auto perm_of = [&](const std::vector<std::vector<uint64_t>>& m) {
        std::vector<int> perm(9);
        for (uint64_t idx = 0; idx < 9; ++idx) {
            uint64_t x = idx % 3, y = idx / 3;
            uint64_t nx = (m[0][0] * x + m[0][1] * y) % 3;
            uint64_t ny = (m[1][0] * x + m[1][1] * y) % 3;
            perm[idx] = static_cast<int>(nx + 3 * ny);
        }
        return perm;
    };
    auto sd = semidirect_product(v, {perm_of({{1, 1}, {0, 1}}), perm_of({{1, 0}, {1, 1}})});
    CHECK(sd->order() == 216);

    // rejections: non-abelian base, non-automorphism map
    auto d10b = semidirect_product(z5, {invmap});
    CHECK_THROWS(semidirect_product(d10b, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}));
    CHECK_THROWS(semidirect_product(z5, {{1, 0, 2, 3, 4}}));
    CHECK_THROWS(semidirect_product(z5, {{0, 2, 1, 3, 4}}));
}
