#include "doctest.h"

#include "specgeo/forms.hpp"

#include <cmath>
#include <random>

using namespace specgeo;

namespace {

IntegerPolynomial ip(std::vector<long> v) {
    std::vector<Integer> c;
    for (long x : v) c.emplace_back(x);
    return IntegerPolynomial(std::move(c));
}

NumberFieldPtr rationals() { return make_number_field(ip({0, 1})); }

NumberFieldElement nfe(const NumberFieldPtr& k, std::vector<long> coords) {
    std::vector<Rational> c(coords.begin(), coords.end());
    return NumberFieldElement(k, std::move(c));
}

// diag(1, ..., 1, last) with n leading ones
ModelForm ones_and(const NumberFieldPtr& k, unsigned n, NumberFieldElement last,
                   int distinguished = 0) {
    std::vector<NumberFieldElement> e(n, NumberFieldElement::from_rational(k, 1));
    e.push_back(std::move(last));
    return make_model_form(k, std::move(e), distinguished);
}

ProjectivePoint real_point(std::vector<double> v) {
    std::vector<Quaternion> q;
    for (double x : v) q.push_back({x, 0, 0, 0});
    return make_projective_point(Space::R, std::move(q));
}

}  // namespace

TEST_CASE("number field shapes") {
    auto q = rationals();
    CHECK(q->degree() == 1);
    CHECK(q->r1() == 1);
    CHECK(q->totally_real());

    auto k2 = make_number_field(ip({-2, 0, 1}));
    CHECK(k2->r1() == 2);
    CHECK(k2->r2() == 0);
    CHECK(k2->totally_real());

    auto qi = make_number_field(ip({1, 0, 1}));
    CHECK(qi->r1() == 0);
    CHECK(qi->r2() == 1);
    CHECK(qi->totally_imaginary());
}

TEST_CASE("cm extensions") {
    auto q = rationals();
    auto gauss = make_cm_extension(q, 1);
    CHECK(gauss->degree() == 2);
    CHECK(gauss->r1() == 0);
    CHECK(gauss->r2() == 1);
    CHECK(gauss->is_cm);
    CHECK(gauss->cm_base == q);

    auto k2 = make_number_field(ip({-2, 0, 1}));
    auto e1 = make_cm_extension(k2, 1);
    CHECK(e1->degree() == 4);
    CHECK(e1->r1() == 0);
    CHECK(e1->r2() == 2);

    auto e2 = make_cm_extension(k2, 2);  // Q(sqrt 2, sqrt -2)
    CHECK(e2->degree() == 4);
    CHECK(e2->totally_imaginary());
}

TEST_CASE("signatures at embeddings") {
    auto k2 = make_number_field(ip({-2, 0, 1}));
    // embedding 0 sends theta to the negative root, embedding 1 to the
    // positive one
    auto b = ones_and(k2, 3, -NumberFieldElement::generator(k2), 1);
    CHECK(signature_at_embedding(b, 1) == std::pair<int, int>{3, 1});
    CHECK(signature_at_embedding(b, 0) == std::pair<int, int>{4, 0});
    CHECK_THROWS(signature_at_embedding(b, 2));

    auto q = rationals();
    auto hyp = make_model_form(q, {nfe(q, {1}), nfe(q, {-1})});
    CHECK(signature_at_embedding(hyp, 0) == std::pair<int, int>{1, 1});

    // wrong signature at the distinguished embedding rejected
    CHECK_THROWS(ones_and(k2, 3, -NumberFieldElement::generator(k2), 0));
    CHECK_THROWS(make_model_form(q, {nfe(q, {1}), nfe(q, {0})}));
}

TEST_CASE("admissibility") {
    auto k2 = make_number_field(ip({-2, 0, 1}));
    auto good = ones_and(k2, 3, -NumberFieldElement::generator(k2), 1);
    auto rep = is_admissible(good);
    CHECK(rep.admissible);
    REQUIRE(rep.signatures.size() == 2);
    CHECK(rep.signatures[0] == std::pair<int, int>{4, 0});
    CHECK(rep.signatures[1] == std::pair<int, int>{3, 1});

    // diag(1,1,1,-1) has signature (3,1) at both embeddings
    auto bad = ones_and(k2, 3, nfe(k2, {-1, 0}), 1);
    CHECK_FALSE(is_admissible(bad).admissible);

    // over Q admissibility is vacuous
    auto q = rationals();
    CHECK(is_admissible(ones_and(q, 2, nfe(q, {-1}))).admissible);

    // every signature is full: sum of p_j + q_j over embeddings
    int total = 0;
    for (auto [p, qq] : rep.signatures) total += p + qq;
    CHECK(total == k2->r1() * 4);

    auto qi = make_number_field(ip({1, 0, 1}));
    CHECK_THROWS(search_admissible_diagonal(qi, 2, 3));
}

TEST_CASE("first admissible form under the search ordering") {
    auto k2 = make_number_field(ip({-2, 0, 1}));
    auto b2 = search_admissible_diagonal(k2, 2, 3);
    REQUIRE(b2.has_value());
    REQUIRE(b2->entries.size() == 3);
    CHECK(b2->entries[0] == NumberFieldElement::from_rational(k2, 1));
    CHECK(b2->entries[1] == NumberFieldElement::from_rational(k2, 1));
    CHECK(b2->entries[2] == -NumberFieldElement::generator(k2));
    CHECK(b2->distinguished == 1);

    auto q = rationals();
    auto bq = search_admissible_diagonal(q, 2, 1);
    REQUIRE(bq.has_value());
    CHECK(bq->entries[0] == nfe(q, {1}));
    CHECK(bq->entries[1] == nfe(q, {1}));
    CHECK(bq->entries[2] == nfe(q, {-1}));

    auto k3 = make_number_field(ip({-3, 0, 1}));
    auto b3 = search_admissible_diagonal(k3, 2, 3);
    REQUIRE(b3.has_value());
    CHECK(b3->entries[2] == -NumberFieldElement::generator(k3));

    // whatever comes back is admissible
    auto k5 = make_number_field(ip({-5, 0, 1}));
    for (unsigned n : {1u, 2u, 3u}) {
        auto b = search_admissible_diagonal(k5, n, 4);
        REQUIRE(b.has_value());
        CHECK(is_admissible(*b).admissible);
        CHECK(b->n() == n);
    }
}

TEST_CASE("totally definite quaternion algebras") {
    auto q = rationals();
    auto hamilton = quaternion_totally_definite({q, nfe(q, {-1}), nfe(q, {-1})});
    CHECK(hamilton.totally_definite);
    REQUIRE(hamilton.signs.size() == 1);
    CHECK(hamilton.signs[0] == std::array<int, 2>{-1, -1});

    CHECK_FALSE(quaternion_totally_definite({q, nfe(q, {1}), nfe(q, {-7})}).totally_definite);

    // (-1, sqrt 2 - 2): both conjugates of the second parameter negative
    auto k2 = make_number_field(ip({-2, 0, 1}));
    auto rep = quaternion_totally_definite({k2, nfe(k2, {-1, 0}), nfe(k2, {-2, 1})});
    CHECK(rep.totally_definite);
    CHECK(rep.signs.size() == 2);

    // (-1, sqrt 2) is definite at one embedding only
    CHECK_FALSE(
        quaternion_totally_definite({k2, nfe(k2, {-1, 0}), nfe(k2, {0, 1})}).totally_definite);

    CHECK_THROWS(quaternion_totally_definite({q, nfe(q, {0}), nfe(q, {-1})}));
}

TEST_CASE("cocompactness rule table") {
    auto k2 = make_number_field(ip({-2, 0, 1}));
    auto b2 = *search_admissible_diagonal(k2, 2, 3);
    auto v = classify_cocompactness(Space::R, b2);
    CHECK(v.verdict == Cocompactness::cocompact);
    CHECK_FALSE(v.witness.has_value());

    // inadmissible over a quadratic field rejected
    auto bad = ones_and(k2, 3, nfe(k2, {-1, 0}), 1);
    CHECK_THROWS(classify_cocompactness(Space::R, bad));

    auto q = rationals();
    auto std_form = ones_and(q, 2, nfe(q, {-1}));
    CHECK(classify_cocompactness(Space::H, std_form).verdict == Cocompactness::noncocompact);
    CHECK(classify_cocompactness(Space::C, std_form).verdict == Cocompactness::noncocompact);
    auto big = ones_and(q, 4, nfe(q, {-1}));
    CHECK(classify_cocompactness(Space::R, big).verdict == Cocompactness::noncocompact);
}

TEST_CASE("rational isotropy analysis") {
    auto q = rationals();

    // x^2 + y^2 = 7 z^2 has no primitive solution mod 8
    auto b7 = ones_and(q, 2, nfe(q, {-7}));
    auto v7 = classify_cocompactness(Space::R, b7);
    CHECK(v7.verdict == Cocompactness::cocompact);
    REQUIRE(v7.obstruction_modulus.has_value());
    CHECK(*v7.obstruction_modulus == 8);

    // the standard form is isotropic: witness verified exactly
    auto std_form = ones_and(q, 2, nfe(q, {-1}));
    auto v1 = classify_cocompactness(Space::R, std_form);
    CHECK(v1.verdict == Cocompactness::noncocompact);
    REQUIRE(v1.witness.has_value());
    Rational s = 0;
    bool nonzero = false;
    for (size_t i = 0; i < 3; ++i) {
        s += std_form.entries[i].coords()[0] * (*v1.witness)[i] * (*v1.witness)[i];
        if ((*v1.witness)[i] != 0) nonzero = true;
    }
    CHECK(s == 0);
    CHECK(nonzero);

    // binary: x^2 = 2 y^2 has no rational solution, mod 8 certificate
    auto bin = make_model_form(q, {nfe(q, {1}), nfe(q, {-2})});
    auto vb = classify_cocompactness(Space::R, bin);
    CHECK(vb.verdict == Cocompactness::cocompact);
    CHECK(vb.obstruction_modulus.has_value());
    // binary with square ratio is isotropic
    auto bin2 = make_model_form(q, {nfe(q, {4}), nfe(q, {-1})});
    CHECK(classify_cocompactness(Space::R, bin2).verdict == Cocompactness::noncocompact);

    // quaternary isotropic form
    auto q4 = make_model_form(q, {nfe(q, {1}), nfe(q, {2}), nfe(q, {3}), nfe(q, {-6})});
    auto v4 = classify_cocompactness(Space::R, q4);
    CHECK(v4.verdict == Cocompactness::noncocompact);
    REQUIRE(v4.witness.has_value());
}

TEST_CASE("hyperbolic distance matches the upper half plane") {
    auto x = real_point({0, 1});
    CHECK(hyperbolic_distance(x, x, Space::R) == doctest::Approx(0).epsilon(1e-12));
    for (double s : {0.5, 1.0, 2.0}) {
        auto y = real_point({std::sinh(s), std::cosh(s)});
        CHECK(hyperbolic_distance(x, y, Space::R) == doctest::Approx(s).epsilon(1e-9));

        // quaternionic coordinates, same geodesic
        ProjectivePoint xq = make_projective_point(Space::H, {{0, 0, 0, 0}, {1, 0, 0, 0}});
        ProjectivePoint yq =
            make_projective_point(Space::H, {{0, std::sinh(s), 0, 0}, {std::cosh(s), 0, 0, 0}});
        CHECK(hyperbolic_distance(xq, yq, Space::H) == doctest::Approx(s).epsilon(1e-9));
    }

    // positive vectors are not points
    CHECK_THROWS(real_point({1, 0}));
    CHECK_THROWS(make_projective_point(Space::R, {{0, 1, 0, 0}, {1, 0, 0, 0}}));
    CHECK_THROWS(make_projective_point(Space::C, {{0, 0, 1, 0}, {2, 0, 0, 0}}));
}

TEST_CASE("distance invariances") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2, 2);
    auto random_point = [&] {
        double a = u(rng), b = u(rng);
        double c = std::sqrt(a * a + b * b + 1 + std::abs(u(rng)));
        return real_point({a, b, c});
    };

    // symmetry and triangle inequality
    for (int t = 0; t < 1000; ++t) {
        auto x = random_point(), y = random_point(), z = random_point();
        double dxy = hyperbolic_distance(x, y, Space::R);
        double dyx = hyperbolic_distance(y, x, Space::R);
        CHECK(std::abs(dxy - dyx) < 1e-10);
        double dxz = hyperbolic_distance(x, z, Space::R);
        double dyz = hyperbolic_distance(y, z, Space::R);
        CHECK(dxy <= dxz + dyz + 1e-9);
    }

    // scale invariance, including quaternionic scalars
    for (int t = 0; t < 100; ++t) {
        double s = 0.3 + std::abs(u(rng));
        ProjectivePoint x = make_projective_point(Space::H, {{0, 0, 0, 0}, {1, 0, 0, 0}});
        ProjectivePoint y =
            make_projective_point(Space::H, {{0, std::sinh(s), 0, 0}, {std::cosh(s), 0, 0, 0}});
        Quaternion lam{u(rng), u(rng), u(rng), u(rng)};
        Quaternion mu{u(rng), u(rng), u(rng), u(rng)};
        if (lam.norm2() < 1e-3 || mu.norm2() < 1e-3) continue;
        ProjectivePoint xs = x, ys = y;
        for (auto& c : xs.coords) c = c * lam;
        for (auto& c : ys.coords) c = c * mu;
        CHECK(std::abs(hyperbolic_distance(xs, ys, Space::H) -
                       hyperbolic_distance(x, y, Space::H)) < 1e-10);
    }

    // isometry invariance under words in an exact Lorentz matrix
    const double L[3][3] = {{1, 2, 2}, {2, 1, 2}, {2, 2, 3}};
    const double Li[3][3] = {{1, 2, -2}, {2, 1, -2}, {-2, -2, 3}};  // inverse
    for (int t = 0; t < 100; ++t) {
        auto x = random_point(), y = random_point();
        double d0 = hyperbolic_distance(x, y, Space::R);
        for (int step = 0; step < 3; ++step) {
            const auto& M = (rng() & 1) ? L : Li;
            auto apply = [&](const ProjectivePoint& p) {
                std::vector<double> v(3, 0);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) v[i] += M[i][j] * p.coords[j].w;
                return real_point(v);
            };
            x = apply(x);
            y = apply(y);
        }
        CHECK(std::abs(hyperbolic_distance(x, y, Space::R) - d0) < 1e-9);
    }
}

TEST_CASE("form preservation checks") {
    std::vector<Rational> diag = {1, 1, -1};
    std::vector<std::vector<Rational>> id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(preserves_form(id, diag));
    std::vector<std::vector<Rational>> lorentz = {{1, 2, 2}, {2, 1, 2}, {2, 2, 3}};
    CHECK(preserves_form(lorentz, diag));
    std::vector<std::vector<Rational>> shear = {{1, 1}, {0, 1}};
    CHECK_FALSE(preserves_form(shear, {1, -1}));
    CHECK_THROWS(preserves_form(shear, diag));

    // preserved form means preserved values on exact vectors
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> ci(-9, 9);
    auto bval = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Rational s = 0;
        for (int i = 0; i < 3; ++i) s += a[i] * diag[i] * b[i];
        return s;
    };
    for (int t = 0; t < 200; ++t) {
        std::vector<Rational> x = {ci(rng), ci(rng), ci(rng)};
        std::vector<Rational> y = {ci(rng), ci(rng), ci(rng)};
        auto mulv = [&](const std::vector<Rational>& v) {
            std::vector<Rational> r(3, 0);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) r[i] += lorentz[i][j] * v[j];
            return r;
        };
        CHECK(bval(mulv(x), mulv(y)) == bval(x, y));
    }

    std::vector<std::vector<double>> lf = {{1, 2, 2}, {2, 1, 2}, {2, 2, 3}};
    CHECK(preserves_form(lf, {1, 1, -1}));
    lf[0][0] += 1e-6;
    CHECK_FALSE(preserves_form(lf, {1, 1, -1}));
}
