#pragma once

#include "specgeo/bigint.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace specgeo {

// Univariate polynomial with arbitrary-precision integer coefficients,
// stored ascending by degree. The zero polynomial has an empty
// coefficient vector.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<Integer> coeffs);
    static IntegerPolynomial constant(Integer c);
    static IntegerPolynomial monomial(int degree, Integer c = 1);

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Integer& leading() const;
    Integer coeff(int i) const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    IntegerPolynomial operator+(const IntegerPolynomial& o) const;
    IntegerPolynomial operator-(const IntegerPolynomial& o) const;
    IntegerPolynomial operator*(const IntegerPolynomial& o) const;
    IntegerPolynomial operator-() const;
    bool operator==(const IntegerPolynomial& o) const { return coeffs_ == o.coeffs_; }

    IntegerPolynomial derivative() const;
    Integer content() const;             // gcd of coefficients (0 for zero poly)
    IntegerPolynomial primitive_part() const;
    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

// gcd in Z[x], returned primitive with positive leading coefficient.
IntegerPolynomial poly_gcd(const IntegerPolynomial& a, const IntegerPolynomial& b);

// Squarefree part f / gcd(f, f'), primitive, positive leading coefficient.
IntegerPolynomial poly_radical(const IntegerPolynomial& f);

bool is_squarefree(const IntegerPolynomial& f);

// Rational isolating interval (lo, hi) for one real root.
struct RootInterval {
    Rational lo;
    Rational hi;
    bool is_exact() const { return lo == hi; }
};

// Sturm sequence of a squarefree integer polynomial; signed remainder
// chain with primitive-part scaling so all arithmetic stays in Z.
class SturmSequence {
public:
    explicit SturmSequence(const IntegerPolynomial& f);

    // Number of sign changes at rational x.
    int sign_changes_at(const Rational& x) const;
    // Number of real roots in the open interval (lo, hi]; standard Sturm
    // count. Endpoints must not be roots of f for open-interval reads.
    int count_roots(const Rational& lo, const Rational& hi) const;
    int count_all_real_roots() const;

    // A bound B such that all real roots lie in (-B, B).
    Rational root_bound() const;

    const IntegerPolynomial& poly() const { return chain_.front(); }

private:
    std::vector<IntegerPolynomial> chain_;
};

// Disjoint isolating intervals, one per real root, ascending.
// Requires f squarefree and nonconstant.
std::vector<RootInterval> isolate_real_roots(const IntegerPolynomial& f);

// Halve an isolating interval, keeping the root inside.
RootInterval refine_interval(const IntegerPolynomial& f, const RootInterval& iv);

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const Integer& n) { return sgn(n); }

}  // namespace specgeo
