#pragma once

#include "specgeo/poly.hpp"

#include <memory>
#include <vector>

namespace specgeo {

struct RealEmbedding {
    int index = 0;              // position among real roots, ascending
    RootInterval interval;      // isolating interval for the root
};

// Q[x]/(f) for a monic squarefree integer polynomial f, with its real
// embeddings isolated by Sturm sequences. Not required to be irreducible;
// elements compare to zero by their coordinate vector.
class NumberField {
public:
    explicit NumberField(IntegerPolynomial minpoly);

    const IntegerPolynomial& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    int r1() const { return static_cast<int>(real_embeddings_.size()); }
    int r2() const { return (degree() - r1()) / 2; }
    bool totally_real() const { return r2() == 0; }
    bool totally_imaginary() const { return r1() == 0; }
    const std::vector<RealEmbedding>& real_embeddings() const { return real_embeddings_; }

    // CM bookkeeping: set when built by make_cm_extension.
    bool is_cm = false;
    std::shared_ptr<const NumberField> cm_base;

private:
    IntegerPolynomial minpoly_;
    std::vector<RealEmbedding> real_embeddings_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

inline NumberFieldPtr make_number_field(IntegerPolynomial minpoly) {
    return std::make_shared<NumberField>(std::move(minpoly));
}

// Element of a number field in the power basis of theta.
class NumberFieldElement {
public:
    NumberFieldElement(NumberFieldPtr field, std::vector<Rational> coords);
    static NumberFieldElement from_rational(NumberFieldPtr field, Rational c);
    static NumberFieldElement generator(NumberFieldPtr field);  // theta

    const NumberFieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;

    NumberFieldElement operator+(const NumberFieldElement& o) const;
    NumberFieldElement operator-(const NumberFieldElement& o) const;
    NumberFieldElement operator*(const NumberFieldElement& o) const;
    NumberFieldElement operator-() const;
    bool operator==(const NumberFieldElement& o) const;

    // Numerator polynomial with cleared denominators (integer coeffs).
    IntegerPolynomial numerator_poly() const;

private:
    void check_same_field(const NumberFieldElement& o) const;
    NumberFieldPtr field_;
    std::vector<Rational> coords_;
};

// Exact sign of the image of a under the embedding e of its field.
int sign_at_embedding(const NumberFieldElement& a, const RealEmbedding& e);

// E = F(sqrt(-d)): minimal polynomial of theta_F + sqrt(-d) via the exact
// characteristic polynomial of the Kronecker-sum multiplication matrix.
// Throws if the composite is degenerate (resultant not squarefree) or the
// result fails the totally-imaginary check.
NumberFieldPtr make_cm_extension(const NumberFieldPtr& totally_real_base, unsigned long d);

}  // namespace specgeo
