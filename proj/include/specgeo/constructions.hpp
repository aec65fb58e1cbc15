#pragma once

#include "specgeo/finite_field.hpp"
#include "specgeo/group.hpp"

#include <vector>

namespace specgeo {

// ----- Heisenberg groups over F_q ------------------------------------

// Upper unitriangular 3x3 matrices over F_q, entries (x, y, t). Encoded
// as the concatenation of the three field-element encodings.
struct HeisenbergCarrier : GroupCarrier {
    explicit HeisenbergCarrier(FieldDescriptor field);
    Encoding identity() const override;
    Encoding mul(const Encoding& a, const Encoding& b) const override;
    Encoding inv(const Encoding& a) const override;
    std::string name() const override;

    Encoding encode(const FieldDescriptor::Elt& x, const FieldDescriptor::Elt& y,
                    const FieldDescriptor::Elt& t) const;
    void decode(const Encoding& e, FieldDescriptor::Elt& x, FieldDescriptor::Elt& y,
                FieldDescriptor::Elt& t) const;

    FieldDescriptor field;
    size_t width;  // bytes per field element
};

// Fully enumerated group of order q^3, q = p^n.
GroupPtr heisenberg_group(uint64_t p, unsigned n, size_t cap = kDefaultClosureCap);

// {(x, 0, 0)}: order q.
Subgroup horizontal_subgroup(const GroupPtr& heis);

// F_p-linear endomorphism of F_q in the power basis, row-major n x n
// matrix over F_p: (f(v))_i = sum_j matrix[i][j] v_j.
struct TwistMap {
    std::vector<std::vector<uint64_t>> matrix;

    FieldDescriptor::Elt apply(const FieldDescriptor& f, const FieldDescriptor::Elt& v) const;
    std::vector<uint64_t> flat() const;  // row-major, length n^2
};

TwistMap twist_zero(const FieldDescriptor& f);
// Matrix of multiplication by c in the power basis.
TwistMap multiplication_operator(const FieldDescriptor& f, const FieldDescriptor::Elt& c);
// All p^(n^2) F_p-linear endomorphisms, in flat lexicographic order.
std::vector<TwistMap> all_endomorphisms(const FieldDescriptor& f);
// Is f in the span of the multiplication operators (the embedded F_q)?
bool is_multiplication_operator(const FieldDescriptor& f, const TwistMap& t);

// Exactly p^(n(n-1)) coset representatives of the multiplication-operator
// subspace inside End_{F_p}(F_q): the deterministic complement spanned by
// the standard basis matrices at the non-pivot coordinates of the
// row-reduced F_q-subspace basis.
std::vector<TwistMap> twist_representatives(uint64_t p, unsigned n,
                                            uint64_t size_cap = kDefaultFieldSizeCap);

// {(x, 0, f(x))}: order q; equals the horizontal subgroup when f = 0.
Subgroup twisted_horizontal(const GroupPtr& heis, const TwistMap& f);

// ----- Affine groups F_p^n x| SL(n; F_p) ------------------------------

// Elements are pairs (v, M), product (v, M)(w, N) = (v + Mw, MN).
struct AffineCarrier : GroupCarrier {
    AffineCarrier(uint64_t p, unsigned n);
    Encoding identity() const override;
    Encoding mul(const Encoding& a, const Encoding& b) const override;
    Encoding inv(const Encoding& a) const override;
    std::string name() const override;

    Encoding encode(const std::vector<uint64_t>& v,
                    const std::vector<std::vector<uint64_t>>& m) const;
    void decode(const Encoding& e, std::vector<uint64_t>& v,
                std::vector<std::vector<uint64_t>>& m) const;

    uint64_t p;
    unsigned n;
};

GroupPtr affine_group(uint64_t p, unsigned n, size_t cap = kDefaultClosureCap);

// {(v, I) : v in span(basis)}, order p^dim.
Subgroup subspace_subgroup(const GroupPtr& affine, const std::vector<std::vector<uint64_t>>& basis);

// Optional cross-check embedding of (v, M) into GL(n+1; F_p).
std::vector<std::vector<uint64_t>> affine_to_matrix(const GroupPtr& affine, int element);

// ----- Generic semidirect products A x| <theta> -----------------------

// A must be abelian; each theta entry is a permutation of A's element
// indices and is verified to be an automorphism.
GroupPtr semidirect_product(const GroupPtr& abelian,
                            const std::vector<std::vector<int>>& theta,
                            size_t cap = kDefaultClosureCap);
// Image of A inside the semidirect product.
Subgroup semidirect_base(const GroupPtr& sd);

// Cyclic group Z/m with carrier arithmetic, handy for semidirect tests.
GroupPtr cyclic_group(uint64_t m);

// Elementary abelian group F_p^n (translations only).
GroupPtr elementary_abelian_group(uint64_t p, unsigned n);

// Symmetric-group carrier on {0..n-1}; elements encoded as permutation
// one-line notation bytes.
GroupPtr permutation_group(unsigned n, const std::vector<std::vector<int>>& generator_perms,
                           size_t cap = kDefaultClosureCap);

}  // namespace specgeo
