#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace specgeo {

// Default guardrail on p^n.
inline constexpr uint64_t kDefaultFieldSizeCap = 1u << 20;

// F_q with q = p^n, elements as coefficient vectors in the power basis of
// the modulus. The modulus is the lexicographically least monic
// irreducible of degree n over F_p (coefficients compared ascending from
// the constant term), so descriptors are reproducible across runs.
class FieldDescriptor {
public:
    FieldDescriptor(uint64_t p, unsigned n, uint64_t size_cap = kDefaultFieldSizeCap);

    uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    uint64_t q() const { return q_; }
    // Modulus coefficients ascending, length n+1, monic. For n = 1 the
    // degenerate convention modulus = x.
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    using Elt = std::vector<uint64_t>;  // length n, reduced mod p

    Elt zero() const { return Elt(n_, 0); }
    Elt one() const;
    Elt from_index(uint64_t idx) const;   // base-p digits, little-endian
    uint64_t to_index(const Elt& a) const;

    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt inv(const Elt& a) const;
    Elt pow(Elt a, uint64_t e) const;
    Elt frobenius(const Elt& a) const { return pow(a, p_); }
    bool is_zero(const Elt& a) const;

    // Fixed-width byte encoding of the coefficient vector (big-endian per
    // coefficient), giving a total order compatible with to_index.
    std::string encode(const Elt& a) const;

private:
    uint64_t p_;
    unsigned n_;
    uint64_t q_;
    std::vector<uint64_t> modulus_;
};

inline FieldDescriptor make_finite_field(uint64_t p, unsigned n,
                                         uint64_t size_cap = kDefaultFieldSizeCap) {
    return FieldDescriptor(p, n, size_cap);
}

}  // namespace specgeo
