#pragma once

#include "specgeo/bigint.hpp"
#include "specgeo/poly.hpp"

#include <vector>

namespace specgeo {

using IntMatrix = std::vector<std::vector<Integer>>;

inline constexpr size_t kDefaultMatrixDimCap = 1024;

// det(xI - M), monic of degree dim(M). Exact: Hessenberg charpoly modulo
// word-size primes, reconstructed by CRT against a Hadamard-style
// coefficient bound.
IntegerPolynomial integer_charpoly(const IntMatrix& m, size_t dim_cap = kDefaultMatrixDimCap);

}  // namespace specgeo
