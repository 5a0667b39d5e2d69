#pragma once

// Marginal-sum encodings: fixed-width binary fields, the 2D integer encoding
// g1 and the 3D bit encoding g2.

#include <cstdint>
#include <vector>

#include "cthash/bits.hpp"
#include "cthash/tensor.hpp"

namespace cthash {

// `value` on exactly `width` bits, most significant first.
BitString bin(Natural value, unsigned width);

// Bits needed for every integer in [0, n]: ceil(log2(n + 1)).
unsigned f0(Natural n);

// Largest row sum R(i,k), column sum C(j,k) and file sum F(i,j) respectively.
Natural f1(const Tensor3& t);
Natural f2(const Tensor3& t);
Natural f3(const Tensor3& t);
// Largest line sum in any direction.
Natural f4(const Tensor3& t);

// g1 of a 2D matrix: its row sums followed by its column sums.
std::vector<Natural> g1(const Matrix2& a);

// Field width used by g2: max(1, f0(f4(t))). The floor keeps the zero
// tensor's encoding non-empty.
unsigned g2_width(const Tensor3& t);
unsigned g2_width(const MarginalTriple& m);

// Every R(i,k), then every C(j,k), then every F(i,j), first index outer,
// each written with bin(., width).
BitString encode_marginals(const MarginalTriple& m, unsigned width);

// Adaptive-width encoding: 3 n^2 fields of g2_width(t) bits.
BitString g2(const Tensor3& t);
// Same layout with a caller-chosen field width. Range error if some
// marginal does not fit.
BitString g2_fixed(const Tensor3& t, unsigned width);

// Inverse of encode_marginals for a known side and width. Shape error when
// the length is not 3 n^2 width.
MarginalTriple decode_marginals(const BitString& bits, std::size_t n, unsigned width);

}  // namespace cthash
