#pragma once

// Constructions from the reduction of 3DCT to the two-matrix collision
// problem: the bit-string pseudo-duplication `duplic`, the doubled tables C
// and D built from a 0/1 table A, the recovery A = C(., j, .) + C(., j+n, .),
// and exhaustive 3DCT solvers that stand in for the hypothetical oracle at
// tiny sides.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cthash/bits.hpp"
#include "cthash/tensor.hpp"

namespace cthash {

struct DuplicLayout {
  std::size_t n = 0;
  unsigned width = 0;       // f0(n)
  std::size_t length = 0;   // 3 n^2 width

  static DuplicLayout for_side(std::size_t n);
};

// i * n * f0(n), for 0 <= i <= 3n.
std::size_t t_offset(std::size_t i, std::size_t n);

// Group i (1-based, 1 <= i <= 3n) of n fields: bits t(i-1,n) .. t(i,n)-1.
BitString strcopy(const BitString& x, std::size_t i, std::size_t n);
BitString dcopy(const BitString& x, std::size_t i, std::size_t n);

// Six lines: groups 1..n doubled, twice; groups n+1..2n doubled, twice;
// groups 2n+1..3n doubled, twice. Output is 4 |x| bits.
BitString duplic(const BitString& x, std::size_t n);

// Side-2n 0/1 tables holding A in four of the eight (n x n x n) octants.
// C uses octants (i,j,k) in {000, 110, 011, 101} (upper/lower half per
// index); D uses the complementary four.
Tensor3 build_c(const Tensor3& a);
Tensor3 build_d(const Tensor3& a);

// A(i,j,k) = C(i,j,k) + C(i,j+n,k). With `require_binary`, an entry above 1
// is a Range error.
Tensor3 recover(const Tensor3& c, bool require_binary = true);

struct SolverLimits {
  std::size_t max_side = 3;
};

// Allowed values per cell, ascending, in (i,j,k) order.
using CellDomains = std::vector<std::vector<Natural>>;

CellDomains binary_domains(std::size_t n);
CellDomains natural_domains(const MarginalTriple& target);
// {0, weights(i,j,k)}: the tables A .* weights for 0/1 tables A.
CellDomains weighted_domains(const Tensor3& weights);

// Depth-first enumeration of every table whose marginals equal `target`
// and whose cells take values from `domains`, in lexicographic order of the
// entry sequence. `visit` returns false to stop. Returns the number of
// tables visited. Limit error when the side exceeds `limits.max_side`.
std::size_t enumerate_tables(const MarginalTriple& target, const CellDomains& domains,
                             const std::function<bool(const Tensor3&)>& visit,
                             SolverLimits limits = {});

// Lexicographically smallest table realizing the marginals, if any.
std::optional<Tensor3> brute_force_3dct(const MarginalTriple& target, bool binary,
                                        SolverLimits limits = {});

// Every 0/1 table A with marginals3(A .* weights) == target.
std::vector<Tensor3> weighted_fiber(const MarginalTriple& target, const Tensor3& weights,
                                    SolverLimits limits = {});

struct Sol3dctResult {
  Tensor3 table;               // side n, g2_fixed(table, f0(n)) == x
  Tensor3 doubled;             // the side-2n solution it was recovered from
  std::size_t candidates = 0;  // side-2n solutions examined
};

inline constexpr std::size_t kSol3dctMaxSide = 2;

// Runs the reduction end to end: z = duplic(x, n), enumerate side-2n 0/1
// tables with marginals z (V = W = all ones), recover each and return the
// first whose fixed-width encoding is x. Infeasible error when none exists.
Sol3dctResult sol3dct_demo(const BitString& x, std::size_t n,
                           std::size_t max_side = kSol3dctMaxSide);

}  // namespace cthash
