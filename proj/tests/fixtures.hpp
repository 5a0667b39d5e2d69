#pragma once

// The five 3x3 members of A(R, S) with R = S = (2, 2, 1), the weight matrix
// W, and the g1 sequences of each A_i .* W.

#include <array>
#include <vector>

#include "cthash/tensor.hpp"

namespace cthash::fixtures {

inline const std::array<Matrix2, 5>& brualdi_matrices() {
  static const std::array<Matrix2, 5> a{
      Matrix2::from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}),
      Matrix2::from_rows({{1, 1, 0}, {1, 0, 1}, {0, 1, 0}}),
      Matrix2::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 0}}),
      Matrix2::from_rows({{0, 1, 1}, {1, 1, 0}, {1, 0, 0}}),
      Matrix2::from_rows({{1, 0, 1}, {1, 1, 0}, {0, 1, 0}}),
  };
  return a;
}

inline const Matrix2& weight_matrix() {
  static const Matrix2 w = Matrix2::from_rows({{1, 4, 9}, {2, 8, 18}, {3, 12, 27}});
  return w;
}

inline const std::array<std::vector<Natural>, 5>& weighted_g1() {
  static const std::array<std::vector<Natural>, 5> g{{
      {5, 10, 27, 3, 12, 27},
      {5, 20, 12, 3, 16, 18},
      {5, 26, 3, 4, 12, 18},
      {13, 10, 3, 5, 12, 9},
      {10, 10, 12, 3, 20, 9},
  }};
  return g;
}

}  // namespace cthash::fixtures
