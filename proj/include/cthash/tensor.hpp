#pragma once

// Exact natural-valued 2D matrices and cubic 3D tables, their element
// products and marginal sums, and Ryser interchanges on 0/1 matrices.
//
// Indices are 0-based throughout the API. Text formats and CLI output use
// 1-based positions.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace cthash {

using Natural = std::uint64_t;

class Matrix2 {
 public:
  Matrix2() = default;
  Matrix2(std::size_t rows, std::size_t cols, Natural fill = 0);
  Matrix2(std::size_t rows, std::size_t cols, std::vector<Natural> entries);
  // Row-major nested initializer; every row must have the same length.
  static Matrix2 from_rows(const std::vector<std::vector<Natural>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Natural operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Natural& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const Natural> entries() const noexcept { return entries_; }
  bool is_binary() const noexcept;

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
  friend auto operator<=>(const Matrix2&, const Matrix2&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Natural> entries_;
};

// n x n x n table indexed (i, j, k); storage is i-major, then j, then k.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n, Natural fill = 0);
  Tensor3(std::size_t n, std::vector<Natural> entries);

  std::size_t side() const noexcept { return n_; }
  std::size_t volume() const noexcept { return entries_.size(); }

  std::size_t offset(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return (i * n_ + j) * n_ + k;
  }
  Natural operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[offset(i, j, k)];
  }
  Natural& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return entries_[offset(i, j, k)];
  }

  std::span<const Natural> entries() const noexcept { return entries_; }
  std::span<Natural> entries() noexcept { return entries_; }

  bool is_binary() const noexcept;
  bool is_zero() const noexcept;
  // Checked sum of all entries.
  Natural total() const;

  friend bool operator==(const Tensor3&, const Tensor3&) = default;
  friend auto operator<=>(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Natural> entries_;
};

struct RowColPair {
  std::vector<Natural> row_sums;     // R, length m
  std::vector<Natural> column_sums;  // S, length n

  friend bool operator==(const RowColPair&, const RowColPair&) = default;
  friend auto operator<=>(const RowColPair&, const RowColPair&) = default;
};

// Row sums R(i,k) (over j), column sums C(j,k) (over i), file sums F(i,j)
// (over k) of a Tensor3, each stored as an n x n Matrix2.
struct MarginalTriple {
  Matrix2 rows;
  Matrix2 columns;
  Matrix2 files;

  std::size_t side() const noexcept { return rows.rows(); }
  Natural max_entry() const noexcept;

  friend bool operator==(const MarginalTriple&, const MarginalTriple&) = default;
  friend auto operator<=>(const MarginalTriple&, const MarginalTriple&) = default;
};

Natural checked_add(Natural a, Natural b);
Natural checked_mul(Natural a, Natural b);

Matrix2 elem_product2(const Matrix2& a, const Matrix2& b);
Tensor3 elem_product3(const Tensor3& a, const Tensor3& b);

RowColPair marginals2(const Matrix2& a);
MarginalTriple marginals3(const Tensor3& t);

// Applies the (k, l; u, v)-interchange: the 2x2 submatrix on rows {k, l} and
// columns {u, v} must read [[1,0],[0,1]] or [[0,1],[1,0]] and is swapped for
// the other pattern.
Matrix2 interchange(const Matrix2& a, std::size_t k, std::size_t l, std::size_t u, std::size_t v);
bool interchange_applicable(const Matrix2& a, std::size_t k, std::size_t l, std::size_t u,
                            std::size_t v);

inline constexpr std::size_t kDefaultInterchangeStateCap = 1'000'000;

// Every matrix reachable from `a` by finite sequences of interchanges
// (including `a`). Breadth-first; throws ErrorKind::Limit once more than
// `state_cap` states have been discovered.
std::set<Matrix2> interchange_class(const Matrix2& a,
                                    std::size_t state_cap = kDefaultInterchangeStateCap);
bool interchange_reachable(const Matrix2& a, const Matrix2& b,
                           std::size_t state_cap = kDefaultInterchangeStateCap);

// Text formats. Tensor: "n" then n^3 integers in (i,j,k) order.
// Matrix2: "m n" then m*n integers row-major. Whitespace-separated.
Tensor3 read_tensor(std::istream& in);
void write_tensor(std::ostream& out, const Tensor3& t);
Matrix2 read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix2& m);

std::string to_string(const Tensor3& t);

}  // namespace cthash
