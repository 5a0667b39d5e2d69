#include "cthash/tensor.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

#include "cthash/error.hpp"

namespace cthash {

Natural checked_add(Natural a, Natural b) {
  Natural out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "natural addition overflows 64 bits");
  }
  return out;
}

Natural checked_mul(Natural a, Natural b) {
  Natural out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "natural multiplication overflows 64 bits");
  }
  return out;
}

// ---- Matrix2 ---------------------------------------------------------------

Matrix2::Matrix2(std::size_t rows, std::size_t cols, Natural fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

Matrix2::Matrix2(std::size_t rows, std::size_t cols, std::vector<Natural> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::Shape, "matrix entry count does not match " + std::to_string(rows_) +
                                      "x" + std::to_string(cols_));
  }
}

Matrix2 Matrix2::from_rows(const std::vector<std::vector<Natural>>& rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  std::vector<Natural> flat;
  flat.reserve(m * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::Shape, "ragged matrix rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Matrix2(m, n, std::move(flat));
}

bool Matrix2::is_binary() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Natural x) { return x <= 1; });
}

// ---- Tensor3 ---------------------------------------------------------------

Tensor3::Tensor3(std::size_t n, Natural fill) : n_(n), entries_(n * n * n, fill) {}

Tensor3::Tensor3(std::size_t n, std::vector<Natural> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_ * n_) {
    throw Error(ErrorKind::Shape,
                "tensor of side " + std::to_string(n_) + " needs " +
                    std::to_string(n_ * n_ * n_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
}

bool Tensor3::is_binary() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Natural x) { return x <= 1; });
}

bool Tensor3::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Natural x) { return x == 0; });
}

Natural Tensor3::total() const {
  Natural sum = 0;
  for (Natural x : entries_) sum = checked_add(sum, x);
  return sum;
}

Natural MarginalTriple::max_entry() const noexcept {
  Natural best = 0;
  for (const Matrix2* m : {&rows, &columns, &files}) {
    for (Natural x : m->entries()) best = std::max(best, x);
  }
  return best;
}

// ---- products and marginals ------------------------------------------------

Matrix2 elem_product2(const Matrix2& a, const Matrix2& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::Shape, "element product of matrices with different shapes");
  }
  std::vector<Natural> out(a.entries().size());
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    out[idx] = checked_mul(a.entries()[idx], b.entries()[idx]);
  }
  return Matrix2(a.rows(), a.cols(), std::move(out));
}

Tensor3 elem_product3(const Tensor3& a, const Tensor3& b) {
  if (a.side() != b.side()) {
    throw Error(ErrorKind::Shape, "element product of tensors with different sides");
  }
  std::vector<Natural> out(a.volume());
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    out[idx] = checked_mul(a.entries()[idx], b.entries()[idx]);
  }
  return Tensor3(a.side(), std::move(out));
}

RowColPair marginals2(const Matrix2& a) {
  RowColPair out{std::vector<Natural>(a.rows(), 0), std::vector<Natural>(a.cols(), 0)};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.row_sums[i] = checked_add(out.row_sums[i], a(i, j));
      out.column_sums[j] = checked_add(out.column_sums[j], a(i, j));
    }
  }
  return out;
}

MarginalTriple marginals3(const Tensor3& t) {
  const std::size_t n = t.side();
  MarginalTriple out{Matrix2(n, n), Matrix2(n, n), Matrix2(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Natural x = t(i, j, k);
        out.rows(i, k) = checked_add(out.rows(i, k), x);
        out.columns(j, k) = checked_add(out.columns(j, k), x);
        out.files(i, j) = checked_add(out.files(i, j), x);
      }
    }
  }
  return out;
}

// ---- interchanges ----------------------------------------------------------

namespace {

enum class Pattern { B0, B1, Neither };

Pattern classify(const Matrix2& a, std::size_t k, std::size_t l, std::size_t u, std::size_t v) {
  const Natural p = a(k, u), q = a(k, v), r = a(l, u), s = a(l, v);
  if (p == 1 && q == 0 && r == 0 && s == 1) return Pattern::B0;
  if (p == 0 && q == 1 && r == 1 && s == 0) return Pattern::B1;
  return Pattern::Neither;
}

void check_interchange_indices(const Matrix2& a, std::size_t k, std::size_t l, std::size_t u,
                               std::size_t v) {
  if (k >= a.rows() || l >= a.rows() || u >= a.cols() || v >= a.cols()) {
    throw Error(ErrorKind::Range, "interchange index outside the matrix");
  }
  if (k == l || u == v) {
    throw Error(ErrorKind::Range, "interchange needs two distinct rows and two distinct columns");
  }
}

}  // namespace

bool interchange_applicable(const Matrix2& a, std::size_t k, std::size_t l, std::size_t u,
                            std::size_t v) {
  check_interchange_indices(a, k, l, u, v);
  return classify(a, k, l, u, v) != Pattern::Neither;
}

Matrix2 interchange(const Matrix2& a, std::size_t k, std::size_t l, std::size_t u,
                    std::size_t v) {
  check_interchange_indices(a, k, l, u, v);
  if (classify(a, k, l, u, v) == Pattern::Neither) {
    throw Error(ErrorKind::NotApplicable,
                "submatrix on rows (" + std::to_string(k + 1) + "," + std::to_string(l + 1) +
                    ") columns (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                    ") is neither B0 nor B1");
  }
  Matrix2 out = a;
  out(k, u) = 1 - a(k, u);
  out(k, v) = 1 - a(k, v);
  out(l, u) = 1 - a(l, u);
  out(l, v) = 1 - a(l, v);
  return out;
}

std::set<Matrix2> interchange_class(const Matrix2& a, std::size_t state_cap) {
  if (!a.is_binary()) throw Error(ErrorKind::Range, "interchanges act on 0/1 matrices");
  std::set<Matrix2> seen{a};
  std::deque<Matrix2> frontier{a};
  while (!frontier.empty()) {
    const Matrix2 cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t k = 0; k < cur.rows(); ++k) {
      for (std::size_t l = k + 1; l < cur.rows(); ++l) {
        for (std::size_t u = 0; u < cur.cols(); ++u) {
          for (std::size_t v = u + 1; v < cur.cols(); ++v) {
            if (classify(cur, k, l, u, v) == Pattern::Neither) continue;
            Matrix2 next = interchange(cur, k, l, u, v);
            if (seen.insert(next).second) {
              if (seen.size() > state_cap) {
                throw Error(ErrorKind::Limit, "interchange search exceeded " +
                                                  std::to_string(state_cap) + " states");
              }
              frontier.push_back(std::move(next));
            }
          }
        }
      }
    }
  }
  return seen;
}

bool interchange_reachable(const Matrix2& a, const Matrix2& b, std::size_t state_cap) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::Shape, "reachability between matrices of different shapes");
  }
  if (!a.is_binary() || !b.is_binary()) {
    throw Error(ErrorKind::Range, "interchanges act on 0/1 matrices");
  }
  if (a == b) return true;
  if (marginals2(a) != marginals2(b)) return false;
  return interchange_class(a, state_cap).contains(b);
}

// ---- text formats ----------------------------------------------------------

namespace {

Natural read_natural(std::istream& in, const char* what) {
  std::string token;
  if (!(in >> token)) throw Error(ErrorKind::Format, std::string("missing ") + what);
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::Format, std::string("expected a natural number for ") + what +
                                       ", got '" + token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw Error(ErrorKind::Format, std::string(what) + " does not fit in 64 bits");
  }
}

}  // namespace

Tensor3 read_tensor(std::istream& in) {
  const Natural n = read_natural(in, "tensor side");
  if (n > 1024) throw Error(ErrorKind::Format, "tensor side " + std::to_string(n) + " too large");
  std::vector<Natural> entries(n * n * n);
  for (auto& x : entries) x = read_natural(in, "tensor entry");
  return Tensor3(n, std::move(entries));
}

void write_tensor(std::ostream& out, const Tensor3& t) {
  const std::size_t n = t.side();
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        out << t(i, j, k) << (k + 1 == n ? '\n' : ' ');
      }
    }
  }
}

Matrix2 read_matrix(std::istream& in) {
  const Natural m = read_natural(in, "matrix row count");
  const Natural n = read_natural(in, "matrix column count");
  if (m > 1u << 16 || n > 1u << 16) throw Error(ErrorKind::Format, "matrix too large");
  std::vector<Natural> entries(m * n);
  for (auto& x : entries) x = read_natural(in, "matrix entry");
  return Matrix2(m, n, std::move(entries));
}

void write_matrix(std::ostream& out, const Matrix2& a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out << a(i, j) << (j + 1 == a.cols() ? '\n' : ' ');
    }
  }
}

std::string to_string(const Tensor3& t) {
  std::ostringstream os;
  write_tensor(os, t);
  return os.str();
}

}  // namespace cthash
