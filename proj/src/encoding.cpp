#include "cthash/encoding.hpp"

#include <algorithm>
#include <bit>

#include "cthash/error.hpp"

namespace cthash {

BitString bin(Natural value, unsigned width) {
  if (width > 64) throw Error(ErrorKind::Range, "bin width above 64");
  if (width < 64 && value >> width) {
    throw Error(ErrorKind::Range,
                std::to_string(value) + " does not fit on " + std::to_string(width) + " bits");
  }
  BitString out;
  out.append_bits(value, width);
  return out;
}

unsigned f0(Natural n) { return static_cast<unsigned>(std::bit_width(n)); }

namespace {

Natural max_of(const Matrix2& m) {
  const auto e = m.entries();
  return e.empty() ? 0 : *std::max_element(e.begin(), e.end());
}

}  // namespace

Natural f1(const Tensor3& t) { return max_of(marginals3(t).rows); }
Natural f2(const Tensor3& t) { return max_of(marginals3(t).columns); }
Natural f3(const Tensor3& t) { return max_of(marginals3(t).files); }

Natural f4(const Tensor3& t) { return marginals3(t).max_entry(); }

std::vector<Natural> g1(const Matrix2& a) {
  auto sums = marginals2(a);
  std::vector<Natural> out = std::move(sums.row_sums);
  out.insert(out.end(), sums.column_sums.begin(), sums.column_sums.end());
  return out;
}

unsigned g2_width(const MarginalTriple& m) { return std::max(1u, f0(m.max_entry())); }
unsigned g2_width(const Tensor3& t) { return g2_width(marginals3(t)); }

BitString encode_marginals(const MarginalTriple& m, unsigned width) {
  if (width > 64) throw Error(ErrorKind::Range, "field width above 64");
  const Natural limit = width == 64 ? ~Natural{0} : (Natural{1} << width) - 1;
  if (m.max_entry() > limit) {
    throw Error(ErrorKind::Range, "marginal " + std::to_string(m.max_entry()) +
                                      " does not fit on " + std::to_string(width) + " bits");
  }
  BitString out;
  const std::size_t n = m.side();
  out.reserve(3 * n * n * width);
  for (const Matrix2* part : {&m.rows, &m.columns, &m.files}) {
    for (Natural x : part->entries()) out.append_bits(x, width);
  }
  return out;
}

BitString g2(const Tensor3& t) {
  const MarginalTriple m = marginals3(t);
  return encode_marginals(m, g2_width(m));
}

BitString g2_fixed(const Tensor3& t, unsigned width) {
  return encode_marginals(marginals3(t), width);
}

MarginalTriple decode_marginals(const BitString& bits, std::size_t n, unsigned width) {
  if (width == 0 || width > 64 || bits.size() != 3 * n * n * width) {
    throw Error(ErrorKind::Shape, "a " + std::to_string(bits.size()) +
                                      "-bit string is not 3*n^2 fields of " +
                                      std::to_string(width) + " bits for n=" + std::to_string(n));
  }
  MarginalTriple m{Matrix2(n, n), Matrix2(n, n), Matrix2(n, n)};
  std::size_t pos = 0;
  for (Matrix2* part : {&m.rows, &m.columns, &m.files}) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        (*part)(a, b) = bits.read_bits(pos, width);
        pos += width;
      }
    }
  }
  return m;
}

}  // namespace cthash
