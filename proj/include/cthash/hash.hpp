#pragma once

// H1: pad the message to whole n^3-bit blocks, read each block as a 0/1
// tensor A and emit g2(A .* V) || g2(A .* W). H3 = H2(pack(H1(m))).
//
// Conventions the construction leaves open, fixed here:
//  - message bits are consumed MSB-first within each byte;
//  - the length field is 64 bits, big-endian, counting message bits;
//  - H1's output is packed MSB-first with a zero-padded final byte before H2.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cthash/bits.hpp"
#include "cthash/digest.hpp"
#include "cthash/params.hpp"
#include "cthash/tensor.hpp"

namespace cthash {

class Message {
 public:
  Message() = default;
  explicit Message(std::vector<std::uint8_t> bytes);
  explicit Message(std::string_view text);
  // Arbitrary bit length; the bits past `bits.size()` are not part of the message.
  explicit Message(const BitString& bits);

  const BitString& bits() const noexcept { return bits_; }
  std::uint64_t bit_length() const noexcept { return bits_.size(); }

 private:
  BitString bits_;
};

inline constexpr unsigned kLengthFieldBits = 64;

// Smallest multiple of n^3 that holds the message, the 1 marker and the
// length field.
std::uint64_t padded_length(std::uint64_t bit_length, std::size_t n);

// Message bits, a 1 bit, zero fill, then the 64-bit big-endian bit length.
// Requires n >= 2.
BitString pad(const Message& m, std::size_t n);

// Bits in (i, j, k) order, k fastest.
Tensor3 vect_mat(const BitString& block, std::size_t n);
Tensor3 vect_mat(const BitString& bits, std::size_t offset, std::size_t n);

// g2(A .* V) || g2(A .* W) for one tensor.
BitString h1_block(const Tensor3& a, const ParameterPair& params);

struct H1Options {
  // 0 or 1 processes blocks sequentially; more splits the blocks into
  // contiguous ranges, one thread each, and concatenates in block order.
  unsigned threads = 1;
};

BitString h1(const Message& m, const ParameterPair& params, H1Options options = {});

Digest h3(const Message& m, const ParameterPair& params, InnerDigest inner,
          H1Options options = {});

// Thread count from the CT_HASH_THREADS environment variable (unset or
// invalid means 1).
unsigned threads_from_env();

}  // namespace cthash
