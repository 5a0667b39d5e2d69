#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cthash {

// Exact-length bit sequence, stored packed MSB-first. Bits past `size()` in
// the final byte are always zero, so the packed bytes are also the canonical
// byte rendering (zero-padded final byte).
class BitString {
 public:
  BitString() = default;
  BitString(std::size_t count, bool value);

  // Takes the first `bit_length` bits of `bytes`, MSB-first.
  static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_length);
  static BitString from_bytes(std::span<const std::uint8_t> bytes) {
    return from_bytes(bytes, bytes.size() * 8);
  }
  // Parses an ASCII '0'/'1' string. Whitespace is skipped; anything else is
  // a Format error.
  static BitString parse(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool operator[](std::size_t pos) const noexcept {
    return (bytes_[pos >> 3] >> (7 - (pos & 7))) & 1u;
  }
  bool at(std::size_t pos) const;
  void set(std::size_t pos, bool value);
  void flip(std::size_t pos);

  void push_back(bool bit);
  // Appends the low `width` bits of `value`, most significant first.
  void append_bits(std::uint64_t value, unsigned width);
  void append(const BitString& other);
  BitString slice(std::size_t pos, std::size_t count) const;
  // Reads `width` bits starting at `pos` as an unsigned integer (width <= 64).
  std::uint64_t read_bits(std::size_t pos, unsigned width) const;
  std::size_t popcount() const noexcept;

  std::span<const std::uint8_t> packed() const noexcept { return bytes_; }
  std::string to_string() const;
  std::string to_hex() const;

  void reserve(std::size_t bits) { bytes_.reserve((bits + 7) / 8); }

  friend bool operator==(const BitString& a, const BitString& b) noexcept {
    return a.size_ == b.size_ && a.bytes_ == b.bytes_;
  }
  friend auto operator<=>(const BitString& a, const BitString& b) noexcept {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.bytes_ <=> b.bytes_;
  }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

BitString operator+(BitString a, const BitString& b);

std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace cthash
