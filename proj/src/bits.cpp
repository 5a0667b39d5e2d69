#include "cthash/bits.hpp"

#include <bit>
#include <cctype>

#include "cthash/error.hpp"

namespace cthash {

BitString::BitString(std::size_t count, bool value)
    : bytes_((count + 7) / 8, value ? 0xFF : 0x00), size_(count) {
  if (value && (count & 7)) bytes_.back() &= static_cast<std::uint8_t>(0xFF << (8 - (count & 7)));
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_length) {
  if (bit_length > bytes.size() * 8) {
    throw Error(ErrorKind::Range, "bit length exceeds the supplied bytes");
  }
  BitString out;
  out.size_ = bit_length;
  out.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((bit_length + 7) / 8));
  if (bit_length & 7) out.bytes_.back() &= static_cast<std::uint8_t>(0xFF << (8 - (bit_length & 7)));
  return out;
}

BitString BitString::parse(std::string_view text) {
  BitString out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(c == '1');
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::Format, std::string("bit string contains '") + c + "'");
    }
  }
  return out;
}

bool BitString::at(std::size_t pos) const {
  if (pos >= size_) throw Error(ErrorKind::Range, "bit position out of range");
  return (*this)[pos];
}

void BitString::set(std::size_t pos, bool value) {
  if (pos >= size_) throw Error(ErrorKind::Range, "bit position out of range");
  const auto mask = static_cast<std::uint8_t>(0x80u >> (pos & 7));
  if (value) {
    bytes_[pos >> 3] |= mask;
  } else {
    bytes_[pos >> 3] &= static_cast<std::uint8_t>(~mask);
  }
}

void BitString::flip(std::size_t pos) { set(pos, !at(pos)); }

void BitString::push_back(bool bit) {
  if ((size_ & 7) == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ & 7));
  ++size_;
}

void BitString::append_bits(std::uint64_t value, unsigned width) {
  if (width > 64) throw Error(ErrorKind::Range, "field wider than 64 bits");
  for (unsigned b = width; b-- > 0;) push_back((value >> b) & 1u);
}

void BitString::append(const BitString& other) {
  if (&other == this) {
    const BitString copy = other;
    append(copy);
    return;
  }
  if ((size_ & 7) == 0) {
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    size_ += other.size_;
    return;
  }
  const unsigned shift = size_ & 7;
  for (auto b : other.bytes_) {
    bytes_.back() |= static_cast<std::uint8_t>(b >> shift);
    bytes_.push_back(static_cast<std::uint8_t>(b << (8 - shift)));
  }
  size_ += other.size_;
  bytes_.resize((size_ + 7) / 8);
}

BitString BitString::slice(std::size_t pos, std::size_t count) const {
  if (pos > size_ || count > size_ - pos) throw Error(ErrorKind::Range, "slice out of range");
  BitString out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back((*this)[pos + i]);
  return out;
}

std::uint64_t BitString::read_bits(std::size_t pos, unsigned width) const {
  if (width > 64) throw Error(ErrorKind::Range, "field wider than 64 bits");
  if (pos > size_ || width > size_ - pos) throw Error(ErrorKind::Range, "field out of range");
  std::uint64_t v = 0;
  for (unsigned b = 0; b < width; ++b) v = (v << 1) | static_cast<std::uint64_t>((*this)[pos + b]);
  return v;
}

std::size_t BitString::popcount() const noexcept {
  std::size_t c = 0;
  for (auto byte : bytes_) c += static_cast<std::size_t>(std::popcount(byte));
  return c;
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back((*this)[i] ? '1' : '0');
  return s;
}

std::string BitString::to_hex() const { return cthash::to_hex(bytes_); }

BitString operator+(BitString a, const BitString& b) {
  a.append(b);
  return a;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xF]);
  }
  return s;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  std::string digits;
  for (char c : hex) {
    if (std::isxdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::Format, std::string("hex string contains '") + c + "'");
    }
  }
  if (digits.size() % 2) throw Error(ErrorKind::Format, "hex string has an odd digit count");
  std::vector<std::uint8_t> out(digits.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(std::stoi(digits.substr(2 * i, 2), nullptr, 16));
  }
  return out;
}

}  // namespace cthash
