#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cthash {

enum class InnerDigest { Md5, Sha256 };

const char* to_string(InnerDigest id) noexcept;
std::optional<InnerDigest> parse_inner_digest(std::string_view name);
std::size_t digest_size(InnerDigest id) noexcept;

struct Digest {
  InnerDigest id = InnerDigest::Md5;
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  friend bool operator==(const Digest&, const Digest&) = default;
};

// The conventional digest of `data` (RFC 1321 MD5 or FIPS 180-4 SHA-256).
Digest h2(std::span<const std::uint8_t> data, InnerDigest id);
Digest h2(std::string_view data, InnerDigest id);

}  // namespace cthash
