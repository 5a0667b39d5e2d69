#include "cthash/digest.hpp"

#include <openssl/evp.h>

#include <memory>

#include "cthash/bits.hpp"
#include "cthash/error.hpp"

namespace cthash {

const char* to_string(InnerDigest id) noexcept {
  switch (id) {
    case InnerDigest::Md5: return "md5";
    case InnerDigest::Sha256: return "sha256";
  }
  return "?";
}

std::optional<InnerDigest> parse_inner_digest(std::string_view name) {
  if (name == "md5") return InnerDigest::Md5;
  if (name == "sha256" || name == "sha-256") return InnerDigest::Sha256;
  return std::nullopt;
}

std::size_t digest_size(InnerDigest id) noexcept { return id == InnerDigest::Md5 ? 16 : 32; }

std::string Digest::hex() const { return to_hex(bytes); }

Digest h2(std::span<const std::uint8_t> data, InnerDigest id) {
  const EVP_MD* md = id == InnerDigest::Md5 ? EVP_md5() : EVP_sha256();
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  Digest out{id, std::vector<std::uint8_t>(EVP_MAX_MD_SIZE)};
  unsigned len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), md, nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), out.bytes.data(), &len) != 1) {
    throw Error(ErrorKind::Io, std::string("libcrypto failed to compute ") + to_string(id));
  }
  out.bytes.resize(len);
  return out;
}

Digest h2(std::string_view data, InnerDigest id) {
  return h2(std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()), id);
}

}  // namespace cthash
